"""Wildcard rows: compact set systems over the positions ``1..m``.

A row fixes some positions to 0 or 1, leaves others free (symbol ``2``) and
groups the rest into disjoint *bubbles*.  In an :class:`ERow` every bubble
must contain at least one 1; in an :class:`NRow` every bubble must contain
at least one 0.  Members are edge masks (see :mod:`wildtree.bits`).

Text form is one symbol per position, comma separated, e.g.
``"n1,1,1,n1,n1,n1,n2,n2,n2,n2"``.  Bubbles are numbered in list order.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import comb, prod
from typing import ClassVar, Iterator

from .bits import full, iter_bits, submasks
from .errors import LimitExceeded

DEFAULT_CAP = 1 << 20


@dataclass(frozen=True, slots=True)
class RankPoly:
    """Exact integer polynomial; ``coeffs[i]`` multiplies ``y**i``."""

    coeffs: tuple[int, ...]

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "RankPoly":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def binomial(cls, k: int) -> "RankPoly":
        """``(1 + y)**k``."""
        return cls(tuple(comb(k, i) for i in range(k + 1)))

    def __add__(self, other: "RankPoly") -> "RankPoly":
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return RankPoly(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                              for i in range(size)))

    def __sub__(self, other: "RankPoly") -> "RankPoly":
        return self + RankPoly(tuple(-c for c in other.coeffs))

    def __mul__(self, other: "RankPoly") -> "RankPoly":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RankPoly(tuple(out))

    def __pow__(self, k: int) -> "RankPoly":
        out = RankPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def padded(self, length: int) -> "RankPoly":
        trimmed = self.trimmed().coeffs
        if len(trimmed) > length:
            raise ValueError(f"degree {len(trimmed) - 1} does not fit {length} coefficients")
        return RankPoly(trimmed + (0,) * (length - len(trimmed)))

    def trimmed(self) -> "RankPoly":
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        return RankPoly(tuple(c))

    def total(self) -> int:
        return sum(self.coeffs)

    def __call__(self, y):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, RankPoly):
            return NotImplemented
        return self.trimmed().coeffs == other.trimmed().coeffs

    def __hash__(self) -> int:
        return hash(self.trimmed().coeffs)

    def __str__(self) -> str:
        return ",".join(map(str, self.coeffs))


@dataclass(frozen=True, slots=True)
class _Row:
    m: int
    zeros: int = 0
    ones: int = 0
    twos: int = 0
    bubbles: tuple[int, ...] = ()

    symbol: ClassVar[str] = "?"

    def __post_init__(self):
        object.__setattr__(self, "bubbles", tuple(self.bubbles))
        if self.m < 0:
            raise ValueError("row length must be >= 0")
        seen = 0
        for part in (self.zeros, self.ones, self.twos, *self.bubbles):
            if part < 0 or part >> self.m:
                raise ValueError("row part exceeds positions 1..m")
            if part & seen:
                raise ValueError("row parts overlap")
            seen |= part
        if any(b == 0 for b in self.bubbles):
            raise ValueError("empty bubble")
        if seen != full(self.m):
            raise ValueError("row parts do not cover positions 1..m")

    # --- derived views -------------------------------------------------

    @property
    def bubble_union(self) -> int:
        out = 0
        for b in self.bubbles:
            out |= b
        return out

    @property
    def capacity(self) -> int:
        """Product of bubble sizes: the number of row-minimal/maximal sets."""
        return prod(b.bit_count() for b in self.bubbles)

    @property
    def cardinality(self) -> int:
        # both kinds forbid exactly one of the 2**|b| assignments per bubble
        return (1 << self.twos.bit_count()) * prod((1 << b.bit_count()) - 1 for b in self.bubbles)

    def normalize(self):
        """Rewrite size-1 bubbles as fixed bits (1 for e-rows, 0 for n-rows)."""
        raise NotImplementedError

    def _bubble_ok(self, x: int, b: int) -> bool:
        raise NotImplementedError

    def __contains__(self, x: int) -> bool:
        if x & self.zeros or (x & self.ones) != self.ones:
            return False
        return all(self._bubble_ok(x, b) for b in self.bubbles)

    def _bubble_options(self, b: int) -> list[int]:
        raise NotImplementedError

    def members(self, cap: int = DEFAULT_CAP) -> list[int]:
        """Explicit list of member masks; refuses rows larger than ``cap``."""
        size = self.cardinality
        if size > cap:
            raise LimitExceeded(f"row has {size} members, cap is {cap}")
        choices = [list(submasks(self.twos))] + [self._bubble_options(b) for b in self.bubbles]
        return [self.ones | sum(parts) for parts in itertools.product(*choices)]

    def rank_polynomial(self) -> RankPoly:
        raise NotImplementedError

    # --- text form -----------------------------------------------------

    def symbols(self) -> list[str]:
        out = []
        owner = {}
        for k, b in enumerate(self.bubbles, start=1):
            for bit in iter_bits(b):
                owner[bit] = k
        for j in range(self.m):
            bit = 1 << j
            if self.zeros & bit:
                out.append("0")
            elif self.ones & bit:
                out.append("1")
            elif self.twos & bit:
                out.append("2")
            else:
                out.append(f"{self.symbol}{owner[bit]}")
        return out

    def __str__(self) -> str:
        return ",".join(self.symbols())

    @classmethod
    def parse(cls, text: str):
        """Inverse of ``str``; a bare ``e``/``n`` means bubble 1.

        Bubble numbers are labels only; bubbles are ordered by number.
        """
        body = text.strip().strip("()")
        tokens = [t.strip() for t in body.split(",")] if body else []
        zeros = ones = twos = 0
        groups: dict[int, int] = {}
        pattern = re.compile(rf"{cls.symbol}(\d*)$")
        for j, tok in enumerate(tokens):
            bit = 1 << j
            if tok == "0":
                zeros |= bit
            elif tok == "1":
                ones |= bit
            elif tok == "2":
                twos |= bit
            else:
                match = pattern.match(tok)
                if not match:
                    raise ValueError(f"bad symbol {tok!r} at position {j + 1}")
                k = int(match.group(1) or 1)
                if k < 1:
                    raise ValueError(f"bubble number must be positive at position {j + 1}")
                groups[k] = groups.get(k, 0) | bit
        return cls(len(tokens), zeros, ones, twos, tuple(groups[k] for k in sorted(groups)))

    def relabeled(self) -> str:
        """Text form with bubbles renumbered by first position (order-free key)."""
        return str(type(self)(self.m, self.zeros, self.ones, self.twos,
                              tuple(sorted(self.bubbles, key=lambda b: b & -b))))


class ERow(_Row):
    """012e-row: each bubble holds at least one 1."""

    __slots__ = ()
    symbol = "e"

    def normalize(self) -> "ERow":
        singles = 0
        kept = []
        for b in self.bubbles:
            if b & (b - 1):
                kept.append(b)
            else:
                singles |= b
        if not singles:
            return self
        return ERow(self.m, self.zeros, self.ones | singles, self.twos, tuple(kept))

    def _bubble_ok(self, x: int, b: int) -> bool:
        return bool(x & b)

    def _bubble_options(self, b: int) -> list[int]:
        return [s for s in submasks(b) if s]

    def minimal_sets(self) -> list[int]:
        """Twos set to 0 and exactly one 1 chosen in each bubble."""
        picks = [list(iter_bits(b)) for b in self.bubbles]
        return [self.ones | sum(p) for p in itertools.product(*picks)]

    def rank_polynomial(self) -> RankPoly:
        poly = RankPoly.monomial(self.ones.bit_count()) * RankPoly.binomial(self.twos.bit_count())
        for b in self.bubbles:
            poly = poly * (RankPoly.binomial(b.bit_count()) - RankPoly((1,)))
        return poly.padded(self.m + 1)


class NRow(_Row):
    """012n-row: each bubble holds at least one 0."""

    __slots__ = ()
    symbol = "n"

    def normalize(self) -> "NRow":
        singles = 0
        kept = []
        for b in self.bubbles:
            if b & (b - 1):
                kept.append(b)
            else:
                singles |= b
        if not singles:
            return self
        return NRow(self.m, self.zeros | singles, self.ones, self.twos, tuple(kept))

    def _bubble_ok(self, x: int, b: int) -> bool:
        return (x & b) != b

    def _bubble_options(self, b: int) -> list[int]:
        return [s for s in submasks(b) if s != b]

    def maximal_sets(self) -> list[int]:
        """Ones and twos set to 1 and exactly one position dropped per bubble."""
        base = self.ones | self.twos | self.bubble_union
        drops = [list(iter_bits(b)) for b in self.bubbles]
        return [base & ~sum(d) for d in itertools.product(*drops)]

    def rank_polynomial(self) -> RankPoly:
        poly = RankPoly.monomial(self.ones.bit_count()) * RankPoly.binomial(self.twos.bit_count())
        for b in self.bubbles:
            k = b.bit_count()
            poly = poly * (RankPoly.binomial(k) - RankPoly.monomial(k))
        return poly.padded(self.m + 1)


def contains(r: _Row, x: int) -> bool:
    return x in r


def cardinality(r: ERow) -> int:
    return r.cardinality


def cardinality_noncover(r: NRow) -> int:
    return r.cardinality


def row_minimal_sets(r: ERow) -> list[int]:
    return r.minimal_sets()


def row_maximal_sets(r: NRow) -> list[int]:
    return r.maximal_sets()


def enumerate_members(r: _Row, cap: int = DEFAULT_CAP) -> list[int]:
    return r.members(cap)


def rank_polynomial(r: _Row) -> RankPoly:
    return r.rank_polynomial()


def all_twos(m: int, kind: type[_Row] = ERow) -> _Row:
    return kind(m, twos=full(m))


def iter_members(rows, cap: int = DEFAULT_CAP) -> Iterator[int]:
    for r in rows:
        yield from r.members(cap)
