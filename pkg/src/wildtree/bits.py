"""Edge sets as Python ints: label ``j`` (1-based) is bit ``j - 1``."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(labels: Iterable[int]) -> int:
    out = 0
    for j in labels:
        if j < 1:
            raise ValueError(f"edge labels are 1-based, got {j}")
        out |= 1 << (j - 1)
    return out


def labels_of(mask: int) -> list[int]:
    """Sorted 1-based labels of the set bits of ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the single-bit masks of ``mask`` from low to high."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def full(m: int) -> int:
    return (1 << m) - 1


def format_labels(mask: int) -> str:
    return ",".join(map(str, labels_of(mask)))
