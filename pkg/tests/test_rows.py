import pytest
import sympy
from conftest import BIG_COM8_ROW, letters_to_row
from hypothesis import given, settings
from hypothesis import strategies as st

from wildtree.bits import mask_of
from wildtree.errors import LimitExceeded
from wildtree.rows import (ERow, NRow, RankPoly, all_twos, cardinality, cardinality_noncover, contains,
                           enumerate_members, rank_polynomial, row_maximal_sets, row_minimal_sets)

R2 = "n1,1,1,n1,n1,n1,n2,n2,n2,n2"
R4 = "n2,n1,n1,n2,n2,n2,n2,n2,n2,n2"


def sets(masks):
    return sorted(masks)


@st.composite
def rows(draw, kind=None, max_m=10):
    kind = kind or draw(st.sampled_from([ERow, NRow]))
    m = draw(st.integers(0, max_m))
    classes = draw(st.lists(st.integers(0, 5), min_size=m, max_size=m))
    zeros = ones = twos = 0
    groups: dict[int, int] = {}
    for j, c in enumerate(classes):
        if c == 0:
            zeros |= 1 << j
        elif c == 1:
            ones |= 1 << j
        elif c == 2:
            twos |= 1 << j
        else:
            groups[c] = groups.get(c, 0) | 1 << j
    return kind(m, zeros, ones, twos, tuple(groups[k] for k in sorted(groups)))


class TestTextForm:
    @pytest.mark.parametrize("text", [R2, R4, "0,2,0,0,2,1", "e1,0,e2,0,e1,0,e2", ""])
    def test_round_trip(self, text):
        cls = NRow if "n" in text else ERow
        assert str(cls.parse(text)) == text

    def test_bare_symbol_is_one_bubble(self):
        assert ERow.parse("(e,e)") == ERow(2, bubbles=(0b11,))

    def test_relabeled(self):
        assert NRow.parse(R4).relabeled() == "n1,n2,n2,n1,n1,n1,n1,n1,n1,n1"

    @pytest.mark.parametrize("bad", ["0,3", "e0", "e1,x", "n1"])
    def test_bad_symbols(self, bad):
        with pytest.raises(ValueError):
            ERow.parse(bad)

    def test_invalid_parts(self):
        with pytest.raises(ValueError):
            ERow(3, zeros=0b011, ones=0b001, twos=0b100)
        with pytest.raises(ValueError):
            ERow(3, zeros=0b011)


class TestMembership:
    def test_012_row(self):
        r = ERow.parse("0,2,0,0,2,1")
        # ones={6}, twos={2,5}
        assert contains(r, mask_of([5, 6]))
        assert not contains(r, mask_of([5]))
        assert not contains(r, mask_of([1, 6]))
        assert sets(enumerate_members(r)) == sets(mask_of(s) for s in [[6], [2, 6], [5, 6], [2, 5, 6]])

    def test_pair_bubble(self):
        r = ERow.parse("e,e")
        assert not contains(r, 0)
        assert sets(enumerate_members(r)) == [0b01, 0b10, 0b11]

    def test_two_bubbles(self):
        r = ERow.parse("e1,0,e2,0,e1,0,e2")
        expected = [[1, 3], [1, 7], [1, 3, 7], [5, 3], [5, 7], [5, 3, 7], [1, 5, 3], [1, 5, 7], [1, 5, 3, 7]]
        assert sets(enumerate_members(r)) == sets(mask_of(s) for s in expected)

    def test_all_zeros(self):
        assert enumerate_members(ERow(4, zeros=0b1111)) == [0]

    def test_n_bubble(self):
        r = NRow.parse("n,n")
        assert sets(r.members()) == [0b00, 0b01, 0b10]
        assert 0b11 not in r

    def test_cap(self):
        with pytest.raises(LimitExceeded):
            all_twos(12).members(cap=100)


class TestCardinality:
    def test_mixed_row_1080(self):
        r = ERow.parse("1,0,2,1,2,2,e1,e1,e2,e2,e3,e3,e3,e3")
        assert cardinality(r) == 1080

    def test_all_twos(self):
        assert cardinality(all_twos(9)) == 512

    def test_theta_rows(self):
        assert cardinality_noncover(NRow.parse(R2)) == 225
        assert cardinality_noncover(NRow.parse(R4)) == 765

    def test_singleton_n_bubble_same_as_zero(self):
        r = NRow(3, twos=0b011, bubbles=(0b100,))
        assert r.cardinality == r.normalize().cardinality == 4
        assert r.normalize() == NRow(3, zeros=0b100, twos=0b011)


class TestExtremalSets:
    def test_fourth_row(self):
        r = ERow.parse("1,0,2,1,2,2,e1,e1,e2,e2,e3,e3,e3,e3")
        mins = row_minimal_sets(r)
        assert len(mins) == 16
        assert mask_of([1, 4, 8, 9, 13]) in mins
        assert {x.bit_count() for x in mins} == {5}

    def test_no_bubbles(self):
        r = ERow.parse("1,2,0,1")
        assert row_minimal_sets(r) == [mask_of([1, 4])]
        n = NRow.parse("1,2,0,1")
        assert row_maximal_sets(n) == [mask_of([1, 2, 4])]

    def test_capacity_5040_row(self):
        mins = row_minimal_sets(letters_to_row(BIG_COM8_ROW))
        assert len(mins) == 5040
        assert {x.bit_count() for x in mins} == {7}

    def test_theta_maximal(self):
        r2 = row_maximal_sets(NRow.parse(R2))
        assert len(r2) == 16 and {x.bit_count() for x in r2} == {8}
        r4 = row_maximal_sets(NRow.parse(R4))
        assert len(r4) == 16
        for x in r4:
            missing = ~x & 0b1111111111
            assert (missing & mask_of([2, 3])).bit_count() == 1
            assert (missing & mask_of([1, 4, 5, 6, 7, 8, 9, 10])).bit_count() == 1


def expanded(expr):
    y = sympy.Symbol("y")
    poly = sympy.Poly(sympy.expand(expr(y)), y)
    return RankPoly(tuple(int(c) for c in reversed(poly.all_coeffs())))


class TestRankPolynomial:
    def test_theta_r2(self):
        got = rank_polynomial(NRow.parse(R2))
        assert got == expanded(lambda y: y**2 * (1 + 4 * y + 6 * y**2 + 4 * y**3) ** 2)
        assert got.total() == 225

    def test_theta_r4(self):
        got = rank_polynomial(NRow.parse(R4))
        assert got == expanded(lambda y: ((1 + y) ** 2 - y**2) * ((1 + y) ** 8 - y**8))
        assert got.total() == 765

    def test_single_two(self):
        assert rank_polynomial(ERow(1, twos=1)).coeffs == (1, 1)

    def test_printed_as_coefficient_list(self):
        assert str(rank_polynomial(ERow.parse("e,e"))) == "0,2,1"


class TestProperties:
    @settings(max_examples=300, deadline=None)
    @given(rows())
    def test_counts_agree(self, r):
        members = enumerate_members(r)
        assert len(members) == len(set(members)) == r.cardinality
        poly = r.rank_polynomial()
        assert poly.total() == r.cardinality
        assert len(poly) == r.m + 1
        for i in range(r.m + 1):
            assert poly[i] == sum(1 for x in members if x.bit_count() == i)

    @settings(max_examples=300, deadline=None)
    @given(rows())
    def test_membership_matches_enumeration(self, r):
        members = set(enumerate_members(r))
        for x in range(1 << r.m):
            assert contains(r, x) == (x in members)

    @settings(max_examples=200, deadline=None)
    @given(rows(kind=ERow))
    def test_minimal_sets(self, r):
        members = set(r.members())
        mins = row_minimal_sets(r)
        assert len(mins) == r.capacity
        for x in mins:
            assert x in members
            assert x.bit_count() == r.ones.bit_count() + len(r.bubbles)
            assert not any(y != x and y & x == y for y in members)

    @settings(max_examples=200, deadline=None)
    @given(rows(kind=NRow))
    def test_maximal_sets(self, r):
        members = set(r.members())
        maxs = row_maximal_sets(r)
        assert len(maxs) == r.capacity
        for x in maxs:
            assert x in members
            assert x.bit_count() == r.m - r.zeros.bit_count() - len(r.bubbles)
            assert not any(y != x and y & x == x for y in members)

    @settings(max_examples=200, deadline=None)
    @given(rows())
    def test_normalize(self, r):
        once = r.normalize()
        assert once.normalize() == once
        assert set(once.members()) == set(r.members())
        assert all(b.bit_count() > 1 for b in once.bubbles)

    @settings(max_examples=100, deadline=None)
    @given(rows())
    def test_text_round_trip(self, r):
        assert type(r).parse(str(r)) == r
