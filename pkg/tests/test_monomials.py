from math import comb

import pytest
from hypothesis import given, strategies as st

from weaklefschetz.monomials import (
    AmbientMismatch,
    Monomial,
    cmp_lex,
    cmp_revlex,
    divides,
    format_monomial,
    max_index,
    monomials_of_degree,
    parse_monomial,
)

from oracles import monomial as mono


def test_max_index():
    assert max_index(mono(2, 0, 1)) == 3
    assert max_index(Monomial.one(4)) is None
    assert max_index(mono(0, 5, 0, 0)) == 2


def test_divides():
    assert divides(mono(1, 1), mono(2, 3))
    assert not divides(mono(2, 0), mono(1, 1))
    assert divides(Monomial.one(3), mono(4, 0, 2))
    with pytest.raises(AmbientMismatch):
        divides(mono(1, 0), mono(1, 0, 0))


def test_cmp_revlex():
    # x^2 > xy and y^2 > xz in three variables
    assert cmp_revlex(mono(2, 0, 0), mono(1, 1, 0)) == 1
    assert cmp_revlex(mono(0, 2, 0), mono(1, 0, 1)) == 1
    assert cmp_revlex(mono(1, 2, 3), mono(1, 2, 3)) == 0
    # lower degree is smaller
    assert cmp_revlex(mono(0, 0, 5), mono(2, 0, 4)) == -1


def test_cmp_lex():
    assert cmp_lex(mono(2, 0, 0), mono(1, 1, 0)) == 1
    assert cmp_lex(mono(1, 0, 1), mono(0, 2, 0)) == 1
    assert cmp_lex(mono(0, 1, 1), mono(0, 1, 1)) == 0


def test_monomials_of_degree():
    x2, xy, y2, xz, yz, z2 = (mono(2, 0, 0), mono(1, 1, 0), mono(0, 2, 0),
                              mono(1, 0, 1), mono(0, 1, 1), mono(0, 0, 2))
    assert monomials_of_degree(3, 2) == [x2, xy, y2, xz, yz, z2]
    assert monomials_of_degree(4, 0) == [Monomial.one(4)]
    assert monomials_of_degree(0, 3) == []


def test_parse_and_format():
    m = parse_monomial("x1^2 * x3")
    assert m == mono(2, 0, 1)
    assert format_monomial(m) == "x1^2*x3"
    assert parse_monomial("1", 3) == Monomial.one(3)
    assert format_monomial(mono(1, 1, 0, 3), "xyzt") == "x*y*t^3"
    for bad in ("x0", "y1", "x1^", "x-1", ""):
        with pytest.raises(ValueError):
            parse_monomial(bad)


exponents = st.lists(st.integers(0, 4), min_size=3, max_size=3).map(tuple)


@given(exponents, exponents, exponents)
def test_orders_are_total_and_transitive(a, b, c):
    a, b, c = Monomial(a), Monomial(b), Monomial(c)
    for cmp in (cmp_revlex, cmp_lex):
        assert cmp(a, b) == -cmp(b, a)
        assert (cmp(a, b) == 0) == (a == b)
        if cmp(a, b) >= 0 and cmp(b, c) >= 0:
            assert cmp(a, c) >= 0


@given(exponents, exponents, st.integers(1, 3))
def test_revlex_is_multiplicative(a, b, i):
    a, b = Monomial(a), Monomial(b)
    if a.degree == b.degree and cmp_revlex(a, b) == 1:
        assert cmp_revlex(a.times_var(i), b.times_var(i)) == 1


@given(exponents, exponents)
def test_divides_bounds_degree(a, b):
    a, b = Monomial(a), Monomial(b)
    if divides(a, b):
        assert a.degree <= b.degree


@pytest.mark.parametrize("n,d", [(1, 5), (2, 4), (3, 3), (4, 5), (5, 2)])
def test_enumeration_count_and_order(n, d):
    mons = monomials_of_degree(n, d)
    assert len(mons) == comb(n + d - 1, d) == len(set(mons))
    assert all(cmp_revlex(a, b) == 1 for a, b in zip(mons, mons[1:]))
