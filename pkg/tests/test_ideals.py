import pytest
from hypothesis import given, settings, strategies as st

from weaklefschetz.ideals import (
    IdealSyntaxError,
    MonomialIdeal,
    artinian_hilbert_function,
    contains,
    degree_piece,
    format_ideal,
    hilbert_function,
    is_artinian,
    is_stable,
    is_strongly_stable,
    lex_segment,
    lex_segment_monomials,
    max_stats,
    minimalize,
    parse_ideal,
    project_rho,
    standard_monomials,
    truncate_below,
)
from weaklefschetz.lefschetz import random_strongly_stable
from weaklefschetz.monomials import Monomial
from weaklefschetz.osequences import is_o_sequence

from conftest import letter_ideal, letter_monomial
from oracles import hilbert_inclusion_exclusion, monomial as mono


def test_minimalize_drops_multiples():
    ideal = minimalize([mono(2, 0), mono(2, 1), mono(0, 3), mono(2, 0)], 2)
    assert ideal.gens == (mono(2, 0), mono(0, 3))
    assert mono(3, 5) in ideal
    assert mono(1, 2) not in ideal


def test_contains_and_pieces():
    ideal = MonomialIdeal.parse("x1^2", "x1*x2", "x2^2", n=2)
    assert contains(ideal, mono(1, 1))
    assert degree_piece(ideal, 1) == []
    assert standard_monomials(ideal, 1) == [mono(1, 0), mono(0, 1)]
    assert hilbert_function(ideal, 3) == (1, 2, 0, 0)


def test_hilbert_of_zero_ideal():
    assert hilbert_function(MonomialIdeal.zero(3), 3) == (1, 3, 6, 10)
    assert not is_artinian(MonomialIdeal.zero(3))


def test_artinian():
    ideal = MonomialIdeal.parse("x1^2", "x2^3", n=2)
    assert is_artinian(ideal)
    assert artinian_hilbert_function(ideal).values == (1, 2, 2, 1)
    with pytest.raises(ValueError):
        artinian_hilbert_function(MonomialIdeal.parse("x1^2", n=2))


def test_stability_examples(worked):
    assert is_strongly_stable(worked["w2"])
    assert is_strongly_stable(worked["lex"])
    assert not is_stable(worked["i"])
    # stable but not strongly stable: x2*x3 -> x1*x3 leaves the ideal
    ideal = MonomialIdeal.parse("x1^2", "x1*x2", "x2^2", "x2*x3", n=3)
    assert is_stable(ideal) and not is_strongly_stable(ideal)
    assert not is_stable(MonomialIdeal.parse("x2", n=2))
    assert is_strongly_stable(MonomialIdeal.parse("x1", n=2))


def test_lex_segment_monomials():
    assert lex_segment_monomials(3, 2, 3) == [mono(2, 0, 0), mono(1, 1, 0), mono(1, 0, 1)]
    with pytest.raises(ValueError):
        lex_segment_monomials(2, 2, 4)


def test_lex_segment_rejects_non_o_sequence():
    with pytest.raises(ValueError):
        lex_segment((1, 2, 5))


def test_project_and_truncate(worked):
    w2 = worked["w2"]
    assert project_rho(w2, 3) == worked["w1_delta"]
    assert project_rho(worked["w1_delta"], 2) == worked["lex_delta2"]
    assert truncate_below(w2, 3).gens == tuple(g for g in w2.gens if g.degree <= 3)
    with pytest.raises(ValueError):
        project_rho(w2, 5)


def test_max_stats(worked):
    m, m_le = max_stats(worked["w1_delta"])
    # x^2 | xy, y^2 | xz^2, yz^2, z^4
    assert m == [1, 2, 3]
    assert m_le == [1, 3, 6]
    assert max_stats([letter_monomial("1", 2), mono(0, 1)], 2) == ([0, 1], [1, 2])


def test_parse_ideal_file():
    text = "# example\nvars 3\nx1^2\nx1*x2   # inline comment\nx1^2*x3\n\nx2^3\n"
    ideal, redundant = parse_ideal(text)
    assert ideal.n == 3
    assert set(ideal.gens) == {mono(2, 0, 0), mono(1, 1, 0), mono(0, 3, 0)}
    assert redundant == [mono(2, 0, 1)]


@pytest.mark.parametrize("text,line", [
    ("vars 2\nx3\n", 2),
    ("x1\nvars 2\n", 2),
    ("vars two\n", 1),
    ("vars 2\nx1^\n", 2),
])
def test_parse_ideal_errors(text, line):
    with pytest.raises(IdealSyntaxError) as err:
        parse_ideal(text)
    assert err.value.lineno == line


def test_parse_without_header_infers_n():
    ideal, _ = parse_ideal("x1^2\nx3\n")
    assert ideal.n == 3


def test_format_round_trip(worked):
    for ideal in worked.values():
        assert parse_ideal(format_ideal(ideal))[0] == ideal
    assert format_ideal(worked["lex_delta2"], "xy", header=False) == "x^2\nx*y\ny^2\n"


seeds = st.integers(0, 10 ** 6)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(2, 4))
def test_hilbert_matches_inclusion_exclusion(seed, n):
    ideal = random_strongly_stable(seed, n, 3)
    hf = hilbert_function(ideal, 5)
    gens = list(ideal.gens)
    if len(gens) <= 12:
        assert hf == tuple(hilbert_inclusion_exclusion(gens, n, d) for d in range(6))


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(2, 4))
def test_random_ideal_is_strongly_stable_and_artinian(seed, n):
    ideal = random_strongly_stable(seed, n, 3)
    assert is_strongly_stable(ideal) and is_stable(ideal)
    assert is_artinian(ideal)
    assert is_o_sequence(artinian_hilbert_function(ideal).values)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(2, 4))
def test_lex_has_same_hilbert_and_largest_max_counts(seed, n):
    ideal = random_strongly_stable(seed, n, 3)
    h = artinian_hilbert_function(ideal)
    lex = lex_segment(h)
    assert is_strongly_stable(lex)
    assert artinian_hilbert_function(lex) == h
    # Bigatti: degree by degree, lex pieces have the fewest monomials with max <= i
    for d in range(h.s + 2):
        _, lex_le = max_stats(degree_piece(lex, d), n)
        _, j_le = max_stats(degree_piece(ideal, d), n)
        assert all(a <= b for a, b in zip(lex_le, j_le))


def test_monomial_ideal_is_hashable_and_sorted():
    a = MonomialIdeal.from_generators([mono(0, 2), mono(1, 0)], 2)
    b = MonomialIdeal.from_generators([mono(1, 0), mono(0, 2)], 2)
    assert a == b and hash(a) == hash(b)
    assert a.gens[0] == mono(1, 0)
    assert a.max_generator_degree == 2
    assert a.generators_of_degree(2) == [mono(0, 2)]


def test_extend_and_add():
    ideal = MonomialIdeal.parse("x1^2", n=1).extend(2)
    assert ideal.n == 2
    bigger = ideal.add([Monomial.var(2, 2, 3), mono(3, 0)])
    assert bigger.gens == (mono(2, 0), mono(0, 3))


def test_letter_ideal_helper():
    assert letter_ideal("x^2, xy, x^2y") == MonomialIdeal.parse("x1^2", "x1*x2", n=4)
