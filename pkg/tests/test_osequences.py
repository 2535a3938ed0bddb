import pytest
from hypothesis import given, settings, strategies as st

from weaklefschetz.ideals import hilbert_function, lex_segment
from weaklefschetz.osequences import (
    OSequence,
    check_m_times_wl,
    delta,
    is_m_times_wl,
    is_o_sequence,
    macaulay_bound,
    macaulay_representation,
    o_sequence_violation,
    parse_sequence,
)

from oracles import lex_growth_bound


def test_macaulay_bound_examples():
    assert macaulay_bound(0, 3) == 0
    assert macaulay_bound(3, 1) == 6
    assert macaulay_representation(7, 2) == [(4, 2), (1, 1)]
    assert macaulay_bound(7, 2) == 11
    with pytest.raises(ValueError):
        macaulay_bound(4, 0)


@pytest.mark.parametrize("v,d", [(v, d) for d in (1, 2, 3) for v in range(0, 9)])
def test_macaulay_bound_matches_lex_growth(v, d):
    assert macaulay_bound(v, d) == lex_growth_bound(v, d)


@given(st.integers(0, 60), st.integers(1, 5))
def test_macaulay_bound_monotone(v, d):
    assert macaulay_bound(v, d) <= macaulay_bound(v + 1, d)


def test_is_o_sequence():
    assert is_o_sequence((1, 4, 7, 8, 7, 4, 1))
    assert not is_o_sequence((1, 2, 5))
    assert "Macaulay" in o_sequence_violation((1, 2, 5))
    assert is_o_sequence((1,))
    assert not is_o_sequence((2, 3))
    assert not is_o_sequence((1, 2, 0, 1))
    assert is_o_sequence((1, 3, 0, 0))


def test_delta():
    assert delta((1, 4, 7, 8, 7, 4, 1)).values == (1, 3, 3, 1)
    assert delta((1, 3, 3, 1)).values == (1, 2)
    assert delta((1,)).values == (1,)
    with pytest.raises(ValueError):
        delta((1, 2, 1, 2))


def test_m_times_wl_example_sequence():
    report = check_m_times_wl((1, 4, 7, 8, 7, 4, 1), 2)
    assert report.ok
    assert [d.values for d in report.deltas] == [(1, 3, 3, 1), (1, 2)]
    assert report.lengths == [3, 1]


def test_m_times_wl_failures():
    assert not is_m_times_wl((1, 2, 1, 2), 1)
    assert is_m_times_wl((1, 2, 1, 2), 0) is False  # 1,2,1,2 is not even an O-sequence
    report = check_m_times_wl((1, 3, 6, 10, 3), 3)
    assert report.ok is False or report.lengths[0] >= report.lengths[-1]


@pytest.mark.parametrize("m", [0, 1, 2, 5])
def test_trivial_sequence(m):
    assert is_m_times_wl((1,), m)


def test_osequence_shape():
    h = OSequence((1, 3, 3, 1, 0, 0))
    assert h.values == (1, 3, 3, 1)
    assert (h.s, h.k) == (3, 1)
    assert OSequence((1, 2, 3)).k == 2
    assert parse_sequence("1, 4 7,8").values == (1, 4, 7, 8)
    with pytest.raises(ValueError):
        OSequence((1, 0, 2))


raw_sequences = st.lists(st.integers(1, 9), min_size=0, max_size=6).map(lambda t: (1,) + tuple(t))


@given(raw_sequences, st.integers(0, 4))
def test_strengthening_chain(h, m):
    if is_m_times_wl(h, m):
        assert all(is_m_times_wl(h, j) for j in range(m))
        lengths = check_m_times_wl(h, m).lengths
        assert lengths == sorted(lengths, reverse=True)


@settings(max_examples=60, deadline=None)
@given(raw_sequences)
def test_lex_round_trip(h):
    if is_o_sequence(h) and len(h) > 1:
        h = OSequence(h)
        assert hilbert_function(lex_segment(h), h.s + 1) == h.values + (0,)
