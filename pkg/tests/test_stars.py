import itertools

import pytest
from hypothesis import given, settings, strategies as st

from schargraph import fixtures
from schargraph.orientation import conjugate_star
from schargraph.signs import IN, OUT
from schargraph.stars import (Star, StarError, a_tilde, check_sequence, derivative,
                              derivative_relative, inherited_type, is_coherent,
                              sequence_of_coherence, type_coherent)


@st.composite
def stars(draw, min_labels=1, max_labels=8):
    n = draw(st.integers(min_labels, max_labels))
    pars = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    L = draw(st.lists(st.integers(1, n), min_size=1, max_size=n, unique=True))
    omega = draw(st.lists(st.sampled_from((IN, OUT)), min_size=len(L), max_size=len(L)))
    sign = draw(st.sampled_from((1, -1)))
    return Star.make(sign, pars, L, omega)


def test_model_vertex_switches():
    T = fixtures.load_star("model-vertices")
    assert set(T.A) == {4, 7}
    assert set(T.C) == {1, 6}


def test_switches_alternate_and_balance():
    T = fixtures.load_star("model-vertices")
    p = T.partition
    assert len(p.A) == len(p.C)
    assert set(p.A) | set(p.C) | set(p.Bplus) | set(p.Bminus) == set(T.L)


@given(stars())
def test_bar_is_involution(T):
    assert T.bar().bar() == T
    assert set(T.bar().A) == set(T.C)


@given(stars(), st.sampled_from((1, -1)))
def test_derivative_of_reflection(T, chir):
    try:
        D = derivative(T, chir)
    except StarError:
        with pytest.raises(StarError):
            derivative(T.reflect(), chir)
        return
    assert derivative(T.reflect(), chir) == D.reflect()


@given(stars())
def test_reflection_keeps_switches(T):
    assert set(T.reflect().A) == set(T.A)
    assert set(T.reflect().C) == set(T.C)


@given(stars(min_labels=2), st.sampled_from((1, -1)))
def test_derivative_lives_on_clockwise_switches(T, chir):
    if not T.C:
        return
    D = derivative(T, chir)
    assert set(D.L) == set(T.C)


@given(stars(), st.data())
def test_relative_derivative_contains_switch_labels(T, data):
    L0 = data.draw(st.sets(st.sampled_from(T.L)))
    if not T.C and not L0:
        return
    D0 = derivative_relative(T, L0, 1)
    assert set(D0.L) == set(T.C) | set(L0)
    assert set(a_tilde(D0, L0)).isdisjoint(L0)


def test_derivative_needs_switches():
    T = Star.make(1, [1, -1, 1], [1, 2, 3], [OUT, OUT, OUT])
    with pytest.raises(StarError) as exc:
        derivative(T)
    assert exc.value.code == "NO_SWITCHES"


def test_bad_chirality():
    T = fixtures.load_star("model-vertices")
    with pytest.raises(StarError) as exc:
        derivative(T, "x")
    assert exc.value.code == "BAD_CHIRALITY"


def test_malformed_star_rejected():
    with pytest.raises(StarError):
        Star.make(1, [1, -1], [1, 2], [OUT])
    with pytest.raises(StarError):
        Star.make(1, [1, -1], [], [])
    with pytest.raises(StarError):
        Star.from_json({"sign": "+", "labels": [{"id": 1}], "L": [1], "omega": ["out"]})


def test_json_round_trip():
    T = fixtures.load_star("model-vertices")
    assert Star.from_json(T.to_json()) == T


def test_trivial_type_has_no_sequence():
    with pytest.raises(StarError) as exc:
        sequence_of_coherence((1, 1, 1), (1, -1, 1))
    assert exc.value.code == "TRIVIAL_TYPE"


def test_coherent_type_stops_immediately():
    seq = sequence_of_coherence((1, -1), (1, -1))
    assert seq.n == 1 and type_coherent(seq.stars[0])


def _first_minus_sequence(n):
    for pars in itertools.product((1, -1), repeat=n):
        for tau in itertools.product((1, -1), repeat=n):
            if len(set(tau)) == 1:
                continue
            seq = sequence_of_coherence(tau, pars)
            if -1 in seq.d_signs:
                return seq
    return None


def test_some_sequence_uses_negative_derivative():
    seq = _first_minus_sequence(8)
    assert seq is not None
    assert check_sequence(seq) == []
    assert seq.d_signs[-2:] == (-1, 1)


@settings(max_examples=200)
@given(st.integers(2, 8).flatmap(lambda n: st.tuples(
    st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n),
    st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))))
def test_sequences_are_valid(args):
    pars, tau = args
    if len(set(tau)) == 1:
        return
    seq = sequence_of_coherence(tau, pars)
    assert check_sequence(seq) == []
    assert seq.n <= len(tau) + 2


def test_check_sequence_detects_tampering():
    seq = _first_minus_sequence(8)
    bad = type(seq)(seq.stars[:1] + seq.stars[2:], seq.d_signs[1:], seq.tau)
    assert check_sequence(bad)


def test_conjugate_is_involution():
    T = Star.make(1, [1, -1, 1, -1], [1, 2, 3, 4], [OUT, IN, IN, OUT])
    C = conjugate_star(T)
    assert C != T
    assert conjugate_star(C) == T


@pytest.mark.parametrize("pars,L,code", [
    ((1, 1, -1, -1), (1, 2, 3, 4), "NON_ALTERNATING"),
    ((1, -1, 1, -1), (1, 2), "PARTIAL_TYPE"),
])
def test_conjugate_errors(pars, L, code):
    T = Star.make(1, list(pars), L, [OUT] * len(L))
    with pytest.raises(StarError) as exc:
        conjugate_star(T)
    assert exc.value.code == code


def test_inherited_type_on_full_l0_is_defined():
    found = 0
    for pars in itertools.product((1, -1), repeat=4):
        for tau in itertools.product((1, -1), repeat=4):
            if len(set(tau)) == 1:
                continue
            seq = sequence_of_coherence(tau, pars)
            try:
                it = inherited_type(seq, [1, 3])
            except StarError as exc:
                assert exc.code == "UGLY_CORNER"
                continue
            found += 1
            assert len(it.tau0) == 2 and it.L0 == (1, 3)
    assert found


def test_inherited_type_rejects_bad_l0():
    seq = sequence_of_coherence((1, -1), (1, -1))
    with pytest.raises(StarError) as exc:
        inherited_type(seq, [5])
    assert exc.value.code == "BAD_L0"


def test_coherence_of_model_vertex():
    T = fixtures.load_star("model-vertices")
    assert is_coherent(T) == (len({T.parity(a) for a in T.A}) == 1
                              and len({T.parity(c) for c in T.C}) == 1)
