import pytest
from hypothesis import given, strategies as st

from schargraph.corners import (BAD, GOOD, GOOD_ATOMS, UGLY, CornerData, atom_good,
                                classify_corner, self_test)
from schargraph.signs import IN, OUT
from schargraph.sweeps import corner_configs


def test_self_test():
    assert self_test()


def test_four_good_atoms():
    assert len(GOOD_ATOMS) == 4


@pytest.mark.parametrize("c0,c1,o,eta,good", [
    (1, -1, OUT, 1, True),     # black to black
    (1, 1, IN, 1, True),       # black to white
    (1, 1, OUT, 1, True),
    (-1, 1, IN, 1, True),      # white to white
    (-1, -1, OUT, 1, False),
    (-1, -1, IN, 1, False),
    (1, -1, IN, 1, False),
    (-1, 1, OUT, 1, False),
])
def test_atom_table(c0, c1, o, eta, good):
    assert atom_good(c0, c1, o, eta) is good


corners = st.integers(0, 5).flatmap(lambda s: st.sampled_from(list(corner_configs(s))))


@given(corners)
def test_neg_is_involution(X):
    assert X.neg().neg() == X


@given(corners, st.sampled_from((1, -1)), st.sampled_from((1, -1)))
def test_classification_values(X, ec, ea):
    q = classify_corner(X, ec, ea)
    assert q.classification in (GOOD, BAD, UGLY)
    assert (q.classification == UGLY) == X.ugly
    assert len(q.atoms) == X.s + 1


@given(corners)
def test_index_counts_switches(X):
    assert X.index == 1 - X.s
    assert len(X.a_chars()) <= X.s


def test_split_sizes():
    X = CornerData(1, -1, (1, -1, 1), (IN, OUT, IN, IN))
    left, right = X.split(1)
    assert left.interior == (1,) and right.interior == (1,)
    assert left.end_char == -1 and right.start_char == -1


def test_orientation_count_checked():
    with pytest.raises(ValueError):
        CornerData(1, 1, (1,), (IN,))
