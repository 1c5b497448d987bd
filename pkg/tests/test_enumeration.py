import pytest

from schargraph.core import validate_pair
from schargraph.enumeration import (BudgetExceeded, EnumerationSpec, balanced_patterns,
                                    canonical_form, enumerate_pairs)
from schargraph.mapenum import even_maps, rooted_even_count


@pytest.mark.parametrize("p,q,total,iso", [(2, 2, 8, 2), (2, 4, 136, 20), (4, 2, 136, 20)])
def test_small_counts(p, q, total, iso):
    assert sum(1 for _ in enumerate_pairs(EnumerationSpec(p, q))) == total
    assert sum(1 for _ in enumerate_pairs(EnumerationSpec(p, q, iso_reduction=True))) == iso


def test_iso_count_44(corpus44):
    assert len(corpus44) == 4440
    assert len({canonical_form(x) for x in corpus44}) == 4440


def test_enumerated_pairs_validate(small_corpus):
    for pair in small_corpus:
        assert validate_pair(pair).ok


def test_deterministic_order():
    a = [x.matching for x in enumerate_pairs(EnumerationSpec(2, 4))]
    b = [x.matching for x in enumerate_pairs(EnumerationSpec(2, 4))]
    assert a == b


def test_unbalanced_signs_give_nothing():
    assert list(enumerate_pairs(EnumerationSpec(2, 2, signs_p=(1, 1)))) == []


def test_balanced_patterns():
    pats = balanced_patterns(4)
    assert len(pats) == 6 and pats[0] == (1, 1, -1, -1)


def test_budget(monkeypatch):
    monkeypatch.setenv("SCHARGRAPH_BUDGET", "4")
    with pytest.raises(BudgetExceeded):
        next(enumerate_pairs(EnumerationSpec(2, 4)))
    with pytest.raises(BudgetExceeded):
        next(enumerate_pairs(EnumerationSpec(6, 6)))


def test_even_map_counts():
    maps = even_maps(6)
    assert [len(maps[k]) for k in range(1, 7)] == [1, 2, 4, 12, 34, 154]


def test_rooted_counts_match_formula():
    maps = even_maps(5)
    for k in range(1, 6):
        rooted = sum(2 * k // m.automorphisms for m in maps[k])
        assert rooted == rooted_even_count(k)
