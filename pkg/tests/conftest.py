import pytest

from schargraph import fixtures
from schargraph.enumeration import EnumerationSpec, enumerate_pairs


@pytest.fixture(scope="session")
def greatweb():
    return fixtures.load_pair("greatweb")


@pytest.fixture(scope="session")
def p2q2():
    return fixtures.load_pair("p2q2")


@pytest.fixture(scope="session")
def corpus44():
    """Iso-reduced p=q=4 pairs (about 10 s to build)."""
    return list(enumerate_pairs(EnumerationSpec(4, 4, iso_reduction=True)))


@pytest.fixture(scope="session")
def small_corpus():
    out = []
    for p, q in ((2, 2), (2, 4), (4, 2)):
        out.extend(enumerate_pairs(EnumerationSpec(p, q)))
    return out
