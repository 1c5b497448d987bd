import time

import pytest

from schargraph import fixtures
from schargraph.harness import (REGISTRY, T, U, Corpus, CorpusConfig, HarnessError, lemma,
                                run_suite, star_family, verify_lemma)

U_IDS = {"EULER_INDEX", "GL_2_1_2", "GL_2_6_1", "GL_2_6_2", "GL_2_7_1", "INDEX_WITNESS",
         "TWO_COLOR", "COHERENCE_SEQ", "REV_REPRESENTATIVE", "RF_NO_SWITCH", "TREE_DICHOTOMY"}
T_IDS = {"SCH_UNIQUE", "NO_ISOLATED", "NO_NEW_GREAT_XCYCLE", "SDISK_PROPS", "EDGES_IN_SDISKS",
         "WEB_DIVISIBILITY", "HOFFMAN_CONDITIONS", "DELTA_DISJOINT_LABELS", "NO_AH_CIRCUITS"}


def test_registry_classes():
    assert {k for k, v in REGISTRY.items() if v.cls == U} == U_IDS
    assert T_IDS <= {k for k, v in REGISTRY.items() if v.cls == T}


def test_unknown_lemma():
    with pytest.raises(HarnessError) as exc:
        lemma("NOPE")
    assert exc.value.code == "UNKNOWN_LEMMA"


def test_unknown_profile():
    with pytest.raises(HarnessError) as exc:
        run_suite("huge")
    assert exc.value.code == "UNKNOWN_PROFILE"


def test_isolated_vertex_is_flagged_not_fatal():
    corpus = Corpus(CorpusConfig(), [("iso", fixtures.load_pair("isolated-vertex"))])
    rep = verify_lemma("NO_ISOLATED", corpus)
    r = rep.result("NO_ISOLATED")
    assert r.tally.failed == 1 and not r.fatal
    assert rep.exit_code == 0
    assert rep.to_json()["lemmas"][0]["flagged"] == 1


def test_star_family_is_seeded(greatweb):
    assert star_family(greatweb, 2, 3) == star_family(greatweb, 2, 3)
    assert len(star_family(greatweb, 2, 0)) == 2


@pytest.fixture(scope="module")
def smoke():
    t = time.perf_counter()
    rep = run_suite("smoke")
    return rep, time.perf_counter() - t


def test_smoke_passes_quickly(smoke):
    rep, secs = smoke
    assert rep.ok and rep.exit_code == 0
    assert secs < 10


def test_report_schema(smoke):
    data = smoke[0].to_json()
    assert {"profile", "seed", "corpus", "instances", "ok", "lemmas", "runtime"} <= set(data)
    for entry in data["lemmas"]:
        assert {"id", "class", "pass", "flagged", "fail", "skipped", "errors", "witnesses"} <= set(entry)
        assert entry["class"] in (U, T)
    assert set(e["id"] for e in data["lemmas"]) == set(REGISTRY)


def test_report_is_deterministic(smoke):
    again = run_suite("smoke")
    assert again.to_json(runtime=False) == smoke[0].to_json(runtime=False)


def test_text_report_lists_every_lemma(smoke):
    text = smoke[0].render_text()
    for k in REGISTRY:
        assert k in text
