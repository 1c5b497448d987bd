import json

import pytest

from schargraph.cli import main
from schargraph import fixtures


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def gw_file(tmp_path, capsys):
    path = tmp_path / "greatweb.json"
    assert run(capsys, "fixtures", "--emit", "greatweb", "--out", str(path))[0] == 0
    return path


def test_width(capsys):
    code, out, _ = run(capsys, "width", "--bridge", "5")
    assert code == 0 and out.strip() == "50"


def test_width_json(capsys):
    code, out, _ = run(capsys, "width", "--bridge", "3", "--json")
    assert code == 0 and 18 in json.loads(out).values()


def test_validate_ok(capsys, gw_file):
    code, out, _ = run(capsys, "validate", str(gw_file), "--json")
    assert code == 0 and json.loads(out)["valid"]


def test_validate_broken(capsys, tmp_path):
    path = tmp_path / "broken.json"
    run(capsys, "fixtures", "--emit", "broken", "--out", str(path))
    code, out, _ = run(capsys, "validate", str(path), "--json")
    assert code == 1
    assert "PARITY_VIOLATION" in {v["code"] for v in json.loads(out)["violations"]}


def test_missing_file(capsys):
    code, _, err = run(capsys, "validate", "/nonexistent.json")
    assert code == 1 and err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["width"])
    assert exc.value.code == 2


def test_analyze_greatweb(capsys, gw_file):
    code, out, _ = run(capsys, "analyze", str(gw_file), "--json")
    assert code == 0
    data = json.loads(out)
    sch = {tuple(c["vertices"]) for c in data["scharlemann"]["cycles"]}
    assert (2, 4) in sch
    webs = {tuple(w["vertices"]) for w in data["great_webs"]}
    assert {(1, 3, 5, 7), (2, 4, 6, 8)} <= webs


def test_analyze_is_byte_stable(capsys, gw_file):
    a = run(capsys, "analyze", str(gw_file), "--json")[1]
    b = run(capsys, "analyze", str(gw_file), "--json")[1]
    assert a == b


def test_fixture_round_trip(capsys, gw_file):
    assert json.loads(gw_file.read_text()) == fixtures.raw("greatweb")


def test_fixture_list(capsys):
    code, out, _ = run(capsys, "fixtures", "--list", "--json")
    names = {f["name"] for f in json.loads(out)}
    assert {"greatweb", "model-vertices", "broken"} <= names


def test_unknown_fixture(capsys):
    assert run(capsys, "fixtures", "--emit", "nope")[0] == 1


def test_star_derive_and_cohere(capsys, tmp_path):
    path = tmp_path / "star.json"
    run(capsys, "fixtures", "--emit", "model-vertices", "--out", str(path))
    code, out, _ = run(capsys, "star", "derive", "--star", str(path), "--json")
    assert code == 0 and out
    code, out, _ = run(capsys, "star", "cohere", "--type", "++-+-", "--json")
    assert code == 0 and "stars" in out


def test_star_trivial_type_fails(capsys):
    assert run(capsys, "star", "cohere", "--type", "+++")[0] == 1


def test_star_conjugate(capsys):
    code, out, _ = run(capsys, "star", "conjugate", "--type", "+--+", "--json")
    assert code == 0 and out


def test_represent(capsys, gw_file, tmp_path):
    star = tmp_path / "s.json"
    star.write_text(json.dumps({"sign": "+", "labels": [{"id": i, "parity": "+-"[i % 2]}
                                                        for i in range(1, 9)],
                                "L": list(range(1, 9)),
                                "omega": ["out", "in", "in", "out", "out", "in", "in", "out"]}))
    code, out, _ = run(capsys, "represent", str(gw_file), "--star", str(star), "--json")
    assert code == 0 and json.loads(out)


def test_verify_lemma(capsys):
    code, out, _ = run(capsys, "verify", "--lemma", "TWO_COLOR", "--json")
    assert code == 0 and json.loads(out)["ok"]


def test_verify_smoke(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--suite", "smoke", "--out", str(path))
    assert code == 0 and json.loads(path.read_text())["ok"]


def test_enumerate(capsys, tmp_path):
    code, _, _ = run(capsys, "enumerate", "--p", "2", "--q", "2", "--out", str(tmp_path), "--iso")
    assert code == 0
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    files = sorted(tmp_path.glob("pair_*.json"))
    assert len(files) == 2 and manifest
    assert run(capsys, "validate", str(files[0]))[0] == 0


def test_enumerate_budget(capsys, tmp_path):
    assert run(capsys, "enumerate", "--p", "6", "--q", "6", "--out", str(tmp_path))[0] == 1
