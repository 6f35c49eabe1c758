import json

import pytest

from qlie import ring as R
from qlie.cli import load_document, main
from qlie.closedform import build_closed_tables

from conftest import ctx_of


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate_b2_json(capsys):
    code, out, _ = run(capsys, "generate", "B", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["metadata"]["calibration"] == "1"
    hit = [e for e in doc["tables"]["l"] if e["root"] == [1, -1] and e["i"] == 1]
    assert hit[0]["value"] == "q^1/2 + q^3/2"
    assert set(doc["tables"]) == {"l", "r", "f3", "fud", "g", "N", "B", "Binv_cartan", "Binv_roots"}


def test_generate_c2_has_s_entries(capsys):
    _, out, _ = run(capsys, "generate", "C", "2")
    vals = [e["value"] for e in json.loads(out)["tables"]["N"]]
    assert any(v.endswith("*s") for v in vals)


def test_generate_d4_mixed_f_zero(capsys):
    _, out, _ = run(capsys, "generate", "D", "4")
    f3 = json.loads(out)["tables"]["f3"]
    mixed = [e for e in f3 if 3 in (e["i"], e["j"], e["k"]) and 4 in (e["i"], e["j"], e["k"])]
    assert mixed and all(e["value"] == "0" for e in mixed)


def test_generate_is_deterministic(capsys):
    _, a, _ = run(capsys, "generate", "C", "3")
    _, b, _ = run(capsys, "generate", "C", "3")
    assert a == b


@pytest.mark.parametrize("alg,rank", [("B", 2), ("C", 2), ("D", 4)])
def test_json_round_trip(capsys, alg, rank):
    _, out, _ = run(capsys, "generate", alg, str(rank))
    back = load_document(json.loads(out))
    ctx = ctx_of(alg, rank)
    t = ctx.tables
    for name in ("l", "r", "g", "f3", "fud"):
        assert back[name] == getattr(t, name), name
    assert back["N"] == {k: v for k, v in t.N.items()}
    assert back["B"] == {k: v for k, v in ctx.kt.B.items() if not v.is_zero()}
    assert back["Binv_roots"] == ctx.kt.Binv_roots


def test_closed_source_and_a_family(capsys):
    code, out, _ = run(capsys, "generate", "A", "2", "--family", "1/2,1/3")
    doc = json.loads(out)
    assert code == 0 and doc["metadata"]["family"] == ["1/2", "1/3"]
    _, out, _ = run(capsys, "generate", "B", "2", "--source", "closed")
    ct = build_closed_tables(ctx_of("B", 2).rs)
    assert load_document(json.loads(out))["N"] == ct.N


def test_text_format(capsys, tmp_path):
    path = tmp_path / "b2.txt"
    code, out, _ = run(capsys, "generate", "B", "2", "--format", "text", "-o", str(path))
    text = path.read_text()
    assert code == 0 and out == ""
    assert text.startswith("B2") and "[N]" in text and "q^1/2 + q^3/2" in text


def test_verify_all_passes(capsys):
    code, out, _ = run(capsys, "verify", "B", "2", "--suites", "all")
    assert code == 0 and "FAIL" not in out and out.rstrip().endswith("ALL PASS")


def test_verify_c2_reference(capsys):
    code, out, _ = run(capsys, "verify", "C", "2", "--suites", "c2")
    assert code == 0 and "PASS N table (32 entries)" in out


def test_injected_sign_error(capsys):
    code, out, _ = run(capsys, "verify", "B", "2", "--inject-sign-error")
    assert code == 1
    fails = [line for line in out.splitlines() if "FAIL " in line]
    assert fails and all("vs" in line or "[" in line for line in fails)


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "A", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and set(doc["suites"]) == {"killing", "alseries"}


def test_eval_classical(capsys):
    code, out, _ = run(capsys, "eval", "B", "2", "--q", "1")
    doc = json.loads(out)
    t = doc["tables"]
    assert code == 0
    assert all(e["value"] == "0" for e in t["f3"])
    assert [e["value"] for e in t["l"]] == [e["value"] for e in t["r"]]


def test_eval_c2_singlet_residual(capsys):
    code, out, _ = run(capsys, "eval", "C", "2", "--q", "4")
    doc = json.loads(out)
    assert code == 0
    assert doc["residuals"]["singlet relation per Cartan index"] == ["0", "0"]
    assert doc["metadata"]["q"] == "4"


def test_eval_value(capsys):
    _, out, _ = run(capsys, "eval", "B", "2", "--q", "4")
    hit = [e for e in json.loads(out)["tables"]["l"] if e["root"] == [1, -1] and e["i"] == 1]
    assert hit[0]["value"] == "10"  # q^1/2 + q^3/2 at q = 4


@pytest.mark.parametrize("argv", [
    ["generate", "B", "1"],
    ["generate", "D", "3"],
    ["eval", "B", "2"],
    ["eval", "B", "2", "--q", "2"],
    ["eval", "B", "2", "--q", "-4"],
    ["eval", "B", "2", "--q", "abc"],
    ["verify", "B", "2", "--suites", "nope"],
    ["verify", "B", "3", "--suites", "c2"],
    ["generate", "E", "6"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_bad_thread_hint(capsys, monkeypatch):
    monkeypatch.setenv("QLA_THREADS", "zero")
    assert main(["generate", "B", "2"]) == 2
    monkeypatch.setenv("QLA_THREADS", "4")
    assert main(["generate", "B", "2"]) == 0


def test_pole_exit_code(capsys, monkeypatch):
    import qlie.cli as cli

    def boom(*a, **k):
        raise R.PoleError("pole")
    monkeypatch.setattr(cli, "_singlet_residual", boom)
    assert main(["eval", "B", "2", "--q", "4"]) == 3


GOLDEN = __import__("pathlib").Path(__file__).parent / "golden" / "v1"


@pytest.mark.parametrize("name", ["B2", "C2", "D4"])
def test_matches_golden_file(capsys, name):
    _, out, _ = run(capsys, "generate", name[0], name[1:])
    assert out == (GOLDEN / f"{name}.json").read_text()
