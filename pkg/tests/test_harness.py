import json

import pytest

from skewschubert.harness import cli, identities, methods, scan
from skewschubert.harness.cli import main
from skewschubert.perm import Perm
from skewschubert.poly import const, parse_poly
from skewschubert.skewop import Verdict


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def strip(records_path):
    rows = [json.loads(line) for line in open(records_path)]
    for r in rows:
        r.pop("elapsed_ms")
    return sorted(json.dumps(r, sort_keys=True) for r in rows)


def test_cli_schubert(capsys):
    assert run(capsys, "schubert", "--n", "4", "--perm", "2,1,4,3")[:2] == (0, "x1^2 + x1*x2 + x1*x3\n")


def test_cli_skew_apply(capsys):
    code, out, _ = run(capsys, "skew-apply", "--n", "4", "--w", "s:2,1,3,2,1", "--v", "s:2,1",
                       "--poly", "x1^3*x2^2")
    assert (code, out) == (0, "x1^2 + x1*x4 + x4^2\n")


def test_cli_constants_all(capsys):
    code, out, _ = run(capsys, "constants", "--n", "3", "--u", "s:1", "--v", "s:1", "--method", "all")
    assert code == 0
    assert out.splitlines() == ["product: {312:1}", "skew: {312:1}", "paths: {312:1}", "agree"]


def test_cli_constants_disagreement_exit(capsys, monkeypatch):
    bad = dict(methods._DISPATCH)
    bad["paths"] = lambda u, v, n: {Perm((3, 1, 2)): 2}
    monkeypatch.setattr(methods, "_DISPATCH", bad)
    code, out, _ = run(capsys, "constants", "--n", "3", "--u", "s:1", "--v", "s:1", "--method", "all")
    assert code == 1 and "DISAGREE at 312" in out


def test_cli_json_format(capsys):
    code, out, _ = run(capsys, "--format", "json", "constants", "--n", "3", "--u", "213", "--v", "132")
    data = json.loads(out)
    assert code == 0
    assert data["result"]["coeffs"] == [{"perm": [2, 3, 1], "c": 1}, {"perm": [3, 1, 2], "c": 1}]


def test_cli_other_commands(capsys):
    assert run(capsys, "skew-schubert", "--n", "4", "--w", "3241", "--v", "2134")[1].strip() \
        == str(parse_poly("(x1^2+x1*x4+x4^2)*x2"))
    assert run(capsys, "key", "--alpha", "0,1")[1] == "x1 + x2\n"
    assert run(capsys, "schur", "--lambda", "2,1", "--mu", "1", "--n", "2")[1] == "x1^2 + 2*x1*x2 + x2^2\n"
    assert run(capsys, "schur", "--lambda", "2,1", "--mu", "1", "--nu", "1,1", "--n", "2")[1] == "1\n"
    code, out, _ = run(capsys, "bracket", "--n", "4", "--w", "4312", "--v", "3124", "--search", "10000")
    assert code == 0 and out.splitlines()[-1] == "= [14][34][23]"


@pytest.mark.parametrize("argv", [
    ["nope"],
    ["schubert", "--n", "3"],
    ["schubert", "--n", "3", "--perm", "2,1,4,3"],
    ["skew-apply", "--n", "3", "--w", "213", "--v", "132", "--poly", "x1"],
    ["skew-apply", "--n", "3", "--w", "321", "--v", "132", "--poly", "x1 +"],
    ["constants", "--n", "3", "--u", "213"],
    ["schubert", "--n", "40", "--perm", "1"],
])
def test_cli_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_cli_deterministic(capsys):
    argv = ["--format", "json", "bracket", "--n", "4", "--w", "4312", "--v", "3124", "--search", "500"]
    assert run(capsys, *argv) == run(capsys, *argv)
    argv = ["constants", "--n", "4", "--u", "1342", "--v", "2143", "--method", "all"]
    assert run(capsys, *argv) == run(capsys, *argv)


def test_scan_resume_matches_uninterrupted(tmp_path):
    full = tmp_path / "full.jsonl"
    part = tmp_path / "part.jsonl"
    s = scan.run_scan(3, "full", full)
    assert s["complete"] and s["negative"] == 0
    first = scan.run_scan(3, "full", part, max_records=40)
    assert first["new"] == 40 and not first["complete"]
    second = scan.run_scan(3, "full", part, resume=True)
    assert second["skipped"] == 40 and second["complete"]
    assert strip(full) == strip(part)
    again = scan.run_scan(3, "full", part, resume=True)
    assert again["new"] == 0


def test_scan_truncated_tail_is_recovered(tmp_path):
    out = tmp_path / "s.jsonl"
    scan.run_scan(3, "edges", out, max_records=10)
    with open(out, "a") as fh:
        fh.write('{"n": 3, "w": [3,')
    summary = scan.run_scan(3, "edges", out, resume=True)
    assert summary["complete"] and summary["skipped"] == 10
    assert len(strip(out)) == summary["tasks"]


def test_scan_corrupt_line_rejected(tmp_path):
    out = tmp_path / "s.jsonl"
    scan.run_scan(3, "edges", out, max_records=5)
    lines = out.read_text().splitlines()
    lines[2] = "garbage"
    out.write_text("\n".join(lines) + "\n")
    with pytest.raises(scan.ScanError):
        scan.run_scan(3, "edges", out, resume=True)


def test_scan_parallel_same_records(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    scan.run_scan(4, "edges", a)
    scan.run_scan(4, "edges", b, jobs=3)
    assert strip(a) == strip(b)


def test_scan_rank_cap(tmp_path, monkeypatch):
    monkeypatch.setenv("SCHUBERT_MAX_N", "3")
    with pytest.raises(scan.ScanError):
        scan.run_scan(4, "edges", tmp_path / "x.jsonl")


def test_scan_unwritable(tmp_path, capsys):
    target = tmp_path / "missing" / "x.jsonl"
    assert run(capsys, "scan", "--n", "3", "--mode", "edges", "--out", str(target))[0] == 2


def test_scan_negative_is_reported(tmp_path, capsys, monkeypatch):
    witness = parse_poly("x1 - x2")
    monkeypatch.setattr(scan, "conjecture1_check",
                        lambda w, v, u: Verdict(False, witness) if u == Perm((1, 3, 2)) else Verdict(True))
    out = tmp_path / "neg.jsonl"
    code, text, _ = run(capsys, "scan", "--n", "3", "--mode", "edges", "--out", str(out))
    assert code == 1 and "NEGATIVE" in text
    rows = [json.loads(line) for line in open(out)]
    neg = [r for r in rows if not r["positive"]]
    assert neg and all(r["witness"] == witness.to_json() for r in neg)


def test_scan_record_invariant():
    with pytest.raises(ValueError):
        scan.ScanRecord(3, Perm((1, 2, 3)), Perm((1, 2, 3)), Perm((1, 2, 3)), True, const(1), 0)


def test_verify_passes_small(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--seed", "1")
    assert code == 0
    assert out.splitlines()[-1].endswith("passed")


def test_verify_detects_injected_fault(capsys, monkeypatch):
    real = identities.swap
    monkeypatch.setattr(identities, "swap", lambda f, i, j: real(f, i, j) + 1)
    code, out, _ = run(capsys, "verify", "--n", "3", "--only", "divdiff.leibniz")
    assert code == 1 and "FAIL divdiff.leibniz" in out


def test_identity_run_is_seeded():
    a = identities.run_identities(3, 7, ["poly", "divdiff.leibniz"])
    b = identities.run_identities(3, 7, ["poly", "divdiff.leibniz"])
    assert [(r.name, r.checks, r.passed) for r in a] == [(r.name, r.checks, r.passed) for r in b]


def test_cli_module_exports():
    assert cli.format_expansion({Perm((3, 1, 2)): 1, Perm((2, 3, 1)): -2}) == "{231:-2, 312:1}"
