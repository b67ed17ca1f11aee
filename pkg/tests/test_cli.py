import json
import subprocess
import sys

import pytest

from simplezeros.cli import run
from simplezeros.extremal import extremal_even
from simplezeros.polyseries import QuotientSeq, serialize_poly, serialize_quotients


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_constants(capsys):
    code, doc = call(capsys, "constants", "--upto", "8", "--json")
    assert code == 0
    assert doc["b"]["2"] == 4.0
    assert list(doc["b"]) == ["2", "4", "6", "8"]
    assert doc["version"] and doc["tol"] == 1e-12


def test_certify_double_root_exits_2(capsys, files):
    path = files("double_root.json", serialize_poly(extremal_even(1, 4.0)))
    code, doc = call(capsys, "certify", "--in", path)
    assert code == 2
    assert doc["certificate"]["verdict"] == "CONDITION_FAILS"
    assert doc["thresholds"]["b_degree"] == 4.0
    code, _ = call(capsys, "certify", "--in", path, "--theorem", "real")
    assert code == 0


def test_certify_not_applicable(capsys, files):
    path = files("p.json", serialize_quotients(QuotientSeq(1, 1, (5, 5))))
    code, _ = call(capsys, "certify", "--in", path, "--theorem", "even")
    assert code == 3


def test_certify_entire(capsys, files):
    path = files("q.json", serialize_quotients(QuotientSeq(1, 1, (5,) * 5)))
    assert call(capsys, "certify", "--in", path, "--theorem", "entire")[0] == 3
    code, doc = call(capsys, "certify", "--in", path, "--theorem", "entire", "--claimed-tail")
    assert code == 0
    assert doc["certificate"]["theorem"] == "TRUNCATED_ENTIRE_T1III"


def test_verify_certified(capsys, files):
    path = files("certified.json", serialize_quotients(QuotientSeq(1, 1, (5,) * 5)))
    code, doc = call(capsys, "verify", "--in", path)
    assert code == 0
    assert doc["annuli"]["counts"] == [1, 2, 3, 4, 5]
    assert doc["verdict"] == "PASS"


def test_verify_real(capsys, files):
    path = files("r.json", '{"coeffs": [[1,0],[1,0],[0.25,0]]}')
    code, doc = call(capsys, "verify", "--in", path, "--theorem", "real")
    assert code == 0 and doc["real"] is True


def test_roots(capsys, files):
    path = files("p.json", '{"coeffs": [[-1,0],[1e-9,0],[1,0]]}')
    code, doc = call(capsys, "roots", "--in", path, "--json")
    assert code == 0
    assert sorted(r[0] for r in doc["report"]["roots"]) == pytest.approx([-1, 1], abs=1e-8)


@pytest.mark.parametrize(
    "text, needle",
    [
        ('{"coeffs":[[1,0],[1,0],[0,0],[1,0]]}', "zero coefficient at index 2"),
        ("{oops", "malformed"),
        ('{"coeffs":[[1,0],[1,0]]}', "degree"),
    ],
)
def test_bad_input_exits_4(capsys, files, text, needle):
    code, doc = call(capsys, "certify", "--in", files("bad.json", text))
    assert code == 4
    assert needle in doc["error"]


def test_missing_file(capsys):
    assert call(capsys, "certify", "--in", "/nonexistent/x.json")[0] == 4


def test_sweep(capsys):
    code, doc = call(capsys, "sweep", "--degree", "4", "--trials", "200", "--seed", "3", "--json")
    assert code == 0
    s = doc["summary"]
    assert s["certified_verification_failures"] == 0
    assert s["verdicts"]["CERTIFIED"] == 200


def test_sweep_below_threshold(capsys):
    code, doc = call(capsys, "sweep", "--degree", "4", "--trials", "50", "--margin-low", "-0.5", "--margin-high", "-0.01")
    assert code == 0
    assert doc["summary"]["verdicts"]["CONDITION_FAILS"] == 50


@pytest.mark.parametrize("argv", [["sweep", "--trials", "0"], ["sweep", "--degree", "x"], ["constants", "--upto", "1"], ["nope"]])
def test_input_errors(capsys, argv):
    assert run(argv) == 4
    capsys.readouterr()


def test_extremal_and_cubic(capsys, tmp_path):
    out = tmp_path / "odd.json"
    code, doc = call(capsys, "extremal", "--family", "odd", "--n", "1", "--out", str(out))
    assert code == 0 and out.exists()
    assert doc["margin_vs_b_even"] > -1e-3
    code, doc = call(capsys, "cubic", "scan", "--grid", "1000")
    assert doc["scan"]["argmax_lambda"] == 0.0
    code, doc = call(capsys, "cubic", "locus", "--a", "4", "--b", "3.375")
    assert doc["locus_residual"] == [0.0, 0.0]
    code, doc = call(capsys, "extremal", "--family", "entire", "--n", "1", "--levels", "2")
    assert code == 5 and doc["kind"] == "numerical"


def test_byte_identical(capsys, files):
    path = files("p.json", serialize_quotients(QuotientSeq(1, 1j, (6, -6, 6j))))
    outs = []
    for _ in range(2):
        for argv in (["verify", "--in", path], ["sweep", "--degree", "3,6", "--trials", "30", "--seed", "9"]):
            run(argv)
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "simplezeros", "constants", "--upto", "4", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["b"]["2"] == 4.0
