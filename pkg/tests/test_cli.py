import csv
import io
import json
import subprocess
import sys

import pytest

from permstats.cli import BIJECTIONS, main
from permstats.verify import THEOREMS, enumerate_sn


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_stats_paper_example():
    code, text = run("stats", "4 5 3 1 6 2")
    assert code == 0
    doc = json.loads(text)
    assert doc["exc_hat"] == [5, 6] and doc["aexc"] == [1, 2] and doc["fix_hat"] == [3]
    assert doc["depth"] == 7 and doc["inv"] == 9 and doc["sign"] == -1
    assert doc["first_letter"] == 4


def test_stats_singleton():
    code, text = run("stats", "1")
    doc = json.loads(text)
    assert code == 0 and doc["depth"] == 0
    assert all(v == [] for k, v in doc.items() if isinstance(v, list) and k != "permutation")


def test_stats_image_and_stable_order():
    code, text = run("stats", "4,6,2,3,1,5")
    doc = json.loads(text)
    assert doc["asc2"] == [5, 6] and doc["des_values"] == [1, 2] and doc["suc_values"] == [3]
    assert run("stats", "4", "6", "2", "3", "1", "5")[1] == text
    assert list(doc)[:3] == ["permutation", "n", "first_letter"]


@pytest.mark.parametrize("text", ["4 5 5", "1;2", "x", "0 1"])
def test_stats_parse_failure(text, capsys):
    code, out = run("stats", text)
    assert code == 2 and out == ""
    assert "error" in capsys.readouterr().err


def test_map_examples(capsys):
    assert run("map", "--bijection", "phi-triple", "4 5 3 1 6 2") == (0, "4,6,2,3,1,5\n")
    assert run("map", "--bijection", "foata", "8 9 1 6 2 4 3 7 5") == (0, "8,7,3,1,9,5,2,6,4\n")
    code, out = run("map", "--bijection", "psi1", "2 1")
    assert code == 3 and out == ""
    assert "A1" in capsys.readouterr().err


def test_map_unknown_bijection():
    code, _ = run("map", "--bijection", "nope", "1 2")
    assert code == 2


@pytest.mark.parametrize("name, text, expected", [
    ("phi-triple", "2 3 1", "2,1,3"),
    ("phi-triple-inv", "2 1 3", "2,3,1"),
    ("foata", "3 2 1", "3,1,2"),
    ("foata-inv", "3 1 2", "3,2,1"),
    ("phi-tilde", "3 1 2", "3,1,2"),
    ("psi1", "1 4 2 5 3", "1,4,5,3,2"),
    ("psi2", "2 4 1 3", "2,4,1,3"),
    ("f", "2 1", "2,1"),
])
def test_map_every_name(name, text, expected):
    assert name in BIJECTIONS
    assert run("map", "--bijection", name, text) == (0, expected + "\n")


def test_map_roundtrip_all_of_s5():
    for p in enumerate_sn(5):
        _, image = run("map", "-b", "phi-triple", str(p))
        _, back = run("map", "-b", "phi-triple-inv", image.strip())
        assert back.strip() == str(p)


def test_trace_examples():
    code, text = run("trace", "4 5 3 1 6 2")
    assert code == 0
    assert "[0,4,6] [1,5] [2,3]" in text and "(6 4 / 2 1)" in text
    code, text = run("trace", "1 2 3")
    assert "pick=" not in text and text.strip().endswith("1,2,3")
    code, text = run("trace", "2 3 1")
    assert text.count("pick=") == 1 and "junction=2>1" in text
    assert run("trace", "1 1")[0] == 2


def test_verify_all_small():
    code, text = run("verify", "--n-max", "4")
    lines = text.strip().splitlines()
    assert code == 0
    assert len(lines) == len(THEOREMS) * 4 == 36
    assert all(line.startswith("PASS") for line in lines)


def test_verify_signed_drp_detail():
    code, text = run("verify", "--n-max", "3", "--theorem", "signed-drp")
    assert code == 0 and "1 - 2q + q^2" in text


@pytest.mark.parametrize("argv", [
    ("verify", "--n-max", "0"), ("verify", "--n-max", "10"),
    ("verify", "--theorem", "bogus"), ("verify", "--jobs", "0"),
])
def test_verify_bad_flags(argv):
    assert run(*argv)[0] == 2


def test_verify_counterexample_exit(monkeypatch):
    from permstats import verify
    monkeypatch.setattr(verify, "depth", lambda p: 0)
    code, text = run("verify", "--n-max", "2", "--theorem", "displacement")
    assert code == 1 and "first counterexample" in text and "witness=2,1" in text


def test_dist_json_polynomial():
    code, text = run("dist", "--n", "3", "--stats", "depth", "--format", "json")
    doc = json.loads(text)
    assert code == 0 and doc["variables"] == ["q"]
    assert doc["terms"] == [{"exponents": [0], "coefficient": 1},
                            {"exponents": [1], "coefficient": 2},
                            {"exponents": [2], "coefficient": 3}]


def test_dist_csv_table():
    code, text = run("dist", "--n", "3", "--stats", "suc-set", "--format", "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 0 and rows[0] == ["key", "count"]
    assert len(rows) == 5 and sum(int(r[1]) for r in rows[1:]) == 6


def test_dist_constant_and_signed():
    doc = json.loads(run("dist", "--n", "1", "--stats", "depth")[1])
    assert doc["terms"] == [{"exponents": [0], "coefficient": 1}]
    doc = json.loads(run("dist", "--n", "3", "--stats", "drp", "--signed")[1])
    assert [t["coefficient"] for t in doc["terms"]] == [1, -2, 1]


def test_dist_joint_csv():
    code, text = run("dist", "--n", "3", "--stats", "depth,exc", "--format", "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["q", "t", "coefficient"]
    assert rows[1:] == [["0", "0", "1"], ["1", "1", "2"], ["2", "1", "2"], ["2", "2", "1"]]


@pytest.mark.parametrize("argv", [
    ("dist", "--n", "3", "--stats", "maj"),
    ("dist", "--n", "0", "--stats", "depth"),
    ("dist", "--n", "3", "--stats", "suc-set", "--signed"),
    ("dist", "--n", "3", "--stats", "depth", "--format", "xml"),
])
def test_dist_bad_flags(argv):
    assert run(*argv)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "permstats", "map", "-b", "f", "1 4 2 5 3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1,4,5,3,2\n"
    proc = subprocess.run([sys.executable, "-m", "permstats", "map", "-b", "psi2", "1 2"],
                          capture_output=True, text=True)
    assert proc.returncode == 3 and proc.stdout == "" and proc.stderr
