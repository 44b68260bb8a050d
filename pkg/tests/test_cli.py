import io
import json
import subprocess
import sys

import pytest

from idpoly.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def compute_json(*argv):
    code, text = run("compute", "--format", "machine", *argv)
    assert code == 0
    return json.loads(text)


@pytest.mark.parametrize(
    "argv, coefficients",
    [
        (("--family", "path", "--n", "3", "--alg", "recursive"), ["0", "1", "1"]),
        (("--family", "complete", "--n", "5", "--alg", "brute"), ["0", "5"]),
        (("--family", "cycle", "--n", "7", "--alg", "inclusion-exclusion"), ["0", "0", "0", "7"]),
    ],
)
def test_compute_examples(argv, coefficients):
    rec = compute_json(*argv)
    assert rec["coefficients"] == coefficients
    assert set(rec) == {
        "command", "instance", "algorithm", "n", "coefficients", "id_number", "mis_count", "time_ms"
    }


def test_compute_derived_fields():
    rec = compute_json("--family", "cycle", "--n", "6", "--alg", "essential")
    assert rec["coefficients"] == ["0", "0", "3", "2"]
    assert rec["id_number"] == 2 and rec["mis_count"] == "5" and rec["n"] == 6


def test_compute_text_output():
    code, text = run("compute", "--family", "path", "--n", "4")
    assert code == 0
    assert "id(G,x):    3x^2" in text


def test_generate_examples(tmp_path):
    assert run("generate", "--family", "path", "--n", "4") == (0, "4 3\n0 1\n1 2\n2 3\n")
    assert run("generate", "--family", "cycle", "--n", "3") == (0, "3 3\n0 1\n1 2\n0 2\n")
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for path in (a, b):
        args = ("--family", "random", "--n", "5", "--prob", "0.5", "--seed", "7")
        assert run("generate", *args, "--out", str(path))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_generate_compute_round_trip(tmp_path):
    path = tmp_path / "g.txt"
    run("generate", "--family", "random", "--n", "9", "--seed", "3", "--out", str(path))
    results = {
        alg: compute_json("--input", str(path), "--alg", alg)["coefficients"]
        for alg in ("brute", "recursive", "inclusion-exclusion", "essential", "coefficient")
    }
    assert len(set(map(tuple, results.values()))) == 1


@pytest.mark.parametrize(
    "text, argv, code",
    [
        ("2 1\n0 2\n", (), 2),
        ("3 x\n", (), 2),
        ("2 2\n0 1\n0 0\n", ("--alg", "inclusion-exclusion"), 4),
        ("2 2\n0 1\n0 0\n", ("--alg", "coefficient"), 4),
        ("0 0\n", ("--alg", "essential"), 4),
        ("2 2\n0 1\n0 0\n", ("--alg", "brute"), 0),
        ("6 0\n", ("--alg", "brute", "--max-n", "5"), 3),
    ],
)
def test_compute_exit_codes(tmp_path, text, argv, code):
    path = tmp_path / "g.txt"
    path.write_text(text)
    assert run("compute", "--input", str(path), *argv)[0] == code


def test_compute_bound_exceeded():
    assert run("compute", "--family", "path", "--n", "27", "--alg", "brute")[0] == 3


def test_missing_file_and_input_conflicts(tmp_path):
    assert run("compute", "--input", str(tmp_path / "nope.txt"))[0] == 2
    assert run("compute")[0] == 2
    assert run("compute", "--family", "cycle", "--n", "2")[0] == 2


def test_verify_exhaustive_all():
    code, text = run("verify", "--scope", "all", "--max-n", "4", "--quiet")
    lines = text.strip().splitlines()
    assert code == 0
    assert lines[-1].startswith("SUMMARY") and "failed=0" in lines[-1]


def test_verify_alternating_sum_on_k1(tmp_path):
    path = tmp_path / "k1.txt"
    path.write_text("1 0\n")
    code, text = run("verify", "--scope", "alternating-sum", "--corpus", "files", "--input", str(path))
    assert code == 0
    assert text.splitlines()[0].startswith("PASS") and "value=1 - x" in text


def test_verify_machine_format():
    code, text = run(
        "verify", "--scope", "five-way", "--corpus", "random",
        "--count", "5", "--n", "7", "--seed", "1", "--format", "machine",
    )
    records = [json.loads(line) for line in text.splitlines()]
    assert code == 0 and len(records) == 6
    assert records[-1]["summary"] == {
        "identities": 1, "checks": 5, "passed": 5, "skipped": 0, "failed": 0
    }
    assert [r["instance"] for r in records[:-1]] == [f"random n=7 seed={s}" for s in range(1, 6)]


def test_verify_rejects_unknown_scope_and_large_corpus():
    assert run("verify", "--scope", "nonsense")[0] == 2
    assert run("verify", "--max-n", "40")[0] == 3


def test_bench_skips_over_bound():
    code, text = run("bench", "--algs", "brute,recursive", "--family", "path", "--n", "200",
                     "--format", "machine")
    rows = [json.loads(line) for line in text.splitlines()]
    assert code == 0
    assert [(r["algorithm"], r["status"]) for r in rows] == [("brute", "skipped"), ("recursive", "ok")]
    assert rows[1]["memo"] > 0


def test_bench_random_table():
    code, text = run("bench", "--algs", "brute,recursive,coefficient", "--n", "10", "--count", "2")
    body = text.splitlines()[2:]
    assert code == 0 and len(body) == 6
    assert all(" ok " in line for line in body)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "idpoly", "compute", "--family", "complete", "--n", "3",
         "--format", "machine"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["coefficients"] == ["0", "3"]
