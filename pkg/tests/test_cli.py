import json
import re
import subprocess
import sys

import pytest

from copocert.cli import main
from copocert.fileio import parse_matrix


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_exit_codes(tmp_path, capsys):
    code, out, _ = run(capsys, "check", write(tmp_path, "p.txt", "2\n0 1\n1 0\n"))
    assert code == 0 and "verdict: copositive" in out and "gamma: 0/1" in out
    code, out, _ = run(capsys, "check", write(tmp_path, "q.txt", "2\n1 -2\n-2 1\n"), "--method", "oracle")
    assert code == 1 and "gamma: -2/1" in out
    code, _, err = run(capsys, "check", write(tmp_path, "bad.txt", "2\n1 2\n3 4\n"))
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "check", str(tmp_path / "missing.txt"))
    assert code == 2


def test_check_paranoid_json(tmp_path, capsys):
    code, out, _ = run(capsys, "check", write(tmp_path, "q.txt", "2\n1 -2\n-2 1\n"), "--paranoid", "--format", "json")
    rep = json.loads(out)
    assert code == 1 and rep["cross_checked"] and rep["gamma"] == "-2/1" and rep["gap_ok"]


def test_dimension_limit_is_usage_error(tmp_path, capsys):
    code, _, err = run(capsys, "check", write(tmp_path, "m.txt", "3\n1 0 0\n1 0\n1\n"), "--max-n", "2")
    assert code == 2 and "limit" in err


def test_certify(tmp_path, capsys):
    path = write(tmp_path, "m1.txt", "2\n16 -8\n-8 3\n")
    out_vec = tmp_path / "y.txt"
    code, out, _ = run(capsys, "certify", path, "--out", str(out_vec))
    assert code == 1
    assert "certificate: 67108864/1 134217728/1" in out
    assert f"value: {-2 ** 54}/1" in out
    assert "bound_ok: True" in out
    assert out_vec.read_text() == "67108864/1\n134217728/1\n"
    code, out, _ = run(capsys, "certify", path, "--scheme", "dyadic", "--format", "json")
    rep = json.loads(out)
    assert code == 1 and rep["scheme"] == "dyadic" and rep["bits_le_10L^{3/2}"]
    code, _, _ = run(capsys, "certify", write(tmp_path, "z.txt", "1\n0\n"))
    assert code == 3


def test_verify(tmp_path, capsys):
    m = write(tmp_path, "m1.txt", "2\n16 -8\n-8 3\n")
    code, out, _ = run(capsys, "verify", m, write(tmp_path, "a.txt", "1\n2\n"))
    assert code == 0 and "value: -4/1" in out
    code, out, _ = run(capsys, "verify", m, write(tmp_path, "b.txt", "1\n0\n"))
    assert code == 1 and "value: 16/1" in out
    code, out, _ = run(capsys, "verify", m, write(tmp_path, "c.txt", "-1/1\n1/1\n"))
    assert code == 1 and "negative" in out
    code, _, _ = run(capsys, "verify", m, write(tmp_path, "d.txt", "1\n"))
    assert code == 2


def test_gen(tmp_path, capsys):
    code, out, err = run(capsys, "gen", "remark-b", "--k", "2", "--audit")
    assert code == 0
    assert parse_matrix(out).rows() == [[64, -16], [-16, 3]]
    assert "L_strict: 17" in err and "L_paper: 16" in err
    code, out, _ = run(capsys, "gen", "embed", "--k", "1", "--n", "4")
    assert parse_matrix(out).n == 4
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    run(capsys, "gen", "random", "--kind", "psd", "--n", "3", "--seed", "7", "-o", str(a))
    run(capsys, "gen", "random", "--kind", "psd", "--n", "3", "--seed", "7", "-o", str(b))
    assert a.read_text() == b.read_text()
    code, _, _ = run(capsys, "gen", "remark-b", "--k", "0")
    assert code == 2
    code, _, _ = run(capsys, "gen", "embed", "--k", "1", "--n", "1")
    assert code == 2


def test_check_and_certify_agree(tmp_path, capsys):
    from copocert import random_instance
    from copocert.fileio import serialize_matrix
    for seed in range(12):
        path = write(tmp_path, f"r{seed}.txt", serialize_matrix(random_instance("symmetric", 1 + seed % 3, 9, seed)))
        check_code, _, _ = run(capsys, "check", path)
        cert_code, _, _ = run(capsys, "certify", path)
        assert (check_code, cert_code) in [(0, 3), (1, 1)]


def test_reports_have_no_floats(tmp_path, capsys):
    path = write(tmp_path, "q.txt", "3\n1 -2 3\n-2 1 -5\n3 -5 2\n")
    for cmd in ("check", "certify"):
        _, out, _ = run(capsys, cmd, path, "--format", "json")
        rep = json.loads(out)
        for key, val in rep.items():
            assert not isinstance(val, float), key
        assert not re.search(r"\d\.\d", out)


def test_module_entry_point(tmp_path):
    path = write(tmp_path, "p.txt", "1\n-1\n")
    proc = subprocess.run([sys.executable, "-m", "copocert", "check", path], capture_output=True, text=True)
    assert proc.returncode == 1 and "not-copositive" in proc.stdout
