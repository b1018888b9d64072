import json
import subprocess

import pytest


def run(cli, *args, cwd=None):
    return subprocess.run([cli, *args], capture_output=True, text=True, cwd=cwd)


@pytest.fixture()
def tbp(tmp_path, cli):
    spec = tmp_path / "tbp.json"
    spec.write_text('{"variant": "DyadicBlocks", "horizon": 4096, "k": 2, "block_parity_rule": [0, 1]}')
    out = tmp_path / "tbp.txt"
    r = run(cli, "generate", "--spec", str(spec), "--out", str(out))
    assert r.returncode == 0, r.stderr
    return out


def test_exit_codes(cli, tmp_path, tbp):
    r = run(cli, "--bogus")
    assert r.returncode == 2
    assert "Usage" in r.stderr
    assert run(cli, "classify", "--set", str(tbp), "--bogus").returncode == 2
    assert run(cli, "classify", "--set", str(tmp_path / "nope.txt")).returncode == 3
    bad = tmp_path / "bad.txt"
    bad.write_text("H=4 E=8\nmembers: 1\n")
    assert run(cli, "classify", "--set", str(bad)).returncode == 4
    assert run(cli, "classify", "--set", str(tbp), "--syndetic", "5000").returncode == 5
    assert run(cli, "partition", "--mode", "thick", "--set", str(tbp), "--out1", "a", "--out2", "b").returncode == 2


def test_classify_and_cssd_reports(cli, tmp_path, tbp):
    ev = tmp_path / "evens.txt"
    ev.write_text("H=64 E=64\nmembers: " + " ".join(str(i) for i in range(0, 64, 2)) + "\n")
    r = run(cli, "classify", "--set", str(ev), "--syndetic", "2")
    assert "syndetic N=2 HoldsOnWindow" in r.stdout
    r = run(cli, "cssd", "--set", str(tbp))
    assert "FailsOnWindow F={3}" in r.stdout
    j = json.loads(run(cli, "cssd", "--set", str(tbp), "--json").stdout)
    assert j["verdict"]["status"] == "FailsOnWindow"
    assert j["verdict"]["F"] == [3]


def test_output_is_deterministic(cli, tbp):
    args = ("classify", "--set", str(tbp), "--syndetic", "3", "--from", "1", "--ip", "2")
    assert run(cli, *args).stdout == run(cli, *args).stdout
    lab = ("family-lab", "--n", "3", "--json")
    assert run(cli, *lab).stdout == run(cli, *lab).stdout


def test_punch_trace_and_round_trip(cli, tmp_path, tbp):
    trace = tmp_path / "t.csv"
    derived = tmp_path / "b.txt"
    r = run(cli, "punch", "run", "--set", str(tbp), "--steps", "1024", "--trace", str(trace),
            "--derived", str(derived), "--verify", "8")
    assert r.returncode == 5  # 0 is not in the set
    r = run(cli, "punch", "run", "--set", str(tbp), "--append-zero", "--steps", "1024", "--trace", str(trace),
            "--derived", str(derived), "--verify", "8")
    assert r.returncode == 0, r.stderr
    assert "failures=0" in r.stdout
    lines = trace.read_text().splitlines()
    assert lines[0] == "n,nu2,nuA,wstart,wlen,alpha0"
    assert len(lines) == 1026
    r = run(cli, "classify", "--set", str(derived))
    assert r.returncode == 0


def test_written_sets_reparse(cli, tmp_path, tbp):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert run(cli, "partition", "--mode", "syndetic", "--set", str(tbp), "--out1", str(a), "--out2", str(b)).returncode == 0
    for p in (a, b):
        assert run(cli, "classify", "--set", str(p)).returncode == 0
    r = run(cli, "partition", "--mode", "rotation", "--horizon", "1024", "--out1", str(a), "--out2", str(b))
    assert r.returncode == 0
    assert "HoldsOnWindow" in run(cli, "cssd", "--set", str(a), "--f-max", "1", "--f-bound", "16").stdout


def test_battery(cli, tmp_path):
    spec = tmp_path / "ru.json"
    blocks = [[1 << i, 1 << (i + 1)] for i in range(14)]
    spec.write_text(json.dumps({"variant": "ResidueThickUnion", "horizon": 1 << 14, "moduli": [3, 5, 7],
                                "residues": [1, 1, 1], "schedule": blocks}))
    out = tmp_path / "ru.txt"
    assert run(cli, "generate", "--spec", str(spec), "--out", str(out)).returncode == 0
    r = run(cli, "battery", "--against", str(out))
    assert r.stdout.count("meets=true") == 20
    assert r.stdout.strip().endswith("missed 0")
