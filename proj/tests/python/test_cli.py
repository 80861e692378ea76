"""CLI integration checks: determinism, exit codes, output formats."""

import json
import math
import os
import subprocess
import sys
import tempfile


def run(cli, *args, cwd):
    return subprocess.run([cli, *args], cwd=cwd, capture_output=True, text=True)


def test_sample_csv(cli, tmp):
    r = run(cli, "--seed", "7", "sample", "--theta", "1", "--n", "20000", "--out", "s.csv", cwd=tmp)
    assert r.returncode == 0, r.stderr
    lines = open(os.path.join(tmp, "s.csv")).read().splitlines()
    assert lines[0].startswith("# tool=plancherel")
    assert any(line.startswith("# seed=7") for line in lines[:4])
    freq = None
    for line in lines:
        if line.startswith('"[]"'):
            freq = float(line.split(",")[-1])
    assert freq is not None
    assert abs(freq - math.exp(-1)) < 0.015, freq


def test_kernel_table(cli, tmp):
    r = run(cli, "kernel", "--theta", "1", "--grid", "-7/2..7/2", "--out", "k.csv", cwd=tmp)
    assert r.returncode == 0, r.stderr
    rows = [line for line in open(os.path.join(tmp, "k.csv")) if not line.startswith("#")]
    header, data = rows[0], rows[1:]
    assert header.strip() == "s,x,t,y,value,method,error_estimate"
    assert len(data) == 64  # 8x8 grid
    diag = [r for r in data if r.split(",")[1] == "1/2" and r.split(",")[3] == "1/2"]
    assert len(diag) == 1
    assert abs(float(diag[0].split(",")[4]) - 0.4749364595077652) < 1e-10


def test_determinism(cli, tmp):
    for d in ("a", "b"):
        os.makedirs(os.path.join(tmp, d), exist_ok=True)
        r = run(cli, "--seed", "3", "--out-dir", d, "verify", "--suite", "kernel-static",
                "--quick", cwd=tmp)
        assert r.returncode == 0, r.stdout + r.stderr
    va = open(os.path.join(tmp, "a", "verdict_kernel-static.json"), "rb").read()
    vb = open(os.path.join(tmp, "b", "verdict_kernel-static.json"), "rb").read()
    assert va == vb
    verdict = json.loads(va)
    assert verdict["suite"] == "kernel-static"
    assert verdict["pass"] is True
    assert "worst_z" in verdict


def test_simulate_jsonl(cli, tmp):
    r = run(cli, "--seed", "9", "simulate", "--curve", "hyperbola:theta=1", "--t0", "0",
            "--t1", "1", "--n-traj", "3", "--out", "t.jsonl", cwd=tmp)
    assert r.returncode == 0, r.stderr
    lines = [json.loads(x) for x in open(os.path.join(tmp, "t.jsonl"))]
    headers = [x for x in lines if "curve" in x]
    assert len(headers) == 3
    assert headers[0]["seed"] == 9
    events = [x for x in lines if "state" in x and "curve" not in x]
    for e in events:
        assert 0.0 <= e["t"] <= 1.0


def test_rsk_jsonl(cli, tmp):
    r = run(cli, "--seed", "9", "rsk", "--curve", "hyperbola:theta=1", "--t0", "0", "--t1", "1",
            "--n-traj", "2", "--out", "r.jsonl", cwd=tmp)
    assert r.returncode == 0, r.stderr
    lines = [json.loads(x) for x in open(os.path.join(tmp, "r.jsonl"))]
    headers = [x for x in lines if "curve" in x]
    assert headers and all(h["source"] == "rsk" for h in headers)


def test_config_file(cli, tmp):
    with open(os.path.join(tmp, "run.cfg"), "w") as fh:
        fh.write("seed=7\n")
    r = run(cli, "--config", "run.cfg", "sample", "--theta", "1", "--n", "50",
            "--out", "cfg.csv", cwd=tmp)
    assert r.returncode == 0, r.stderr
    header = open(os.path.join(tmp, "cfg.csv")).read().splitlines()[:4]
    assert any(line == "# seed=7" for line in header), header


def test_simulate_rerun_byte_identical(cli, tmp):
    for name in ("t1.jsonl", "t2.jsonl"):
        r = run(cli, "--seed", "12", "simulate", "--curve", "hyperbola:theta=1", "--t0", "0",
                "--t1", "1", "--n-traj", "5", "--out", name, cwd=tmp)
        assert r.returncode == 0, r.stderr
    a = open(os.path.join(tmp, "t1.jsonl"), "rb").read()
    b = open(os.path.join(tmp, "t2.jsonl"), "rb").read()
    assert a == b


def test_rsk_points_ingestion(cli, tmp):
    with open(os.path.join(tmp, "pts.csv"), "w") as fh:
        fh.write("u,v\n0.5,0.4\n1.5,0.2\n")
    r = run(cli, "rsk", "--curve", "hyperbola:theta=1", "--t0", "-0.5", "--t1", "0.8",
            "--points", "pts.csv", "--out", "swept.jsonl", cwd=tmp)
    assert r.returncode == 0, r.stderr
    lines = [json.loads(x) for x in open(os.path.join(tmp, "swept.jsonl"))]
    assert lines[0]["source"] == "rsk"


def test_usage_errors(cli, tmp):
    r = run(cli, "sample", cwd=tmp)  # missing required --theta
    assert r.returncode == 2
    diag = json.loads(r.stderr.strip().splitlines()[0])
    assert diag["error"] == "usage"
    r = run(cli, "kernel", "--theta", "1", "--grid", "junk", cwd=tmp)
    assert r.returncode == 2
    r = run(cli, "nonsense", cwd=tmp)
    assert r.returncode == 2


def test_verify_failure_exit_code(cli, tmp):
    # The bulk suite carries the known-red static gate; the CLI must signal
    # suite failure with the dedicated exit code.
    r = run(cli, "--seed", "3", "verify", "--suite", "bulk", "--quick", cwd=tmp)
    assert r.returncode in (0, 3), r.stdout + r.stderr
    verdict = json.loads(open(os.path.join(tmp, "verdict_bulk.json")).read())
    assert (r.returncode == 0) == verdict["pass"]


def main():
    cli = os.path.abspath(sys.argv[1])
    with tempfile.TemporaryDirectory() as tmp:
        for name, fn in sorted(globals().items()):
            if name.startswith("test_"):
                fn(cli, tmp)
                print(f"ok {name}")
    print("cli integration tests passed")


if __name__ == "__main__":
    main()
