import csv
import io
import os
import subprocess

import pytest

ASP = os.environ.get("ASP_BIN", "asp")
SMALL = ["--theta_A", "2", "--theta_U", "1", "--T", "1", "--alpha", "0.2", "--beta", "0.2",
         "--n-max", "8", "--seed", "42"]
HEADER = "theta_A,theta_U,T,alpha,beta,gamma,t1,t2,n,etc,feasible,slack_alpha,slack_beta"


def run(*args, check=True):
    proc = subprocess.run([ASP, *args], capture_output=True, text=True)
    if check and proc.returncode != 0:
        raise AssertionError(f"exit {proc.returncode}: {proc.stderr}")
    return proc


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_design_header_and_row():
    out = run("design", *SMALL).stdout.splitlines()
    assert out[0] == HEADER
    row = rows("\n".join(out))[0]
    assert row["feasible"] == "1"
    assert row["gamma"] == "1" and row["n"] == "8"


def test_design_row_round_trips_through_evaluate(tmp_path):
    design = tmp_path / "design.csv"
    run("design", *SMALL, "--out", str(design))
    again = run("evaluate", "--in", str(design)).stdout
    assert again == design.read_text()


def test_raw_round_trip(tmp_path):
    design = tmp_path / "design.csv"
    run("design", *SMALL, "--raw", "--out", str(design))
    again = run("evaluate", "--in", str(design), "--raw").stdout
    assert again == design.read_text()


def test_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "plan.cfg"
    cfg.write_text("# small instance\ntheta_A = 2\ntheta_U = 1\nT = 1\nalpha = 0.2\nbeta = 0.2\n"
                   "n-max = 8\nseed = 42\n")
    assert run("design", "--config", str(cfg)).stdout == run("design", *SMALL).stdout
    flagged = rows(run("design", "--config", str(cfg), "--alpha", "0.3").stdout)[0]
    assert flagged["alpha"] == "0.3000"


def test_unknown_config_key_is_invalid(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("nonsense = 3\n")
    assert run("design", "--config", str(cfg), check=False).returncode == 1


@pytest.mark.parametrize("args,code", [
    (["design", "--theta_A", "1", "--theta_U", "2", "--T", "1"], 1),
    (["design", "--bogus"], 1),
    (["design", "--theta_A", "2", "--theta_U", "2", "--T", "1", "--n-max", "5",
      "--generations", "40", "--restarts", "1"], 2),
    (["evaluate", *SMALL], 1),
])
def test_exit_codes(args, code):
    assert run(*args, check=False).returncode == code


def test_empty_grid_gives_header_only(tmp_path):
    grid = tmp_path / "grid.csv"
    grid.write_text("theta_A,theta_U,T,alpha,beta\n")
    out = run("tables", "--grid", str(grid)).stdout.splitlines()
    assert out == [HEADER + ",ref_gamma,ref_t1,ref_t2,ref_n,ref_etc,etc_gap,note"]


def test_grid_row_matches_design(tmp_path):
    grid = tmp_path / "grid.csv"
    grid.write_text("theta_A,theta_U,T,alpha,beta\n2,1,1,0.2,0.2\n")
    table = run("tables", "--grid", str(grid), "--n-max", "8", "--seed", "42").stdout.splitlines()
    design = run("design", *SMALL).stdout.splitlines()
    assert table[1].startswith(design[1] + ",")


def test_integer_thresholds():
    row = rows(run("design", "--theta_A", "200", "--theta_U", "100", "--T", "100", "--n-max", "30",
                   "--generations", "100", "--restarts", "2", "--integer-thresholds").stdout)[0]
    assert row["feasible"] == "1"
    assert float(row["t1"]).is_integer() and float(row["t2"]).is_integer()


def test_simulate_csv_and_jsonl():
    out = rows(run("simulate", *SMALL, "--trials", "2000").stdout)[0]
    assert int(out["trials"]) == 2000
    assert int(out["rounds_accept"]) + int(out["rounds_reject"]) == 2000
    import json
    j = json.loads(run("simulate", *SMALL, "--trials", "500", "--format", "jsonl").stdout)
    assert j["trials"] == 500 and j["gamma"] == 1


def test_case_study_reproduces_published_estimates():
    proc = run("case-study", "--generations", "60", "--restarts", "1")
    assert proc.stdout.count(" reproduced") == 2
    assert "estimate=2577.9286 -> accept" in proc.stdout
    assert "estimate=2883.2340 -> accept" in proc.stdout
