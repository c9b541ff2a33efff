import json
import os
import subprocess
import sys
from importlib import resources
from pathlib import Path

DATA = Path(str(resources.files("eulerchi") / "data"))


def run_cli(*argv, env_extra=None, cwd=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "eulerchi.cli", *argv],
        capture_output=True,
        text=True,
        env=env,
        cwd=cwd,
    )


def test_chi_bundled_interval():
    r = run_cli("chi", str(DATA / "closed_interval.json"))
    assert r.returncode == 0
    assert "result: 1" in r.stdout


def test_chi_bundled_ray():
    r = run_cli("chi", str(DATA / "so3_r3_orbit.json"))
    assert r.returncode == 0
    assert "result: 0" in r.stdout


def test_chi_malformed_file_names_field(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"cells": [{"id": "a"}]}))
    r = run_cli("chi", str(bad))
    assert r.returncode == 1
    assert "dim" in r.stderr


def test_chi_missing_file():
    r = run_cli("chi", "definitely/not/here.json")
    assert r.returncode == 1


def test_gamma_chi_values():
    cases = [
        ("so2_s2.json", '{"kind":"cyclic","order":3}', 5),
        ("so2_s2.json", '{"kind":"free_abelian","rank":2}', -1),
        ("so3_r3.json", '{"kind":"free_abelian","rank":1}', 1),
    ]
    for name, gamma, expected in cases:
        r = run_cli("--report", "json", "gamma-chi", str(DATA / name), "--gamma", gamma)
        assert r.returncode == 0, r.stderr
        assert json.loads(r.stdout)["result"] == expected


def test_gamma_chi_unsupported_exits_2():
    r = run_cli("gamma-chi", str(DATA / "so3_r3.json"), "--gamma", '{"kind":"cyclic","order":2}')
    assert r.returncode == 2
    assert "origin" in r.stderr


def test_translation_all_methods():
    r = run_cli(
        "--report", "json",
        "translation", str(DATA / "s3_point.json"),
        "--gamma", '{"kind":"free_abelian","rank":2}',
    )
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["result"] == {"strata": 8, "inertia": 8, "noniter": 8}
    assert all(a["pass"] for a in out["assertions"])


def test_translation_single_method():
    r = run_cli(
        "--report", "json",
        "translation", str(DATA / "s3_point.json"),
        "--gamma", '{"kind":"trivial"}', "--method", "inertia",
    )
    assert json.loads(r.stdout)["result"] == 1


def test_order_ell():
    r = run_cli("--report", "json", "order-ell", str(DATA / "s3_point.json"), "--ell", "2")
    assert json.loads(r.stdout)["result"] == 8
    r = run_cli("--report", "json", "order-ell", str(DATA / "q8_point.json"), "--ell", "1")
    assert json.loads(r.stdout)["result"] == 5
    r = run_cli("--report", "json", "order-ell", str(DATA / "s3_point.json"), "--ell", "0")
    assert json.loads(r.stdout)["result"] == 1


def test_order_ell_cap_exit_2():
    r = run_cli("order-ell", str(DATA / "s3_point.json"), "--ell", "5")
    assert r.returncode == 2
    r = run_cli(
        "order-ell", str(DATA / "s3_point.json"), "--ell", "5",
        env_extra={"EULERCHI_RECURSION_CAP": "6"},
    )
    assert r.returncode == 0


def test_pushforward_fubini():
    r = run_cli(
        "--report", "json",
        "pushforward", str(DATA / "square_to_interval.json"), str(DATA / "ones_on_square.json"),
    )
    out = json.loads(r.stdout)
    assert out["result"] == {"v0": 1, "v1": 1, "e": 1}
    assert out["assertions"][0]["pass"]


def test_integrate_with_levelset_assertion(tmp_path):
    fn = tmp_path / "f.json"
    fn.write_text(
        json.dumps(
            {
                "space": {"cells": [{"id": "v", "dim": 0}, {"id": "e", "dim": 1}]},
                "values": {"v": 2, "e": -1},
            }
        )
    )
    r = run_cli("--report", "json", "integrate", str(fn))
    out = json.loads(r.stdout)
    assert out["result"] == 3
    assert out["assertions"][0]["name"] == "levelset_formulation"


def test_atlas_sums_pieces():
    r = run_cli(
        "--report", "json",
        "atlas", str(DATA / "s3_point.json"), str(DATA / "s3_point.json"),
        "--gamma", '{"kind":"free_abelian","rank":1}',
    )
    out = json.loads(r.stdout)
    assert out["result"] == 6
    assert any("disjoint" in w for w in out["warnings"])


def test_extension_report():
    r = run_cli("--report", "json", "extension", str(DATA / "o2_extension.json"))
    out = json.loads(r.stdout)
    assert out["result"] == 0
    assert out["breakdown"] == {"base_factor": 2, "ell": 1, "fiber_factor": 0}


def test_inertia_command():
    r = run_cli(
        "--report", "json",
        "inertia", str(DATA / "s3_point.json"), "--gamma", '{"kind":"free_abelian","rank":1}',
    )
    out = json.loads(r.stdout)
    assert out["result"] == 3
    assert out["breakdown"]["cells"] == 6


def test_verify_deterministic_and_green():
    args = ("--report", "json", "verify", "--seed", "42", "--cases", "15")
    r1, r2 = run_cli(*args), run_cli(*args)
    assert r1.returncode == 0
    assert r1.stdout == r2.stdout
    out = json.loads(r1.stdout)
    assert out["result"]["passed"] is True


def test_verify_fault_injection_exits_3(tmp_path):
    dump = tmp_path / "counterexample.json"
    r = run_cli(
        "verify", "--seed", "42", "--cases", "5", "--dump", str(dump),
        env_extra={"EULERCHI_INJECT_FAULT": "lambda_plus_one"},
    )
    assert r.returncode == 3
    assert dump.exists()
    payload = json.loads(dump.read_text())
    assert "instance" in payload and "check" in payload


def test_report_out_file(tmp_path):
    out = tmp_path / "report.json"
    r = run_cli("--report", "json", "--out", str(out), "chi", str(DATA / "closed_interval.json"))
    assert r.returncode == 0
    assert json.loads(out.read_text())["result"] == 1


def test_custom_catalog_entry_warns(tmp_path):
    groupoid = tmp_path / "g.json"
    groupoid.write_text(
        json.dumps(
            {
                "strata": [
                    {
                        "id": "pt",
                        "dim": 0,
                        "isotropy": {"kind": "custom", "name": "mystery", "chi": {"Z": 7}},
                    }
                ]
            }
        )
    )
    r = run_cli("--report", "json", "gamma-chi", str(groupoid), "--gamma", '{"kind":"free_abelian","rank":1}')
    out = json.loads(r.stdout)
    assert out["result"] == 7
    assert any("user-supplied" in w for w in out["warnings"])
