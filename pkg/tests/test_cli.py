import json

import pytest

from hardylab.cli import main


def test_check_passes(tmp_path, capsys):
    code = main(["check", "--out", str(tmp_path), "--no-figures"])
    assert code == 0
    out = capsys.readouterr().out
    assert "scenario sanity: PASS" in out
    assert (tmp_path / "sanity.json").exists()


def test_run_stability_with_figures(tmp_path, capsys):
    cfg = tmp_path / "cfg.ini"
    cfg.write_text("[scenario]\nname = stability\n")
    code = main(["run", str(cfg), "--out", str(tmp_path / "out"),
                 "--format", "csv"])
    assert code == 0
    out_dir = tmp_path / "out"
    assert (out_dir / "stability__convergence.csv").exists()
    assert (out_dir / "stability__manifest.json").exists()
    png = out_dir / "stability__convergence.png"
    assert png.exists() and png.stat().st_size > 1000


def test_run_json_deterministic(tmp_path):
    cfg = tmp_path / "cfg.ini"
    cfg.write_text("[scenario]\nname = sanity\n")
    main(["run", str(cfg), "--out", str(tmp_path / "a"), "--no-figures"])
    main(["run", str(cfg), "--out", str(tmp_path / "b"), "--no-figures"])
    a = (tmp_path / "a" / "sanity.json").read_bytes()
    b = (tmp_path / "b" / "sanity.json").read_bytes()
    assert a == b


def test_scenario_override(tmp_path):
    cfg = tmp_path / "cfg.ini"
    cfg.write_text("[scenario]\nname = sanity\n")
    code = main(["run", str(cfg), "--scenario", "mate-linearity",
                 "--out", str(tmp_path / "out"), "--no-figures"])
    assert code == 0
    payload = json.loads((tmp_path / "out" / "mate-linearity.json")
                         .read_text())
    assert payload["scenario"] == "mate-linearity"


def test_missing_config_exits_2(tmp_path, capsys):
    code = main(["run", str(tmp_path / "missing.ini"), "--no-figures"])
    assert code == 2
    assert "config error" in capsys.readouterr().err


def test_bad_scenario_name_exits_2(tmp_path, capsys):
    cfg = tmp_path / "cfg.ini"
    cfg.write_text("[scenario]\nname = nonsense\n")
    code = main(["run", str(cfg), "--out", str(tmp_path), "--no-figures"])
    assert code == 2


def test_failing_check_exits_1(tmp_path):
    cfg = tmp_path / "cfg.ini"
    # an impossible accuracy requirement turns the verdict to FAIL
    cfg.write_text("[scenario]\nname = stability\n\n"
                   "[stability]\nexponents = 4, 8\n"
                   "max_final_a_error = 1e-12\n")
    code = main(["run", str(cfg), "--out", str(tmp_path / "out"),
                 "--no-figures"])
    assert code == 1
