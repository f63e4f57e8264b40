from hardylab.figures import render_report_figures
from hardylab.report import Report
from hardylab.scenarios import default_config, run_scenario


def test_stability_figure(tmp_path):
    report = run_scenario(default_config("stability"))
    written = render_report_figures(report, tmp_path)
    assert [p.name for p in written] == ["stability__convergence.png"]
    assert written[0].stat().st_size > 1000


def test_panel_figures(tmp_path):
    cfg = default_config("theorem-a")
    cfg.dims = (16, 32)
    cfg.thresholds["probe_samples"] = 4
    report = run_scenario(cfg)
    names = sorted(p.name for p in render_report_figures(report, tmp_path))
    assert names == ["theorem-a__certification.png",
                     "theorem-a__probe_norms.png"]


def test_report_without_plottable_tables(tmp_path):
    report = Report("sanity", {})
    report.add_table("misc", ("a",), [(1.0,)])
    assert render_report_figures(report, tmp_path) == []
