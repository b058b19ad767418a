import json

import pytest

from multifilar.errors import CacheCorrupt, IoFailure, SizeLimitExceeded, SourceUnavailable
from multifilar.graph_core import graph6_encode, k4
from multifilar.pipeline import (
    RunConfig,
    Window,
    cache_key,
    cached_enumeration,
    centroid_gaps,
    cluster_filars,
    export_csv,
    export_svg_scatter,
    load_family,
    run_experiment,
    store_family,
)
from multifilar.pipeline.cli import main
from multifilar.pipeline.export import csv_text
from multifilar.trace_formula import filar_geometry

from conftest import family, records

FILAR_SLOPE = 15.8913


def cfg_for(tmp_path, **kw):
    kw.setdefault("cache_root", tmp_path / "cache")
    kw.setdefault("out_dir", tmp_path / "out")
    return RunConfig(**kw)


# configuration


@pytest.mark.parametrize(
    "kw",
    [
        {"vertices": (9,)},
        {"vertices": (2,)},
        {"t_values": (1.5,)},
        {"variance": "population"},
        {"source": "graph6"},
        {"source": "construction"},
        {"cutoff": 2},
        {"jobs": 0},
    ],
)
def test_config_rejects(tmp_path, kw):
    with pytest.raises(ValueError):
        cfg_for(tmp_path, **kw)


# run_experiment


def test_run_n10(tmp_path):
    result = run_experiment(cfg_for(tmp_path, vertices=(10,)))
    assert len(result.records) == 19
    assert result.ok
    assert all(r.residual < 1e-9 and not r.flagged for r in result.records)
    assert result.summary["by_n"]["10"]["graphs"] == 19


def test_run_n8_filar_keys(tmp_path):
    result = run_experiment(cfg_for(tmp_path, vertices=(8,)))
    assert len(result.records) == 5
    assert sorted(r.filar_key for r in result.records) == sorted((r.m3,) for r in result.records)
    assert sum(g.size for g in cluster_filars(result.records, 3)) == 5


def test_run_graph6_single(tmp_path):
    path = tmp_path / "k4.g6"
    path.write_text("C~\n")
    result = run_experiment(cfg_for(tmp_path, source="graph6", input_graph6=path, vertices=()))
    assert len(result.records) == 1
    assert result.records[0].m3 == 4 and result.records[0].n == 4


def test_run_construction(tmp_path):
    result = run_experiment(cfg_for(tmp_path, source="construction", construction="petersen"))
    (r,) = result.records
    assert (r.m3, r.m4, r.m5) == (0, 0, 12)


def test_missing_sources(tmp_path):
    with pytest.raises(SourceUnavailable):
        run_experiment(cfg_for(tmp_path, source="graph6", input_graph6=tmp_path / "nope.g6"))
    with pytest.raises(SourceUnavailable):
        run_experiment(cfg_for(tmp_path, source="construction", construction="dodecahedron"))


def test_size_limit(tmp_path):
    with pytest.raises(SizeLimitExceeded):
        run_experiment(cfg_for(tmp_path, vertices=(16,)))


def test_parallel_matches_serial(tmp_path):
    serial = run_experiment(cfg_for(tmp_path, vertices=(10,)))
    par = run_experiment(cfg_for(tmp_path, vertices=(10,), jobs=2))
    assert csv_text(serial.records) == csv_text(par.records)


def test_records_predictions_close(tmp_path):
    for r in records(10, "biased"):
        assert r.mu_pred == pytest.approx(r.mu, abs=1e-9)
        assert r.sigma_pred == pytest.approx(r.sigma, abs=1e-9)
    for r in records(10, "unbiased"):
        assert r.sigma_pred == pytest.approx(r.sigma, abs=1e-9)


# export


def test_csv_rows(tmp_path):
    path = export_csv(records(10), tmp_path / "r.csv")
    data = path.read_bytes()
    assert b"\r" not in data
    lines = data.decode().splitlines()
    assert len(lines) == 20
    assert lines[0] == "graph_id,n,d,mu,sigma,m3,m4,m5,residual,mu_pred,sigma_pred"
    mu = lines[1].split(",")[3]
    assert float(mu) == records(10)[0].mu


def test_csv_empty(tmp_path):
    with pytest.raises(IoFailure):
        export_csv([], tmp_path / "r.csv")
    assert not (tmp_path / "r.csv").exists()


def test_svg_empty(tmp_path):
    with pytest.raises(IoFailure):
        export_svg_scatter([], tmp_path / "s.svg")
    assert not (tmp_path / "s.svg").exists()


def test_svg_zoom_triangle_free(tmp_path):
    recs = records(10, "unbiased")
    group = [r for r in recs if r.m3 == 0]
    window = Window.around([(r.mu, r.sigma) for r in group], pad=0.1)
    path = export_svg_scatter(recs, tmp_path / "z.svg", window)
    text = path.read_text()
    assert text.count('class="point"') == 6
    assert text.count('data-m3="0"') == 6


def test_svg_full(tmp_path):
    text = export_svg_scatter(records(10), tmp_path / "s.svg").read_text()
    assert text.startswith("<svg") or text.startswith("<?xml")
    assert text.count('class="point"') == 19


def test_csv_deterministic(tmp_path):
    a = run_experiment(cfg_for(tmp_path, vertices=(10,)))
    export_csv(a.records, tmp_path / "a.csv")
    b = run_experiment(cfg_for(tmp_path, vertices=(10,), use_cache=False))
    export_csv(b.records, tmp_path / "b.csv")
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


# cache


def test_cache_round_trip(tmp_path):
    root = tmp_path / "cache"
    fresh = family(10)
    store_family(root, fresh)
    loaded = load_family(root, 10, 3)
    assert [graph6_encode(g) for g in loaded] == [graph6_encode(g) for g in fresh]
    assert load_family(root, 12, 3) is None
    assert cached_enumeration(root, 10, 3).graphs == loaded.graphs


def test_cache_records_equal_fresh(tmp_path):
    cfg = cfg_for(tmp_path, vertices=(8,))
    first = run_experiment(cfg)
    assert (cfg.cache_dir / cache_key(8, 3) / "graphs.g6").exists()
    second = run_experiment(cfg)
    assert first.records == second.records


def test_cache_corruption_recovers(tmp_path, caplog):
    root = tmp_path / "cache"
    store_family(root, family(8))
    g6 = root / cache_key(8, 3) / "graphs.g6"
    g6.write_text("garbage\n")
    with pytest.raises(CacheCorrupt):
        load_family(root, 8, 3)
    fam = cached_enumeration(root, 8, 3)
    assert len(fam) == 5
    assert "recomputing" in caplog.text
    assert load_family(root, 8, 3) is not None


def test_cache_bad_manifest(tmp_path):
    root = tmp_path / "cache"
    store_family(root, family(8))
    manifest = root / cache_key(8, 3) / "manifest.json"
    meta = json.loads(manifest.read_text())
    meta["count"] = 4
    manifest.write_text(json.dumps(meta))
    with pytest.raises(CacheCorrupt):
        load_family(root, 8, 3)


# clustering


def test_cluster_sizes_n10():
    groups = cluster_filars(records(10), 3)
    assert [g.key for g in groups] == [(0,), (1,), (2,), (3,), (4,)]
    assert [g.size for g in groups] == [6, 3, 5, 2, 3]
    two = next(g for g in groups if g.size == 2)
    assert two.fitted_slope is None and not two.fits


def test_cluster_level4_keys():
    groups = cluster_filars(records(10), 4)
    zero = [g for g in groups if g.key[0] == 0]
    assert sorted(g.key[1] for g in zero) == [0, 2, 3, 5, 6]
    assert next(g for g in zero if g.key == (0, 5)).size == 2


def test_cluster_mixed_records_rejected():
    with pytest.raises(ValueError):
        cluster_filars(records(8) + records(10), 3)
    with pytest.raises(ValueError):
        cluster_filars(records(10), 2)


def test_centroid_mu_increasing():
    for n in (10, 12):
        mus = [g.centroid[0] for g in cluster_filars(records(n), 3)]
        assert all(a < b for a, b in zip(mus, mus[1:]))


@pytest.mark.parametrize("n", [12, 14])
def test_fitted_slopes(n):
    groups = [g for g in cluster_filars(records(n, "biased"), 3) if g.fits]
    assert groups
    for g in groups:
        assert g.predicted_slope == pytest.approx(FILAR_SLOPE, rel=1e-4)
        assert abs(g.fitted_slope / FILAR_SLOPE - 1) < 0.15


def test_predicted_slope_unbiased_scaling():
    g = cluster_filars(records(10, "unbiased"), 3)[0]
    assert g.predicted_slope == pytest.approx(FILAR_SLOPE * 10 / 9, rel=1e-4)


@pytest.mark.parametrize("n", [12, 14])
def test_centroid_gaps(n):
    groups = cluster_filars(records(n, "biased"), 3)
    spacing = filar_geometry(2, 3, n).spacing
    gaps = centroid_gaps(groups)
    for a, b, gap in zip(groups, groups[1:], gaps):
        per_triangle = gap / (b.key[0] - a.key[0])
        assert abs(per_triangle / spacing - 1) < 0.25


# CLI


def test_cli_analyze(tmp_path, capsys):
    out = tmp_path / "o"
    code = main(["analyze", "--vertices", "8", "10", "--out-dir", str(out), "--variance", "biased"])
    assert code == 0
    lines = (out / "records.csv").read_text().splitlines()
    assert len(lines) == 1 + 5 + 19
    summary = json.loads((out / "summary.json").read_text())
    assert summary["by_n"]["10"]["graphs"] == 19
    assert "n=10: 19 graphs" in capsys.readouterr().out


def test_cli_enumerate(tmp_path):
    out = tmp_path / "o"
    assert main(["enumerate", "--vertices", "10", "--out-dir", str(out)]) == 0
    assert len((out / "regular_d3_n10.g6").read_text().splitlines()) == 19


def test_cli_verify_named(tmp_path, capsys):
    assert main(["verify", "--graph", "petersen", "--out-dir", str(tmp_path)]) == 0
    assert "0 failures" in capsys.readouterr().out


def test_cli_verify_tight_tolerance_fails(tmp_path):
    assert main(["verify", "--graph", "k4", "--tolerance", "1e-30", "--out-dir", str(tmp_path)]) == 1


def test_cli_plot_zoom(tmp_path):
    out = tmp_path / "o"
    assert main(["plot", "--vertices", "10", "--zoom-m3", "0", "--out-dir", str(out)]) == 0
    svg = (out / "scatter_n10_m3_0.svg").read_text()
    assert svg.count('class="point"') == 6


def test_cli_errors(tmp_path, capsys):
    assert main(["analyze", "--vertices", "9", "--out-dir", str(tmp_path)]) == 2
    assert main(["analyze", "--vertices", "16", "--out-dir", str(tmp_path)]) == 2
    assert main(["verify", "--input-graph6", str(tmp_path / "missing.g6"), "--out-dir", str(tmp_path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_module_entry():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "multifilar", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "analyze" in proc.stdout
