import json

import pytest

import helpers
from medusa.cli import main


@pytest.fixture
def k5_file(tmp_path):
    path = tmp_path / "k5.edges"
    helpers.complete_graph(5).write_edge_list(path)
    return path


@pytest.fixture
def k4p_file(tmp_path):
    from medusa.graph import Graph
    g = Graph.from_edges([(i, j) for i in range(4) for j in range(i + 1, 4)] + [(0, "p")])
    path = tmp_path / "k4p.edges"
    g.write_edge_list(path)
    return path


def run(*argv):
    return main([str(a) for a in argv])


# ------------------------------------------------------------- decompose

def test_decompose_k5(tmp_path, k5_file):
    out = tmp_path / "out"
    assert run("decompose", "--input", k5_file, "--out", out) == 0
    summary = json.loads((out / "summary.json").read_text())
    assert summary["k_max"] == 4
    assert summary["shell_sizes"] == {"4": 5}
    lines = (out / "shells.csv").read_text().splitlines()
    assert lines[0] == "node,shell"
    assert len(lines) == 6
    assert (out / "manifest.json").exists()


def test_decompose_deterministic_bytes(tmp_path, k4p_file):
    outs = []
    for name in ("a", "b"):
        out = tmp_path / name
        assert run("decompose", "--input", k4p_file, "--out", out, "--seed", 3) == 0
        outs.append({p.name: p.read_bytes() for p in sorted(out.iterdir())})
    assert outs[0] == outs[1]


# ------------------------------------------------------------ exit codes

def test_usage_error_exit_1(capsys):
    assert run("decompose") == 1  # missing --input/--out
    assert run("not-a-command") == 1


def test_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.edges"
    bad.write_text("1 2\n2\n")
    assert run("decompose", "--input", bad, "--out", tmp_path / "o") == 2
    assert "line 2" in capsys.readouterr().err


def test_missing_file_exit_2(tmp_path):
    assert run("decompose", "--input", tmp_path / "nope", "--out", tmp_path / "o") == 2


def test_empty_input_exit_2(tmp_path):
    empty = tmp_path / "empty.edges"
    empty.write_text("# nothing\n")
    assert run("profile", "--input", empty, "--out", tmp_path / "o") == 2


def test_analysis_error_exit_3(tmp_path, k5_file):
    # K5 has no crust below the nucleus, so there is no transition to find
    assert run("fractal", "--input", k5_file, "--out", tmp_path / "o") == 3


# --------------------------------------------------------------- profile

def test_profile_k4_pendant(tmp_path, k4p_file):
    out = tmp_path / "out"
    assert run("profile", "--input", k4p_file, "--out", out) == 0
    lines = (out / "profile.csv").read_text().splitlines()
    assert lines[0] == "k,crust_size,largest,second_largest,mean_distance,exact"
    assert len(lines) == 5  # k = 0..3
    assert lines[2].startswith("1,1,1,0")
    transition = json.loads((out / "transition.json").read_text())
    assert transition["k_star_second"] is None  # degenerate profile


def test_profile_json_format(tmp_path, k4p_file):
    out = tmp_path / "out"
    assert run("profile", "--input", k4p_file, "--out", out, "--format", "json") == 0
    rows = json.loads((out / "profile.json").read_text())
    assert rows[3]["k"] == 3
    assert rows[3]["crust_size"] == 5
    assert not (out / "profile.csv").exists()


# ---------------------------------------------------------------- medusa

def test_medusa_report_end_to_end(tmp_path):
    g = helpers.medusa_example_graph(with_multilink=True, with_pair=True)
    path = tmp_path / "m.edges"
    g.write_edge_list(path)
    out = tmp_path / "out"
    assert run("medusa", "--input", path, "--out", out) == 0
    report = json.loads((out / "medusa.json").read_text())
    assert report["k_max"] == 4
    assert report["nucleus"]["members"] == ["v0", "v1", "v2", "v3", "v4"]
    assert report["peer_connected"]["size"] == 3
    assert report["isolated"]["size"] == 4
    assert report["isolated"]["leaves"] == 1
    assert report["isolated"]["direct_multilink"] == 1
    assert report["isolated"]["small_clusters"] == 2


# --------------------------------------------------------------- fractal

def test_fractal_on_seeded_graph(tmp_path):
    g = helpers.internet_like_graph(3000)
    path = tmp_path / "net.edges"
    g.write_edge_list(path)
    out = tmp_path / "out"
    assert run("fractal", "--input", path, "--out", out,
               "--lb", "2,3,4,5", "--trials", 3) == 0
    fits = json.loads((out / "fits.json").read_text())
    assert fits["crust_k"] == 7  # pinned transition of this seeded graph
    assert fits["box_dimension"]["exponent"] > 0
    assert fits["regime"] in ("power_law", "exponential", "crossover")
    boxes = (out / "boxes.csv").read_text().splitlines()
    assert boxes[0] == "l_B,mean_boxes,std_boxes,trials"
    assert len(boxes) == 5
    clusters = (out / "cluster_sizes.csv").read_text().splitlines()
    assert clusters[0] == "size,count,probability"


def test_fractal_explicit_crust_level(tmp_path, k4p_file):
    # 1-crust of K4+pendant has a single node: too small to fit
    assert run("fractal", "--input", k4p_file, "--out", tmp_path / "o",
               "--crust-k", 1) == 3


# -------------------------------------------------------------- ensemble

def test_ensemble_end_to_end(tmp_path):
    out = tmp_path / "out"
    assert run("ensemble", "--out", out, "--sizes", "200,500,1000",
               "--gamma", "2.3", "--kmin", "1", "--replicates", 2, "--seed", 4) == 0
    lines = (out / "scaling.csv").read_text().splitlines()
    assert lines[0] == "N,replicate,k_max,nucleus_size"
    assert len(lines) == 7  # 3 sizes x 2 replicates
    fits = json.loads((out / "fits.json").read_text())
    assert set(fits) == {"nucleus_size_fit", "k_max_fit", "sizes"}
    assert fits["sizes"] == [200, 500, 1000]


# ---------------------------------------------------------------- report

def test_report_meta_command(tmp_path):
    g = helpers.internet_like_graph(3000)
    path = tmp_path / "net.edges"
    g.write_edge_list(path)
    out = tmp_path / "out"
    assert run("report", "--input", path, "--out", out, "--trials", 3,
               "--lb", "2,3,4", "--sample-sources", 50) == 0
    for name in ("profile.csv", "transition.json", "medusa.json",
                 "boxes.csv", "cluster_sizes.csv", "fits.json", "manifest.json"):
        assert (out / name).exists(), name
    report = json.loads((out / "medusa.json").read_text())
    assert "shell_contribution" in report


def test_report_degenerate_graph_skips_fractal(tmp_path, k4p_file):
    out = tmp_path / "out"
    assert run("report", "--input", k4p_file, "--out", out) == 0
    fits = json.loads((out / "fits.json").read_text())
    assert "skipped" in fits
