import json

import pytest

from cubepath.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, run


def test_solve_json(capsys):
    assert run(["solve", "--source", "0,-0.9", "--target", "0.98,-0.8", "--json"]) == EXIT_OK
    first = capsys.readouterr().out
    doc = json.loads(first)
    assert doc["minimizers"] == ["DRD"] and doc["faces"] == 4
    assert doc["length"] == pytest.approx(5.9344**0.5)
    assert len(doc["candidates"]) == 12
    run(["solve", "--source", "0,-0.9", "--target", "0.98,-0.8", "--json"])
    assert capsys.readouterr().out == first


def test_negative_point_without_equals(capsys):
    assert run(["solve", "--source", "-0.5,-0.5", "--target", "-.1,0.2"]) == EXIT_OK
    assert "length" in capsys.readouterr().out


def test_edge_length_scales(capsys):
    run(["solve", "--source", "0,0", "--target", "0,0", "--json", "--edge-length", "1"])
    assert json.loads(capsys.readouterr().out)["length"] == pytest.approx(2.0)


def test_domain_error(capsys):
    assert run(["solve", "--source", "1,0", "--target", "0,0"]) == EXIT_DOMAIN
    assert "strictly inside" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["solve", "--source", "0,0"], ["solve", "--source", "x", "--target", "0,0"]],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == EXIT_USAGE
    capsys.readouterr()


def test_regions_outputs(tmp_path, capsys):
    svg, js, png = tmp_path / "r.svg", tmp_path / "r.json", tmp_path / "r.png"
    assert run(["regions", "--source", "0,-0.9", "--svg", str(svg), "--json", str(js), "--figure", str(png)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("seq,vertices,area")
    assert 'viewBox="-1.1 -1.1 2.2 2.2"' in svg.read_text()
    doc = json.loads(js.read_text())
    assert set(doc["polygons"]) == {"RUR", "LUL", "DRD", "DLD"}
    assert png.stat().st_size > 0


def test_heatmap_outputs(tmp_path, capsys):
    csv_path, svg, png = tmp_path / "h.csv", tmp_path / "h.svg", tmp_path / "h.pdf"
    argv = ["heatmap", "--n", "5", "--csv", str(csv_path), "--svg", str(svg), "--figure", str(png), "--threads", "1"]
    assert run(argv) == 0
    rows = csv_path.read_text().strip().split("\n")
    assert rows[0] == "s1,s2,probability" and len(rows) == 26
    assert "<rect" in svg.read_text()
    assert png.stat().st_size > 0
    assert run(["heatmap", "--n", "2"]) == EXIT_DOMAIN
    capsys.readouterr()


def test_heatmap_stdout(capsys):
    assert run(["heatmap", "--n", "3", "--sampled", "--pitch", "0.05", "--threads", "1"]) == 0
    assert len(capsys.readouterr().out.strip().split("\n")) == 10


def test_nets(capsys):
    assert run(["nets"]) == 0
    out = capsys.readouterr().out
    assert "tree_count 384" in out and "class_count 11" in out


def test_verify_quick(capsys):
    assert run(["verify", "--suite", "nets"]) == 0
    assert "1/1 checks passed" in capsys.readouterr().out
