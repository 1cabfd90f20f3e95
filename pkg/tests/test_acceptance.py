"""Exit criteria at full sample sizes, one PASS/FAIL line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines.
"""

import time

import pytest

from cubepath import verify


def _report(num, check, started):
    line = f"[criterion {num:2d}] {check.line()}  ({time.perf_counter() - started:.1f}s)"
    print(line)
    return line


CRITERIA = [
    (1, lambda tmp: verify.oracle_equivalence(10_000)),
    (2, lambda tmp: verify.centroid_rule(201)),
    (3, lambda tmp: verify.dudeney()),
    (4, lambda tmp: verify.witness_4fsp()),
    (5, lambda tmp: verify.feasible_and_diagonal(1000, 100, 201)),
    (6, lambda tmp: verify.corner_anchoring(1000, 100)),
    (7, lambda tmp: verify.exact_vs_sampled(100, 0.005)),
    (8, lambda tmp: verify.halfplane_anchors(1000)),
    (9, lambda tmp: verify.nets()),
    (10, lambda tmp: verify.heatmap_properties(101, out_dir=tmp)),
]


@pytest.mark.acceptance
@pytest.mark.parametrize("num, fn", CRITERIA, ids=[f"criterion_{n}" for n, _ in CRITERIA])
def test_criterion(num, fn, tmp_path, capsys):
    started = time.perf_counter()
    check = fn(tmp_path)
    with capsys.disabled():
        print()
        _report(num, check, started)
    assert check.passed, check.detail


@pytest.mark.acceptance
def test_figure_files_written(tmp_path):
    check = verify.heatmap_properties(11, out_dir=tmp_path)
    assert (tmp_path / "heatmap.csv").read_text().startswith("s1,s2,probability")
    assert "<svg" in (tmp_path / "heatmap.svg").read_text()
    assert check.passed
