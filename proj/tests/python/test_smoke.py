import json
import math
import os
import subprocess

import pytest

import fmetric


def test_hybrid_min_alpha_is_ln3():
    s = fmetric.gen_hybrid(5)
    a = fmetric.min_alpha(s, fmetric.Gauge.log())
    assert a["value"] == pytest.approx(math.log(3), rel=1e-12)
    assert a["witness"] == ["0", "3"]
    assert fmetric.check_D3(s, fmetric.Gauge.log(math.log(3)))["pass"]


def test_gauges_and_resolver():
    g = fmetric.Gauge.neg_reciprocal(1.0)
    assert g(1.0) == -1.0
    q = fmetric.delta_for_epsilon(g, 0.5)
    assert q["delta"] == pytest.approx(1 / 3, rel=1e-5)
    with pytest.raises(fmetric.FmetricError):
        fmetric.Gauge.log()(0.0)
    t = fmetric.Gauge.table([(1.0, 0.0), (2.0, 1.0)])
    assert t(1.5) == 0.5


def test_space_from_matrix_and_derive():
    s = fmetric.FiniteSpace(["a", "b", "c"], [[0, 1, 5], [1, 0, 1], [5, 1, 0]])
    assert len(s) == 3
    assert fmetric.shortest_chain_infimum(s)[0][2] == 2.0
    d = fmetric.derive_metric(s)
    assert d["axioms"]["pass"]
    assert not fmetric.classify(s)["metric"]
    with pytest.raises(ValueError):
        fmetric.FiniteSpace(["a", "b"], [[0, -1], [-1, 0]])


def test_topology_and_sequences():
    h = fmetric.gen_hybrid(5)
    assert fmetric.ball_members(h, "0", 1.5) == ["0", "1"]
    assert fmetric.greedy_net(h, 1.5)["centers"] == ["0", "2", "4"]
    assert fmetric.closure_approx(h, ["2"], 1.0) == ["1", "2", "3"]
    g = fmetric.gen_square_grid(32)
    pts = [1 / n for n in range(1, 33)]
    assert fmetric.is_F_convergent_to(g, pts, "0", 0.01, tail_start=15)["pass"]
    assert fmetric.is_F_cauchy(g, pts, 0.01, tail_start=15)["pass"]
    e = fmetric.gen_exp(5)
    r = fmetric.eventually_constant(e, ["0", "1", "2", "3", "4", "5", "1"] + ["4"] * 7, 0.5, tail_start=7)
    assert r["pass"] and r["index"] == 7


def test_fixed_point_with_python_map():
    assert fmetric.iteration_bound(fmetric.Gauge.log(), 0.5, 1.0, 1e-6) == 21
    r = fmetric.solve_fixed_point(lambda x: 0.5 * x + 1, 0.0, 1e-8)
    assert abs(r["x_star"] - 2.0) <= 1e-8
    assert r["iterations"] <= r["bound_N"]
    with pytest.raises(fmetric.FmetricError):
        fmetric.solve_fixed_point(lambda x: x + 1, 0.0, 1e-6)


@pytest.mark.skipif("FMETRIC_CLI" not in os.environ, reason="CLI binary not provided")
def test_cli_check_and_exit_codes():
    cli = os.environ["FMETRIC_CLI"]
    ok = subprocess.run([cli, "check", "--space", "hybrid:5", "--gauge", "log", "--alpha", "1.0986123"],
                        capture_output=True, text=True)
    assert ok.returncode == 0
    assert json.loads(ok.stdout)["d3"]["pass"]
    bad = subprocess.run([cli, "check", "--space", "hybrid:5", "--alpha", "0"], capture_output=True, text=True)
    assert bad.returncode == 1
    usage = subprocess.run([cli, "check", "--space", "hybrid:2"], capture_output=True, text=True)
    assert usage.returncode == 2
    assert json.loads(usage.stderr)["error"] == "argument"
