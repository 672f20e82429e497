import json
import math

import pytest

import cylcover as cc

ASINH1 = math.asinh(1.0)


def test_version_and_constants():
    assert cc.__version__
    assert cc.unit_ball_volume(1) == 2.0
    assert cc.unit_ball_volume(2) == pytest.approx(math.pi)
    assert cc.crossing_constant(2) == pytest.approx(2.0 / math.pi)


def test_crossing_probability():
    p = cc.crossing_probability(0.5, 0.1, 2)
    assert p["exact_2d"] == pytest.approx(2.0 / math.pi * math.asin(0.2))
    assert p["lower"] <= p["exact_2d"] <= p["upper"]
    q = cc.crossing_probability(0.5, 0.1, 3)
    assert q["exact_2d"] is None
    assert q["leading"] == pytest.approx(0.02)
    with pytest.raises(cc.InvalidDistance):
        cc.crossing_probability(0.0, 0.1, 2)


def test_phi_and_c_star():
    assert cc.phi([0.0, 1.0]) == pytest.approx(ASINH1, abs=2e-8)
    assert cc.phi([0.5, 0.5]) == pytest.approx(2 * ASINH1, abs=2e-8)
    c = cc.c_star(2)
    assert c["c_star"] == pytest.approx(math.pi / ASINH1, rel=1e-8)
    assert c["limit"] == c["c_star"]
    report = json.loads(cc.theory_report(2))
    assert report["c_star"] == pytest.approx(math.pi / ASINH1, rel=1e-8)
    with pytest.raises(cc.DegenerateHeight):
        cc.phi([0.5, 0.0])


def test_line_sample_and_radius():
    s = cc.sample_line_model(2, 50.0, seed=3)
    assert s.d == 2
    assert len(s) == len(s.bases) == len(s.directions)
    for b, v in zip(s.bases, s.directions):
        assert 0.0 <= b[0] < 1.0
        assert v[1] >= 0.0
        assert math.hypot(*v) == pytest.approx(1.0)
    r = cc.coverage_radius(s, "ball", 1e-4)
    assert r["status"] == "certified"
    assert r["lower"] <= r["upper"] <= r["lower"] + 1e-4
    grid = max(
        cc.min_distance(s, [i / 40, j / 40], "ball") for i in range(41) for j in range(41)
    )
    assert grid <= r["upper"]
    disk = cc.coverage_radius(s, "disk", 1e-4)
    assert disk["upper"] + 2e-4 >= r["upper"]


def test_deterministic_sampling():
    a = cc.sample_line_model(3, 20.0, seed=7, stream=2)
    b = cc.sample_line_model(3, 20.0, seed=7, stream=2)
    assert a.bases == b.bases and a.directions == b.directions


def test_brownian():
    s = cc.sample_brownian_model(2, 20.0, n_steps=64, seed=1)
    assert s.n_steps == 64
    assert s.position(0, 0.0) == s.position(0, 0.0)
    r = cc.coverage_radius(s, "disk", 1e-4)
    assert 0.0 < r["lower"] <= r["upper"]
    with pytest.raises(cc.UnsupportedCombination):
        cc.coverage_radius(s, "ball", 1e-4)


def test_cover_count_and_volume():
    s = cc.sample_line_model(2, 100.0, seed=2)
    x = [0.5, 0.5]
    counts = [cc.cover_count(s, x, r) for r in (0.0, 0.05, 0.1, 0.2)]
    assert counts == sorted(counts)
    est, se = cc.uncovered_volume_estimate(s, 0.0, [0.0, 0.5], [1.0, 1.0], 1000)
    assert est == pytest.approx(0.5)
    assert cc.expected_uncovered_volume([0.0, 0.5], [1.0, 1.0], 0.0, 1000.0) == 0.5
    assert cc.expected_cover_count([0.5, 0.5], 1000.0, 0.01) == pytest.approx(11.222, rel=1e-4)
    assert cc.radius_at_intensity(1.0, 1e4, 2) == pytest.approx(math.log(1e4) / 1e4)


def test_condition_probability():
    p, se = cc.condition_probability(2, "uniform", [1], 100000, seed=5)
    assert abs(p - math.atan(0.5) / math.pi) < 4 * se
    p, _ = cc.condition_probability(3, "fixed:0,0,1", [1, -1], 100)
    assert p == 1.0


def test_run_sweep_csv():
    cfg = "d=2\nmodel=lines-ball\nrho_list=20,40\nreplications=3\ntol=1e-5\nmaster_seed=9\n"
    one = cc.run_sweep(cfg, 1)
    assert one == cc.run_sweep(cfg, 4)
    lines = one.strip().split("\n")
    assert lines[0] == "rho,replication_index,radius_lower,radius_upper,normalized,ray_or_path_count"
    assert len(lines) == 7
    with pytest.raises(cc.ConfigError):
        cc.run_sweep(cfg.replace("20,40", "40,20"))
