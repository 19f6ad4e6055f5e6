import json
import math

import pytest

import cutgeom as cg


def test_constants_match_closed_forms():
    assert cg.c1(0.0, 3) == pytest.approx(0.421875, abs=1e-15)
    assert cg.c2(1.0, 2).value == pytest.approx(1 / 9, abs=1e-15)
    assert cg.c2(0.5, 2).method == "closed_form_n2"
    assert cg.d_const(0.25, 2) == pytest.approx(7 / 12, abs=1e-15)
    assert cg.psi(cg.beta0(0.25, 2), 0.25, 2) == pytest.approx(5 / 18, abs=1e-14)
    with pytest.raises(ValueError):
        cg.c1(2.5, 2)


def test_measure_on_cone_and_cube():
    cone = cg.AnalyticProfile(3, [(0.0, 1.0), (1.0, 0.0)])
    axis = cg.Direction.axis(3)
    assert cg.volume(cone) == pytest.approx(math.pi / 3, abs=1e-14)
    assert cg.centroid_coordinate(cone, axis) == pytest.approx(0.25, abs=1e-15)
    cube = cg.Polytope(3, [[x, y, z] for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    assert cg.volume(cube) == pytest.approx(1.0)
    assert cg.centroid(cube) == pytest.approx([0.5, 0.5, 0.5])
    t0, area = cg.max_section(cube, cg.Direction.axis(3, 2))
    assert (t0, area) == (0.0, pytest.approx(1.0))


def test_extremal_bodies_attain_bounds():
    g = cg.grunbaum_cone(2)
    assert cg.cut_ratio(g, cg.CutSpec(cg.Direction.axis(2), 0.0)) == pytest.approx(4 / 9, abs=1e-15)
    up = cg.upper_extremizer(0.5, 3)
    rep = cg.check_theorem4(up, cg.CutSpec(cg.Direction.axis(3), 0.5))
    assert rep.passed and rep.equality == "upper"


def test_verify_reports_and_json():
    body = cg.random_polytope(3, 12, 4)
    d = cg.Direction.normalized([1.0, 2.0, -1.0])
    rep = cg.check_theorem4_mc(body, cg.CutSpec(d, 0.3), 50000, 7)
    assert rep.backend == "monte_carlo" and rep.passed
    parsed = json.loads(rep.to_json())
    assert parsed["context"]["seed"] == 7
    text = cg.body_to_json(body)
    assert cg.body_from_json(text).vertices == body.vertices
    with pytest.raises(ValueError):
        cg.body_from_json("{")


def test_small_fuzz_run_passes():
    out = cg.fuzz_suite([2, 3], 5, kind="polytope", seed=11, mc_samples=10000)
    assert out["total"] == out["passed"] > 0
    assert out["rng"] == "mt19937_64"


def test_oracle_cone_volume():
    cone = cg.AnalyticProfile(3, [(0.0, 1.0), (1.0, 0.0)])
    est = cg.mc_volume(cone, 200000, 3)
    assert abs(est.value - math.pi / 3) <= 4 * est.std_error
