import math
from fractions import Fraction

import numpy as np
import pytest

from lgallee.equilibria import ATTRACTING, positive_equilibria
from lgallee.focal import focal_values, hopf_point
from lgallee.model import Params
from lgallee.simulate import (check_boundedness, find_limit_cycles, fit_return_map, grid_seeds, in_gamma_region,
                              integrate, nullclines, phase_portrait, random_interior_inits, return_map,
                              write_portrait_csv, write_portrait_svg)

F = Fraction

COEXTINCTION = Params(F(1, 2), F(1), F(1), F(1, 2), F(1, 10))
HOPF = hopf_point(F(1, 5), F(1, 20), F(1, 2), F(1, 10))
HOPF_CENTER = (0.2, 0.3)


def test_axes_stay_invariant():
    along_x = integrate(COEXTINCTION, (0.5, 0.0), 20.0)
    assert np.all(along_x.states[:, 1] == 0.0)
    along_y = integrate(COEXTINCTION, (0.0, 0.3), 60.0)
    assert np.all(along_y.states[:, 0] == 0.0)
    assert along_y.final.y == pytest.approx(0.1, abs=1e-6)


def test_equilibrium_is_stationary():
    trajectory = integrate(HOPF.params, HOPF_CENTER, 100.0)
    assert np.max(np.abs(trajectory.states - np.array(HOPF_CENTER))) < 1e-6


def test_integrate_rejects_bad_input():
    with pytest.raises(ValueError):
        integrate(COEXTINCTION, (-0.1, 0.5), 10.0)
    with pytest.raises(ValueError):
        integrate(COEXTINCTION, (0.1, 0.5), 0.0)


def test_trajectory_is_read_only(tmp_path):
    trajectory = integrate(COEXTINCTION, (0.5, 0.5), 5.0, t_eval=np.linspace(0.0, 5.0, 11))
    assert len(trajectory.samples) == 11
    with pytest.raises(ValueError):
        trajectory.states[0, 0] = 1.0
    with pytest.raises(AttributeError):
        trajectory.t = None
    path = tmp_path / "orbit.csv"
    trajectory.to_csv(path)
    lines = path.read_text().splitlines()
    assert lines[0] == "t,x,y" and len(lines) == 12


def test_tolerances_are_recorded():
    trajectory = integrate(COEXTINCTION, (0.5, 0.5), 1.0, tol=(1e-7, 1e-6))
    assert trajectory.tolerances == (1e-7, 1e-6)


def test_gamma_region():
    assert in_gamma_region(COEXTINCTION, 0.5, 1.0)
    assert not in_gamma_region(COEXTINCTION, 1.0, 0.5)
    assert not in_gamma_region(COEXTINCTION, 0.5, 1.1)


def test_boundedness_from_inside_and_outside():
    report = check_boundedness(COEXTINCTION, [(0.5, 0.5), (5.0, 5.0)], horizon=100.0)
    assert report.all_entered
    assert report.entry_times[0] == 0.0
    assert report.entry_times[1] > 0.0
    assert report.exited_after_entry == [False, False]
    assert report.to_dict()["all_entered"] is True


def test_random_inits_are_reproducible():
    a = random_interior_inits(5, seed=42)
    b = random_interior_inits(5, seed=42)
    assert a == b
    assert all(0 < x < 10 and 0 < y < 10 for x, y in a)


def test_return_map_period_near_a_weak_focus():
    sample = return_map(HOPF.params, HOPF_CENTER, 0.01)
    assert sample.image is not None and sample.image > 0
    # linear frequency at E2* is sqrt(1/400)
    assert sample.period == pytest.approx(2 * math.pi / 0.05, rel=0.02)


def test_return_map_needs_a_focus():
    with pytest.raises(ValueError, match="not a focus"):
        return_map(COEXTINCTION, (0.0, 0.1), 0.01)


def test_cycle_search_needs_ascending_radii():
    with pytest.raises(ValueError):
        find_limit_cycles(HOPF.params, HOPF_CENTER, [0.02, 0.01])


@pytest.mark.slow
def test_return_map_cubic_matches_first_focal_value():
    L1 = focal_values(HOPF, 1).L[0]
    c1, c3 = fit_return_map(HOPF.params, HOPF_CENTER, np.linspace(0.002, 0.02, 6))
    assert np.sign(c3) == np.sign(float(L1))


def test_grid_seeds_are_interior():
    seeds = grid_seeds((0.0, 1.0, 0.0, 1.0), (3, 2))
    assert len(seeds) == 6
    assert all(0 < s.x < 1 and 0 < s.y < 1 for s in seeds)
    assert grid_seeds((0.0, 1.0, 0.0, 1.0), (0, 0)) == []


def test_predator_nullcline():
    lines = nullclines(COEXTINCTION, (0.0, 1.0, 0.0, 1.2))
    pred = lines["predator"]
    assert np.allclose(pred[:, 1], pred[:, 0] + 0.1)


def test_empty_portrait(tmp_path):
    portrait = phase_portrait(COEXTINCTION, (0.0, 1.0, 0.0, 1.2), (0, 0))
    assert portrait.is_empty
    index = write_portrait_csv(portrait, str(tmp_path))
    assert open(index).read() == "seed,x0,y0,file,status\n"


def test_portrait_files_are_deterministic(tmp_path):
    portrait = phase_portrait(COEXTINCTION, (0.0, 1.0, 0.0, 1.2), (2, 2), horizon=5.0)
    assert len(portrait.runs) == 4
    index = write_portrait_csv(portrait, str(tmp_path / "csv"))
    rows = open(index).read().splitlines()
    assert len(rows) == 5 and rows[1].endswith("seed_0000.csv,ok")
    assert (tmp_path / "csv" / "seed_0003.csv").exists()

    first = write_portrait_svg(portrait, str(tmp_path / "a.svg"))
    second = write_portrait_svg(portrait, str(tmp_path / "b.svg"))
    assert open(first, "rb").read() == open(second, "rb").read()


def test_portrait_window_must_be_in_the_quadrant():
    with pytest.raises(ValueError):
        phase_portrait(COEXTINCTION, (-1.0, 1.0, 0.0, 1.0), (2, 2))


def test_saddle_node_sectors_by_simulation():
    p = Params(F(1, 10), F(121, 800), F(1), F(1, 2), F(1, 10))
    (e,) = positive_equilibria(p)
    assert e.sector == ATTRACTING
    ex, ey = e.location_floats()
    vx, vy = (float(c) for c in e.parabolic_direction)
    eps = 0.01
    start = eps * math.hypot(vx, vy)

    # the center flow is u' ~ -2 u^2: orbits on the parabolic side creep in, the others leave
    inside = integrate(p, (ex + eps * vx, ey + eps * vy), 20.0).final
    outside = integrate(p, (ex - eps * vx, ey - eps * vy), 20.0).final
    assert math.hypot(inside.x - ex, inside.y - ey) < 0.85 * start
    assert math.hypot(outside.x - ex, outside.y - ey) > 1.3 * start
