"""----------------------------------------------------------------------
PyLGA: numerical integration, boundedness, return maps and portraits

Integrates the nondimensional model with an adaptive Runge-Kutta 5(4)
pair, checks that orbits enter and stay in the absorbing set
Gamma = {0 <= x < 1, y < eta + 1}, locates limit cycles around a focus
with a Poincare first-return map along a ray, and writes phase-portrait
data as CSV and SVG.

Last updated _18 October 2026_ by _PyLGA developers_
----------------------------------------------------------------------"""

from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass, field
from typing import Optional

import matplotlib
import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from .equilibria import all_equilibria
from .funLGA import funLGA, jacLGA
from .model import State

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

logger = logging.getLogger(__name__)

DEFAULT_TOL = (1e-10, 1e-10)  # (abs, rel)
NON_RETURNING = "non-returning"


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Solution samples of one initial value problem, read-only"""

    params: object
    t: np.ndarray
    states: np.ndarray  # shape (n, 2), columns x and y
    tolerances: tuple = DEFAULT_TOL
    events: tuple = ()

    def __post_init__(self):
        self.t.setflags(write=False)
        self.states.setflags(write=False)

    @property
    def samples(self):
        return [(float(t), State(float(s[0]), float(s[1]))) for t, s in zip(self.t, self.states)]

    @property
    def final(self):
        return State(float(self.states[-1, 0]), float(self.states[-1, 1]))

    def to_csv(self, path):
        np.savetxt(path, np.column_stack([self.t, self.states]), fmt="%.12e", delimiter=",",
                   header="t,x,y", comments="")


@dataclass(frozen=True)
class LimitCycle:
    section_point: State
    radius: float
    period: float
    stability: str  # attracting | repelling
    floquet_slope: float
    residual: float

    def to_dict(self):
        return {"x": self.section_point.x, "y": self.section_point.y, "radius": self.radius,
                "period": self.period, "stability": self.stability,
                "floquet_slope": self.floquet_slope, "residual": self.residual}


@dataclass(frozen=True)
class ReturnSample:
    radius: float
    image: Optional[float]  # None when the orbit does not come back within the horizon
    period: Optional[float]

    @property
    def displacement(self):
        return None if self.image is None else self.image - self.radius


@dataclass(frozen=True)
class BoundednessReport:
    entered_gamma_region: list
    entry_times: list
    exited_after_entry: list = field(default_factory=list)

    @property
    def all_entered(self):
        return all(self.entered_gamma_region)

    def to_dict(self):
        return {"entered": self.entered_gamma_region, "entry_times": self.entry_times,
                "exited_after_entry": self.exited_after_entry, "all_entered": self.all_entered}


def _clamp_axes(y, atol):
    """Snap solver noise below the axes back onto them; larger excursions are a positivity failure"""

    if np.any(y < -10 * atol):
        i, j = np.unravel_index(np.argmin(y), y.shape)
        raise RuntimeError("state left the closed first quadrant (component %d = %g)" % (i, y[i, j]))
    return np.where(y < 0, 0.0, y)


def integrate(p, init, horizon, tol=DEFAULT_TOL, t_eval=None, dense_output=False, events=None, max_step=np.inf):
    """Solve the model from init over [0, horizon] with RK45

    Returns a Trajectory; when dense_output is set the scipy solution is
    also returned as a second value.
    """

    x0, y0 = float(init[0]), float(init[1])
    if x0 < 0 or y0 < 0:
        raise ValueError("initial state (%g, %g) outside the closed first quadrant" % (x0, y0))
    if not horizon > 0:
        raise ValueError("horizon must be positive, got %g" % horizon)
    atol, rtol = tol

    try:
        ode = solve_ivp(funLGA,
                        t_span=(0.0, float(horizon)),
                        y0=[x0, y0],
                        atol=atol,
                        rtol=rtol,
                        method='RK45',
                        args=p.as_floats(),
                        t_eval=t_eval,
                        dense_output=dense_output,
                        events=events,
                        max_step=max_step,
                        )
    except (ValueError, OverflowError) as exc:
        raise RuntimeError("integration from (%g, %g) failed: %s" % (x0, y0, exc)) from exc

    if ode.status == -1:
        raise RuntimeError("integration failed at t = %g, state (%g, %g): %s"
                           % (ode.t[-1], ode.y[0, -1], ode.y[1, -1], ode.message))

    states = _clamp_axes(ode.y, atol).T.copy()
    crossings = () if ode.t_events is None else tuple(
        (float(te), State(float(ye[0]), float(ye[1]))) for tes, yes in zip(ode.t_events, ode.y_events)
        for te, ye in zip(tes, yes))
    trajectory = Trajectory(p, np.asarray(ode.t, dtype=float).copy(), states, (atol, rtol), crossings)
    if dense_output:
        return trajectory, ode.sol
    return trajectory


# ==================================================================================================================================================================================
# Boundedness


def in_gamma_region(p, x, y):
    return (x >= 0) & (x < 1) & (y < float(p.eta) + 1)


def check_boundedness(p, inits, horizon=500.0, tol=(1e-8, 1e-8), samples=5001):
    """First entry time into Gamma for each initial state and whether the orbit stays there"""

    grid = np.linspace(0.0, horizon, samples)
    entered, times, exited = [], [], []
    for init in inits:
        trajectory = integrate(p, init, horizon, tol=tol, t_eval=grid)
        inside = in_gamma_region(p, trajectory.states[:, 0], trajectory.states[:, 1])
        first = int(np.argmax(inside)) if inside.any() else None
        if first is None:
            entered.append(False)
            times.append(None)
            exited.append(False)
            logger.warning("orbit from (%g, %g) never entered Gamma before t = %g", init[0], init[1], horizon)
            continue
        left = not inside[first:].all()
        entered.append(not left)
        times.append(float(grid[first]))
        exited.append(left)
        if left:
            logger.warning("orbit from (%g, %g) left Gamma after entering at t = %g", init[0], init[1], grid[first])
    return BoundednessReport(entered, times, exited)


def random_interior_inits(count, seed, upper=10.0):
    """Reproducible initial states in (0, upper) x (0, upper)"""

    rng = np.random.default_rng(seed)
    pts = rng.uniform(0.0, upper, size=(count, 2))
    pts[pts == 0.0] = upper / 2
    return [State(float(a), float(b)) for a, b in pts]


# ==================================================================================================================================================================================
# Poincare return map along a ray from a focus


def _rotation(p, center):
    """Angular frequency of the linearized flow at a focus, with the Jacobian"""

    J = jacLGA(0.0, center, *p.as_floats())
    trace = J[0, 0] + J[1, 1]
    det = J[0, 0] * J[1, 1] - J[0, 1] * J[1, 0]
    disc = det - trace * trace / 4
    if disc <= 0:
        raise ValueError("equilibrium (%g, %g) is not a focus (det - trace^2/4 = %g)" % (center[0], center[1], disc))
    return math.sqrt(disc), J


def return_map(p, center, radius, ray_angle=0.0, horizon=2000.0, tol=DEFAULT_TOL):
    """Image of the section point at distance radius under the first-return map

    Returns a ReturnSample whose image is None when no return happens within horizon.
    """

    cx, cy = float(center[0]), float(center[1])
    c, s = math.cos(ray_angle), math.sin(ray_angle)
    omega, J = _rotation(p, (cx, cy))
    # angular velocity of the linear flow on the ray sets the crossing orientation
    spin = J[1, 0] * c * c + (J[1, 1] - J[0, 0]) * c * s - J[0, 1] * s * s
    orient = 1.0 if spin > 0 else -1.0

    def section(t, X, *args):
        return orient * (-s * (X[0] - cx) + c * (X[1] - cy))

    section.terminal = True
    section.direction = 1

    start = (cx + radius * c, cy + radius * s)
    quarter = 0.5 * math.pi / omega
    head = integrate(p, start, quarter, tol=tol)
    remaining = horizon - quarter
    if remaining <= 0:
        return ReturnSample(radius, None, None)
    tail = integrate(p, head.final, remaining, tol=tol, events=section)
    if not tail.events:
        logger.debug("radius %g: no return within %g", radius, horizon)
        return ReturnSample(radius, None, None)
    te, ye = tail.events[0]
    image = c * (ye.x - cx) + s * (ye.y - cy)
    if image <= 0:
        return ReturnSample(radius, None, None)
    return ReturnSample(radius, image, quarter + te)


def scan_return_map(p, center, radii, ray_angle=0.0, horizon=2000.0, tol=DEFAULT_TOL):
    return [return_map(p, center, r, ray_angle, horizon, tol) for r in radii]


def find_limit_cycles(p, center, radii, ray_angle=0.0, horizon=2000.0, tol=DEFAULT_TOL, slope_step=None):
    """Fixed points of the return map bracketed by sign changes of P(r) - r over radii

    Non-returning radii are logged and skipped; brackets are only formed between
    neighbouring returning radii.
    """

    radii = list(radii)
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must be strictly ascending")
    scan = scan_return_map(p, center, radii, ray_angle, horizon, tol)
    for sample in scan:
        if sample.image is None:
            logger.warning("radius %g is %s within horizon %g", sample.radius, NON_RETURNING, horizon)

    def displacement(r):
        sample = return_map(p, center, r, ray_angle, horizon, tol)
        if sample.image is None:
            raise RuntimeError("radius %g became %s during refinement" % (r, NON_RETURNING))
        return sample.image - r

    cycles = []
    valid = [smp for smp in scan if smp.image is not None]
    for lo, hi in zip(valid, valid[1:]):
        d_lo, d_hi = lo.displacement, hi.displacement
        if d_lo == 0:
            root = lo.radius
        elif d_lo * d_hi < 0:
            root = brentq(displacement, lo.radius, hi.radius, xtol=10 * tol[0], rtol=4 * np.finfo(float).eps)
        else:
            continue
        cycles.append(_limit_cycle(p, center, root, ray_angle, horizon, tol, slope_step))
    logger.info("%d limit cycle(s) found over radii %g..%g", len(cycles), radii[0], radii[-1])
    return cycles


def _limit_cycle(p, center, radius, ray_angle, horizon, tol, slope_step):
    eps = slope_step if slope_step is not None else max(1e-6, 1e-3 * radius)
    fixed = return_map(p, center, radius, ray_angle, horizon, tol)
    plus = return_map(p, center, radius + eps, ray_angle, horizon, tol)
    minus = return_map(p, center, max(radius - eps, eps / 10), ray_angle, horizon, tol)
    if fixed.image is None or plus.image is None or minus.image is None:
        raise RuntimeError("return map undefined next to the cycle at radius %g" % radius)
    slope = (plus.image - minus.image) / (plus.radius - minus.radius)
    c, s = math.cos(ray_angle), math.sin(ray_angle)
    point = State(float(center[0]) + radius * c, float(center[1]) + radius * s)
    return LimitCycle(point, float(radius), float(fixed.period), "attracting" if abs(slope) < 1 else "repelling",
                      float(slope), float(abs(fixed.image - radius)))


def fit_return_map(p, center, radii, ray_angle=0.0, horizon=2000.0, tol=(1e-12, 1e-12)):
    """Least-squares odd cubic D(r) = c1 r + c3 r^3 through the return-map displacements

    Returns (c1, c3). Near a weak focus c1 vanishes and the sign of c3 is the sign
    of the first focal value.
    """

    scan = scan_return_map(p, center, radii, ray_angle, horizon, tol)
    rs = np.array([smp.radius for smp in scan if smp.image is not None])
    ds = np.array([smp.displacement for smp in scan if smp.image is not None])
    if rs.size < 2:
        raise RuntimeError("too few returning radii to fit the return map")
    A = np.column_stack([rs, rs ** 3])
    (c1, c3), *_ = np.linalg.lstsq(A, ds, rcond=None)
    return float(c1), float(c3)


# ==================================================================================================================================================================================
# Phase portraits


@dataclass(frozen=True, eq=False)
class SeedRun:
    seed: State
    trajectory: Optional[Trajectory]
    error: Optional[str] = None


@dataclass(frozen=True, eq=False)
class Portrait:
    params: object
    window: tuple  # (xmin, xmax, ymin, ymax)
    runs: list
    equilibria: list
    nullclines: dict

    @property
    def is_empty(self):
        return not self.runs


def grid_seeds(window, grid):
    nx, ny = grid
    if nx <= 0 or ny <= 0:
        return []
    xmin, xmax, ymin, ymax = window
    xs = np.linspace(xmin, xmax, nx + 2)[1:-1]
    ys = np.linspace(ymin, ymax, ny + 2)[1:-1]
    return [State(float(x), float(y)) for y in ys for x in xs]


def nullclines(p, window, points=400):
    """Polylines of the nontrivial prey and predator nullclines inside window"""

    alpha, beta, gamma, delta, eta = p.as_floats()
    xmin, xmax, ymin, ymax = window
    xs = np.linspace(max(xmin, 0.0), xmax, points)
    prey = ((1 - xs) * (xs + alpha) - beta) / (gamma * (xs + alpha))
    predator = xs + eta
    out = {}
    for name, ys in (("prey", prey), ("predator", predator)):
        mask = (ys >= ymin) & (ys <= ymax)
        out[name] = np.column_stack([xs[mask], ys[mask]])
    return out


def phase_portrait(p, window, grid, horizon=200.0, tol=(1e-8, 1e-8), samples=2001):
    """Trajectories from interior grid seeds plus equilibria and nullclines; failures are kept per seed"""

    xmin, xmax, ymin, ymax = window
    if not (0 <= xmin < xmax and 0 <= ymin < ymax):
        raise ValueError("window %r is not a rectangle in the closed first quadrant" % (window,))
    t_eval = np.linspace(0.0, horizon, samples)
    runs = []
    for seed in grid_seeds(window, grid):
        try:
            runs.append(SeedRun(seed, integrate(p, seed, horizon, tol=tol, t_eval=t_eval)))
        except RuntimeError as exc:
            logger.warning("seed (%g, %g) failed: %s", seed.x, seed.y, exc)
            runs.append(SeedRun(seed, None, str(exc)))
    return Portrait(p, tuple(window), runs, all_equilibria(p), nullclines(p, window))


def write_portrait_csv(portrait, outdir):
    """One `t,x,y` file per seed plus index.csv listing seeds, files and failures"""

    os.makedirs(outdir, exist_ok=True)
    rows = ["seed,x0,y0,file,status"]
    for k, run in enumerate(portrait.runs):
        name = "seed_%04d.csv" % k
        if run.trajectory is not None:
            run.trajectory.to_csv(os.path.join(outdir, name))
            status = "ok"
        else:
            name, status = "", "failed"
        rows.append("%d,%.12e,%.12e,%s,%s" % (k, run.seed.x, run.seed.y, name, status))
    with open(os.path.join(outdir, "index.csv"), "w", newline="\n") as fh:
        fh.write("\n".join(rows) + "\n")
    return os.path.join(outdir, "index.csv")


def write_portrait_svg(portrait, path):
    """Trajectories as lines, equilibria as labelled markers and nullclines dashed"""

    xmin, xmax, ymin, ymax = portrait.window
    with matplotlib.rc_context({"svg.hashsalt": "lgallee", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(6, 5))
        for run in portrait.runs:
            if run.trajectory is not None:
                ax.plot(run.trajectory.states[:, 0], run.trajectory.states[:, 1], color="0.35", linewidth=0.6)
        for name, line in portrait.nullclines.items():
            ax.plot(line[:, 0], line[:, 1], linestyle="--", linewidth=1.0,
                    color="tab:orange" if name == "prey" else "tab:blue", label="%s nullcline" % name)
        for e in portrait.equilibria:
            x, y = e.location_floats()
            if xmin <= x <= xmax and ymin <= y <= ymax:
                ax.plot(x, y, marker="o" if e.is_attracting else "s", color="k",
                        markerfacecolor="k" if e.is_attracting else "white")
                ax.annotate(e.label, (x, y), textcoords="offset points", xytext=(4, 4))
        ax.set_xlim(xmin, xmax)
        ax.set_ylim(ymin, ymax)
        ax.set_xlabel("prey x")
        ax.set_ylabel("predator y")
        ax.legend(loc="upper right", frameon=False)
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
    return path
