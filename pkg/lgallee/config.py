"""----------------------------------------------------------------------
PyLGA: run configuration

A run is fully described by a RunConfig: model parameters as exact
"p/q" strings, solver tolerances, output location and format, the
sweep grid and the simulation settings, plus a fixed random seed.
Values come from a TOML file with [model], [solver], [output], [sweep]
and [simulate] tables; command-line flags override the file.

Last updated _18 October 2026_ by _PyLGA developers_
----------------------------------------------------------------------"""

from __future__ import annotations

import logging
import sys

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .algebra import format_rational
from .model import PARAMETER_NAMES, Params

logger = logging.getLogger(__name__)

SECTIONS = ("model", "solver", "output", "sweep", "simulate")


class RunConfig:
    def __init__(
            self,
            name="default",
            seed=20261018,

            # Model
            alpha=None,
            beta=None,
            gamma=None,
            delta=None,
            eta=None,
            z=None,

            # Solver
            atol=1e-10,
            rtol=1e-10,
            horizon=500.0,

            # Output
            output_dir="output",
            output_format="table",

            # Sweep
            sweep_parameter="beta",
            sweep_start=None,
            sweep_stop=None,
            sweep_steps=10,

            # Simulate
            init=(0.5, 0.5),
            ray_angle=0.0,
            radius_min=0.005,
            radius_max=0.05,
            radius_count=10,
            window=(0.0, 1.0, 0.0, 1.2),
            grid=(6, 6),
    ):
        """Settings for one command-line run

        Parameters
        ----------
        name: string, optional
            Name of the run
        seed: int, optional
            Seed of every random draw in the run (random initial states, sampled points)
        alpha, beta, gamma, delta, eta: string, optional
            Nondimensional model parameters as "p/q"
        z: string, optional
            Equilibrium abscissa parametrizing the Hopf locus

        Examples
        --------
        >>> cfg = RunConfig(alpha="1/2", beta="1", gamma="1", delta="1/2", eta="1/10")
        >>> cfg.params().alpha
        Fraction(1, 2)
        """

        self._name = name
        self._seed = int(seed)

        self._model = {"alpha": alpha, "beta": beta, "gamma": gamma, "delta": delta, "eta": eta, "z": z}

        self._atol = float(atol)
        self._rtol = float(rtol)
        self._horizon = float(horizon)
        if self._atol <= 0 or self._rtol <= 0:
            raise ValueError("solver tolerances must be positive")
        if self._horizon <= 0:
            raise ValueError("horizon must be positive")

        if output_format not in ("table", "json"):
            raise ValueError("output format must be 'table' or 'json', got %r" % output_format)
        self._output_dir = output_dir
        self._output_format = output_format

        if sweep_parameter not in PARAMETER_NAMES:
            raise ValueError("sweep parameter must be one of %s" % ", ".join(PARAMETER_NAMES))
        self._sweep_parameter = sweep_parameter
        self._sweep_start = sweep_start
        self._sweep_stop = sweep_stop
        self._sweep_steps = int(sweep_steps)

        self._init = tuple(float(v) for v in init)
        self._ray_angle = float(ray_angle)
        self._radius_min = float(radius_min)
        self._radius_max = float(radius_max)
        self._radius_count = int(radius_count)
        self._window = tuple(float(v) for v in window)
        self._grid = tuple(int(v) for v in grid)

    @classmethod
    def from_toml(cls, path, **overrides):
        """Read a TOML run file; keyword overrides that are not None win over file values"""

        with open(path, "rb") as fh:
            data = tomllib.load(fh)
        unknown = set(data) - set(SECTIONS) - {"name", "seed"}
        if unknown:
            raise ValueError("unknown section(s) in %s: %s" % (path, ", ".join(sorted(unknown))))

        kwargs = {k: data[k] for k in ("name", "seed") if k in data}
        model = data.get("model", {})
        for key in list(PARAMETER_NAMES) + ["z"]:
            if key in model:
                kwargs[key] = _as_text(model[key], key)
        solver = data.get("solver", {})
        for key in ("atol", "rtol", "horizon"):
            if key in solver:
                kwargs[key] = solver[key]
        output = data.get("output", {})
        if "dir" in output:
            kwargs["output_dir"] = output["dir"]
        if "format" in output:
            kwargs["output_format"] = output["format"]
        sweep = data.get("sweep", {})
        for key in ("parameter", "start", "stop", "steps"):
            if key in sweep:
                kwargs["sweep_" + key] = _as_text(sweep[key], key) if key in ("start", "stop") else sweep[key]
        simulate = data.get("simulate", {})
        for key in ("init", "ray_angle", "radius_min", "radius_max", "radius_count", "window", "grid"):
            if key in simulate:
                kwargs[key] = simulate[key]

        kwargs.update({k: v for k, v in overrides.items() if v is not None})
        logger.debug("loaded run configuration from %s", path)
        return cls(**kwargs)

    def params(self, exact=True):
        """Model parameters; all five must be set"""
        return Params.from_mapping({k: v for k, v in self._model.items() if v is not None and k != "z"}, exact=exact)

    def to_dict(self):
        model = {k: (format_rational(v) if not isinstance(v, str) else v) for k, v in self._model.items()
                 if v is not None}
        return {
            "name": self._name,
            "seed": self._seed,
            "model": model,
            "solver": {"atol": self._atol, "rtol": self._rtol, "horizon": self._horizon},
            "output": {"dir": self._output_dir, "format": self._output_format},
            "sweep": {"parameter": self._sweep_parameter, "start": self._sweep_start, "stop": self._sweep_stop,
                      "steps": self._sweep_steps},
            "simulate": {"init": list(self._init), "ray_angle": self._ray_angle, "radius_min": self._radius_min,
                         "radius_max": self._radius_max, "radius_count": self._radius_count,
                         "window": list(self._window), "grid": list(self._grid)},
        }

    @property
    def name(self):
        return self._name

    @property
    def seed(self):
        return self._seed

    @property
    def model(self):
        return dict(self._model)

    @property
    def tol(self):
        return self._atol, self._rtol

    @property
    def horizon(self):
        return self._horizon

    @property
    def output_dir(self):
        return self._output_dir

    @property
    def output_format(self):
        return self._output_format

    @property
    def sweep_parameter(self):
        return self._sweep_parameter

    @property
    def sweep_start(self):
        return self._sweep_start

    @property
    def sweep_stop(self):
        return self._sweep_stop

    @property
    def sweep_steps(self):
        return self._sweep_steps

    @property
    def init(self):
        return self._init

    @property
    def ray_angle(self):
        return self._ray_angle

    @property
    def radii(self):
        if self._radius_count < 2 or not 0 < self._radius_min < self._radius_max:
            raise ValueError("radii need 0 < radius_min < radius_max and radius_count >= 2")
        step = (self._radius_max - self._radius_min) / (self._radius_count - 1)
        return [self._radius_min + k * step for k in range(self._radius_count)]

    @property
    def window(self):
        return self._window

    @property
    def grid(self):
        return self._grid


def _as_text(value, key):
    """TOML numbers become strings so that exact parsing rejects floats"""

    if isinstance(value, bool):
        raise ValueError("%s must be a rational, got a boolean" % key)
    if isinstance(value, float):
        return value
    return str(value)
