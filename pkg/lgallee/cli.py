"""----------------------------------------------------------------------
PyLGA: command-line front end

    lgallee classify | cusp | unfold | focal | simulate | portrait | sweep | verify

Exit codes: 0 success, 1 usage error, 2 mathematical precondition
violated, 3 verification failure.

Last updated _18 October 2026_ by _PyLGA developers_
----------------------------------------------------------------------"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from fractions import Fraction

import mpmath

from . import __version__
from .algebra import format_rational, parse_rational
from .config import RunConfig
from .equilibria import STABLE_FOCUS, UNSTABLE_FOCUS, all_equilibria, positive_equilibria
from .focal import (MAX_ORDER, degenerate_center_check, focal_resultants, focal_values, hopf_point, prefactor_quotient,
                    recover_z, resultant_in_z)
from .model import PARAMETER_NAMES
from .normalform import cusp_locus, cusp_report_chain, cusp_report_closed, nilpotent_point, unfolding_jacobian
from .simulate import (check_boundedness, find_limit_cycles, integrate, phase_portrait, random_interior_inits,
                       write_portrait_csv, write_portrait_svg)
from .verify import FAIL, run_checks

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH = 2
EXIT_VERIFY = 3


class UsageError(Exception):
    pass


class VerificationError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with status 1"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def rational_text(text):
    """Accept "p/q", "p" or a decimal; exactness is enforced once the command's mode is known"""

    try:
        parse_rational(text, allow_float=True)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return text


# ==================================================================================================================================================================================
# Parser


def _add_common(p, params=True):
    p.add_argument("--config", help="TOML run file with [model], [solver], [output] tables")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--out", help="output path (file or directory depending on the command)")
    if params:
        for name in PARAMETER_NAMES:
            p.add_argument("--" + name, type=rational_text, help="%s as p/q" % name)


def _add_solver(p):
    p.add_argument("--horizon", type=float)
    p.add_argument("--atol", type=float)
    p.add_argument("--rtol", type=float)


def build_parser():
    parser = ArgumentParser(prog="lgallee", description="Bifurcation analysis of a Leslie-Gower model with an additive Allee effect")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("--log-level", default="WARNING", choices=("DEBUG", "INFO", "WARNING", "ERROR"))
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=ArgumentParser)
    sub.required = True

    p = sub.add_parser("classify", help="equilibria and their types")
    _add_common(p)
    p.add_argument("--from-cusp-locus", action="store_true", help="take alpha, beta, delta from the cusp locus at (gamma, eta)")
    p.add_argument("--float", dest="exact", action="store_false", help="allow decimal parameters")

    p = sub.add_parser("cusp", help="codimension of a nilpotent equilibrium")
    _add_common(p)
    p.add_argument("--from-cusp-locus", action="store_true")
    p.add_argument("--nilpotent", action="store_true", help="derive beta and delta from (alpha, gamma, eta)")
    p.add_argument("--method", choices=("closed", "chain", "both"), default="both")

    p = sub.add_parser("unfold", help="Jacobian of the codimension-4 unfolding")
    _add_common(p, params=False)
    p.add_argument("--gamma", type=rational_text, default="3/2")
    p.add_argument("--step", type=float, default=1e-3)
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--dps", type=int, default=30)

    p = sub.add_parser("focal", help="focal values at the weak focus")
    _add_common(p)
    p.add_argument("--z", type=rational_text, help="equilibrium abscissa; with delta, gamma, eta instead of alpha, beta")
    p.add_argument("--order", type=int, default=4)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="exact", action="store_true", default=True)
    mode.add_argument("--float", dest="exact", action="store_false")
    extra = p.add_mutually_exclusive_group()
    extra.add_argument("--resultants", action="store_true", help="Res(L11, Lkk, eta) at fixed (z, delta, gamma)")
    extra.add_argument("--degenerate-center", action="store_true",
                       help="resultants at z = z*(delta) for the given (delta, gamma), with an off-locus control")
    extra.add_argument("--prefactor", action="store_true",
                       help="Res(L11, L22) as a polynomial in z at fixed (delta, gamma), divided by its prefactor")

    p = sub.add_parser("simulate", help="integrate one orbit, check boundedness or search for limit cycles")
    _add_common(p)
    _add_solver(p)
    p.add_argument("--init", type=float, nargs=2, metavar=("X", "Y"))
    p.add_argument("--boundedness", type=int, metavar="N", help="test N random initial states against Gamma")
    p.add_argument("--cycles", action="store_true", help="search for limit cycles around the positive focus")
    p.add_argument("--ray-angle", type=float)
    p.add_argument("--radii", type=float, nargs=3, metavar=("MIN", "MAX", "COUNT"))
    p.add_argument("--seed", type=int)

    p = sub.add_parser("portrait", help="phase portrait as CSV and SVG")
    _add_common(p)
    _add_solver(p)
    p.add_argument("--window", type=float, nargs=4, metavar=("XMIN", "XMAX", "YMIN", "YMAX"))
    p.add_argument("--grid", type=int, nargs=2, metavar=("NX", "NY"))

    p = sub.add_parser("sweep", help="equilibrium types along one parameter")
    _add_common(p)
    p.add_argument("--param", choices=PARAMETER_NAMES)
    p.add_argument("--start", type=rational_text)
    p.add_argument("--stop", type=rational_text)
    p.add_argument("--steps", type=int)

    p = sub.add_parser("verify", help="run the regression suite")
    _add_common(p, params=False)
    p.add_argument("--quick", action="store_true", help="reduced sample sizes, skip the slow checks")
    p.add_argument("--seed", type=int)
    return parser


# ==================================================================================================================================================================================
# Helpers


def load_config(args):
    overrides = {name: getattr(args, name, None) for name in PARAMETER_NAMES}
    overrides["z"] = getattr(args, "z", None)
    for key in ("horizon", "atol", "rtol", "seed"):
        overrides[key] = getattr(args, key, None)
    if getattr(args, "json", False):
        overrides["output_format"] = "json"
    if getattr(args, "init", None) is not None:
        overrides["init"] = args.init
    if getattr(args, "ray_angle", None) is not None:
        overrides["ray_angle"] = args.ray_angle
    if getattr(args, "radii", None) is not None:
        overrides["radius_min"], overrides["radius_max"], overrides["radius_count"] = args.radii
    if getattr(args, "window", None) is not None:
        overrides["window"] = args.window
    if getattr(args, "grid", None) is not None:
        overrides["grid"] = args.grid
    for key in ("param", "start", "stop", "steps"):
        value = getattr(args, key, None)
        if value is not None:
            overrides["sweep_parameter" if key == "param" else "sweep_" + key] = value

    try:
        if args.config:
            return RunConfig.from_toml(args.config, **overrides)
        return RunConfig(**{k: v for k, v in overrides.items() if v is not None})
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc))


def require_params(cfg, exact=True):
    try:
        return cfg.params(exact=exact)
    except ValueError as exc:
        raise UsageError(str(exc))


def require_rational(text, name, exact=True):
    if text is None:
        raise UsageError("--%s is required" % name)
    try:
        return parse_rational(text, allow_float=not exact)
    except ValueError as exc:
        raise UsageError(str(exc))


def emit(cfg, payload, rows=None, headers=None, title=None):
    """Print JSON or an aligned table"""

    if cfg.output_format == "json":
        print(json.dumps(payload, indent=2, default=str))
        return
    if title:
        print(title)
    if rows:
        widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) for i, h in enumerate(headers)]
        print("  ".join(str(h).ljust(w) for h, w in zip(headers, widths)))
        print("  ".join("-" * w for w in widths))
        for r in rows:
            print("  ".join(str(v).ljust(w) for v, w in zip(r, widths)))


# ==================================================================================================================================================================================
# Commands


def cmd_classify(args, cfg):
    if args.from_cusp_locus:
        gamma = require_rational(cfg.model["gamma"], "gamma")
        eta = cfg.model["eta"]
        p = cusp_locus(gamma, None if eta is None else require_rational(eta, "eta")).params
    else:
        p = require_params(cfg, exact=args.exact)
    reports = all_equilibria(p)
    payload = {"params": p.as_dict(), "equilibria": [e.to_dict() for e in reports]}
    keys = ("label", "x", "y", "kind", "trace", "det")
    emit(cfg, payload, [[e.to_dict()[k] for k in keys] for e in reports], keys,
         "alpha=%(alpha)s beta=%(beta)s gamma=%(gamma)s delta=%(delta)s eta=%(eta)s" % p.as_dict())
    return EXIT_OK


def _cusp_params(args, cfg):
    if args.from_cusp_locus:
        eta = cfg.model["eta"]
        return cusp_locus(require_rational(cfg.model["gamma"], "gamma"),
                          None if eta is None else require_rational(eta, "eta")).params
    if args.nilpotent:
        return nilpotent_point(require_rational(cfg.model["alpha"], "alpha"),
                               require_rational(cfg.model["gamma"], "gamma"),
                               require_rational(cfg.model["eta"], "eta"))
    return require_params(cfg)


def cmd_cusp(args, cfg):
    p = _cusp_params(args, cfg)
    reports = []
    if args.method in ("closed", "both"):
        reports.append(cusp_report_closed(p))
    if args.method in ("chain", "both"):
        reports.append(cusp_report_chain(p))
    payload = {"params": p.as_dict(), "reports": [r.to_dict() for r in reports]}
    keys = ("source", "codim", "d20", "d11", "M", "N")
    emit(cfg, payload, [[r.to_dict()[k] for k in keys] for r in reports], keys)
    if len(reports) == 2:
        a, b = reports
        if (a.d20, a.d11, a.M, a.N) != (b.d20, b.d11, b.M, b.N):
            raise VerificationError("closed forms and substitution chain disagree")
    return EXIT_OK


def cmd_unfold(args, cfg):
    gamma = require_rational(args.gamma, "gamma")
    report = unfolding_jacobian(gamma, args.step, args.max_degree, args.dps)
    payload = report.to_dict()
    rows = [[i + 1] + ["%.6g" % v for v in row] for i, row in enumerate(report.jacobian)]
    emit(cfg, payload, rows, ("chi", "d_beta", "d_alpha", "d_delta", "d_eta"),
         "det = %.6g (halving change %.3g%%), nonzero: %s" % (report.jac_det, 100 * report.relative_change, report.nonzero))
    return EXIT_OK


def cmd_focal(args, cfg):
    if not 1 <= args.order <= MAX_ORDER:
        raise UsageError("--order must be within 1..%d" % MAX_ORDER)
    model = cfg.model
    if args.degenerate_center or args.resultants or args.prefactor:
        return _focal_resultants(args, cfg)
    if model["z"] is not None:
        values = [require_rational(model[k], k, args.exact) for k in ("z", "delta", "gamma", "eta")]
        points = [hopf_point(*values)]
    else:
        points = [rec.point for rec in recover_z(require_params(cfg, exact=args.exact))]
        if not points:
            raise ValueError("no Hopf point inside the Hopf region matches these parameters")
    reports = [focal_values(h, args.order, exact=args.exact) for h in points]
    payload = {"points": [r.to_dict() for r in reports]}
    rows = []
    for r in reports:
        d = r.to_dict()
        for k, (value, num) in enumerate(zip(d["L"], d["Lnum"]), start=1):
            rows.append([d["hopf"]["z"], "L%d" % k, value, num])
    emit(cfg, payload, rows, ("z", "k", "L_k", "L_kk"))
    return EXIT_OK


def _focal_resultants(args, cfg):
    model = cfg.model
    order = max(args.order, 2)
    delta = require_rational(model["delta"], "delta")
    gamma = require_rational(model["gamma"], "gamma")
    if args.degenerate_center:
        report = degenerate_center_check(delta, gamma, order)
        d = report.to_dict()
        rows = [["L11, L%d%d" % (k, k), m, v, cm, cv]
                for k, (m, v, cm, cv) in enumerate(zip(d["magnitudes"], d["vanishing"], d["control_magnitudes"],
                                                       d["control_vanishing"]), start=2)]
        emit(cfg, d, rows, ("pair", "rel |Res|", "vanishing", "control", "control vanishing"),
             "z* = %s, control z = %s, floor %.0e" % (d["z"], d["control_z"], report.floor))
        return EXIT_OK
    if args.prefactor:
        r12 = resultant_in_z(delta, gamma)
        g1, remainder = prefactor_quotient(r12, delta, gamma)
        d = {"delta": format_rational(delta), "gamma": format_rational(gamma), "degree": r12.degree(),
             "g1": [format_rational(c) for c in g1.coeffs], "remainder_degree": remainder.degree(),
             "divisible": remainder.is_zero()}
        emit(cfg, d, [[d["degree"], g1.degree(), d["divisible"]]], ("deg r12", "deg g1", "divisible"),
             "Res(L11, L22) in z over the prefactor")
        return EXIT_OK

    report = focal_resultants(require_rational(model["z"], "z"), delta, gamma, order)
    d = report.to_dict()
    rows = [["L11, L%d%d" % (k, k), r] for k, r in enumerate(d["resultants"], start=2)]
    emit(cfg, d, rows, ("pair", "Res"), "R1 = %s, R2 = %s" % (d["R1"], d["R2"]))
    return EXIT_OK


def _positive_focus(p):
    foci = [e for e in positive_equilibria(p) if e.kind in (STABLE_FOCUS, UNSTABLE_FOCUS)]
    if not foci:
        raise ValueError("no positive equilibrium of focus type")
    return foci[-1]


def cmd_simulate(args, cfg):
    p = require_params(cfg, exact=False)
    payload = {"params": p.as_dict(), "config": cfg.to_dict()}
    rows = []
    if args.boundedness:
        inits = random_interior_inits(args.boundedness, cfg.seed)
        report = check_boundedness(p, inits, cfg.horizon, tol=cfg.tol)
        payload["boundedness"] = report.to_dict()
        rows.append(["boundedness", "%d/%d entered" % (sum(report.entered_gamma_region), len(inits))])
    if args.cycles:
        e = _positive_focus(p)
        cycles = find_limit_cycles(p, e.location_floats(), cfg.radii, cfg.ray_angle, tol=cfg.tol)
        payload["limit_cycles"] = [c.to_dict() for c in cycles]
        rows.extend([["cycle", "r=%.8g %s slope=%.6g period=%.6g" % (c.radius, c.stability, c.floquet_slope, c.period)]
                     for c in cycles])
    if not (args.boundedness or args.cycles) or args.init is not None:
        trajectory = integrate(p, cfg.init, cfg.horizon, tol=cfg.tol)
        if args.out:
            trajectory.to_csv(args.out)
        payload["final_state"] = list(trajectory.final)
        rows.append(["orbit", "(%g, %g) -> (%.10g, %.10g) at t=%g" % (cfg.init + trajectory.final + (cfg.horizon,))])
    emit(cfg, payload, rows, ("task", "result"))
    return EXIT_OK


def cmd_portrait(args, cfg):
    p = require_params(cfg, exact=False)
    outdir = args.out or cfg.output_dir
    horizon = args.horizon if args.horizon is not None else 200.0
    portrait = phase_portrait(p, cfg.window, cfg.grid, horizon)
    index = write_portrait_csv(portrait, outdir)
    svg = write_portrait_svg(portrait, os.path.join(outdir, "portrait.svg"))
    failed = sum(run.trajectory is None for run in portrait.runs)
    payload = {"index": index, "svg": svg, "seeds": len(portrait.runs), "failed": failed}
    emit(cfg, payload, [[index, svg, len(portrait.runs), failed]], ("index", "svg", "seeds", "failed"))
    return EXIT_OK


def cmd_sweep(args, cfg):
    base = require_params(cfg)
    start = require_rational(cfg.sweep_start, "start")
    stop = require_rational(cfg.sweep_stop, "stop")
    steps = cfg.sweep_steps
    if steps < 1:
        raise UsageError("--steps must be at least 1")
    name = cfg.sweep_parameter
    rows, points = [], []
    for k in range(steps + 1):
        value = start + (stop - start) * Fraction(k, steps)
        p = base.replace(**{name: value})
        reports = all_equilibria(p)
        points.append({name: format_rational(value), "equilibria": [e.to_dict() for e in reports]})
        rows.append([format_rational(value), " ".join("%s:%s" % (e.label, e.to_dict()["kind"]) for e in reports)])
    emit(cfg, {"parameter": name, "points": points}, rows, (name, "equilibria"))
    return EXIT_OK


def cmd_verify(args, cfg):
    results = run_checks(seed=cfg.seed, quick=args.quick)
    payload = {"checks": [r.to_dict() for r in results]}
    emit(cfg, payload, [[r.name, r.status, "%.2f" % r.seconds, r.detail] for r in results],
         ("check", "status", "seconds", "detail"))
    if any(r.status == FAIL for r in results):
        raise VerificationError("%d check(s) failed" % sum(r.status == FAIL for r in results))
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "cusp": cmd_cusp,
    "unfold": cmd_unfold,
    "focal": cmd_focal,
    "simulate": cmd_simulate,
    "portrait": cmd_portrait,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}


def run(argv=None):
    """Parse argv, run one command and return its exit code"""

    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")

    Time = time.time()
    try:
        cfg = load_config(args)
        code = COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print("lgallee %s: error: %s" % (args.command, exc), file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print("lgallee %s: verification failed: %s" % (args.command, exc), file=sys.stderr)
        return EXIT_VERIFY
    except (ValueError, ZeroDivisionError, RuntimeError, TypeError) as exc:
        print("lgallee %s: %s" % (args.command, exc), file=sys.stderr)
        return EXIT_MATH
    logger.info("%s finished in %.2f sec", args.command, time.time() - Time)
    return code


def main():
    sys.exit(run())
