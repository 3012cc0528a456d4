"""Command-line front end.

Exit status: 0 on success, 2 when the sides bound no cyclic polygon (or the
requested quantity diverges), 1 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Callable, Optional, Sequence, TextIO

import numpy as np

from . import defects as ang
from . import embedding as emb
from . import params, solver as rad
from .errors import DomainError, NotRealizableError, RadiusDivergesError

TOL_RANGE = (1e-15, 1e-6)
TOL_ENV = "HYPCYC_TOL"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(f"{self.prog}: {message}")


def _fmt(x: Optional[float]) -> str:
    return "-" if x is None else f"{x:.15g}"


def parse_sides(text: str) -> tuple[float, ...]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"cannot parse side lengths {text!r}") from None
    try:
        return params.as_sides(values)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _parse_lengths(text: str, minimum: int) -> tuple[float, ...]:
    try:
        values = tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise UsageError(f"cannot parse lengths {text!r}") from None
    if len(values) < minimum or not all(math.isfinite(v) and v > 0 for v in values):
        raise UsageError(f"need at least {minimum} positive lengths, got {text!r}")
    return values


def _nonneg(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (math.isfinite(v) and v >= 0):
        raise argparse.ArgumentTypeError(f"must be a nonnegative number: {text!r}")
    return v


def _default_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return params.DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"{TOL_ENV} is not a number: {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hypcyc", description="Cyclic and horocyclic hyperbolic polygons from side lengths.")
    p.add_argument("--tol", type=float, default=None,
                   help=f"classification tolerance in [1e-15, 1e-6] (default 1e-12, or ${TOL_ENV})")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_sides(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--sides", required=True, help="comma-separated side lengths")
        return sp

    with_sides("classify", "region of the side-length tuple")
    sp = with_sides("radius", "circumradius")
    sp.add_argument("--method", choices=("auto", "closed", "bisect"), default="auto")
    with_sides("angles", "angles at the center and at the vertices")
    sp = with_sides("defect", "radius-R defect")
    sp.add_argument("--R", type=_nonneg, required=True)
    sp = with_sides("jacobian", "derivatives with respect to the sides")
    sp.add_argument("--R", type=_nonneg, required=True)
    sp.add_argument("--check-fd", action="store_true", help="compare against central differences")
    sp = with_sides("embed", "vertex coordinates as JSON or SVG")
    sp.add_argument("--model", choices=("disk", "uhp"), default="disk")
    sp.add_argument("--format", choices=("json", "svg"), default="json")

    bp = sub.add_parser("bounds", help="defect bounds")
    bsub = bp.add_subparsers(dest="bound", required=True, parser_class=_Parser)
    hp = bsub.add_parser("horocyclic", help="lower bound on the defect of non-centered polygons")
    hp.add_argument("--lower", required=True, help="comma-separated lower bounds on the short sides")
    hp.add_argument("--R", type=_nonneg, default=0.0)

    sw = sub.add_parser("sweep", help="vary one side and tabulate")
    sw.add_argument("--template", required=True, help="comma-separated side lengths")
    sw.add_argument("--vary", type=int, required=True, help="index of the side to vary")
    sw.add_argument("--from", dest="start", type=float, required=True)
    sw.add_argument("--to", dest="stop", type=float, required=True)
    sw.add_argument("--steps", type=int, required=True)
    sw.add_argument("--R", type=_nonneg, default=0.0)
    return p


# ------------------------------------------------------------- commands


def _emit(out: TextIO, as_json: bool, doc: dict, lines: Sequence[str]) -> None:
    if as_json:
        out.write(json.dumps(doc) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def cmd_classify(a, tol, out) -> int:
    d = parse_sides(a.sides)
    cls = params.classify(d, tol)
    _emit(out, a.json, {"class": str(cls), "kind": cls.kind.value, "index": cls.index}, [str(cls)])
    return 2 if cls.kind == params.Kind.NOT_REALIZABLE else 0


def cmd_radius(a, tol, out) -> int:
    d = parse_sides(a.sides)
    if a.method == "closed":
        if len(d) == 3:
            J = rad.radius_closed_tri(*d)
        elif len(d) == 4:
            J = rad.radius_closed_quad(*d)
        else:
            raise UsageError("--method closed needs 3 or 4 sides")
        doc = {"J": J, "equation": "closed-form"}
        _emit(out, a.json, doc, [f"J: {_fmt(J)}", "equation: closed-form"])
        return 0
    r = rad.radius(d, tol, method="bisect" if a.method == "bisect" else "newton")
    doc = {"J": r.J, "equation": r.equation_used, "residual": r.residual,
           "iterations": r.iterations, "class": str(r.polygon_class)}
    _emit(out, a.json, doc, [
        f"J: {_fmt(r.J)}",
        f"equation: {r.equation_used}",
        f"residual: {r.residual:.3g}",
        f"iterations: {r.iterations}",
        f"class: {r.polygon_class}",
    ])
    return 0


def cmd_angles(a, tol, out) -> int:
    d = parse_sides(a.sides)
    data = ang.angles(d, tol)
    doc = {"class": str(data.polygon_class), "J": data.J, "alpha": list(data.alpha),
           "beta": list(data.beta), "nu": list(data.nu)}
    lines = [f"class: {data.polygon_class}", f"J: {_fmt(data.J)}",
             f"{'i':>3} {'d':>22} {'alpha':>22} {'beta':>22} {'nu':>22}"]
    for i, (x, al, be, nu) in enumerate(zip(d, data.alpha, data.beta, data.nu)):
        lines.append(f"{i:>3} {_fmt(x):>22} {_fmt(al):>22} {_fmt(be):>22} {_fmt(nu):>22}")
    _emit(out, a.json, doc, lines)
    return 0


def cmd_defect(a, tol, out) -> int:
    d = parse_sides(a.sides)
    value = ang.defect(d, a.R, tol)
    _emit(out, a.json, {"defect": value, "R": a.R}, [f"defect: {_fmt(value)}"])
    return 0


def _stack(d: Sequence[float], R: float, tol: float) -> np.ndarray:
    data = ang.angles(d, tol)
    return np.concatenate([[data.J], data.alpha, data.beta, data.nu, [ang.defect_from_angles(data, R)]])


def finite_difference_gap(d: Sequence[float], R: float, tol: float, h: float = 1e-5) -> float:
    """Worst ratio |analytic - central difference| / (1e-5 |central difference| + 1e-8).

    A value at most 1 means every partial passes.
    """
    jac = ang.jacobian(d, R, tol)
    analytic = np.vstack([jac.dJ, jac.dAlpha, jac.dBeta, jac.dNu, jac.dDefect])
    base = np.array(d)
    cols = []
    for j in range(len(d)):
        e = np.zeros(len(d))
        e[j] = h
        cols.append((_stack(base + e, R, tol) - _stack(base - e, R, tol)) / (2 * h))
    numeric = np.array(cols).T
    return float(np.max(np.abs(analytic - numeric) / (1e-5 * np.abs(numeric) + 1e-8)))


def cmd_jacobian(a, tol, out) -> int:
    d = parse_sides(a.sides)
    jac = ang.jacobian(d, a.R, tol)
    doc = {"class": str(jac.polygon_class), "R": a.R, "dJ": jac.dJ.tolist(),
           "dAlpha": jac.dAlpha.tolist(), "dBeta": jac.dBeta.tolist(),
           "dNu": jac.dNu.tolist(), "dDefect": jac.dDefect.tolist()}
    if jac.one_sided is not None:
        doc["one_sided"] = {k: {"dAlpha": v[0].tolist(), "dBeta": v[1].tolist()}
                            for k, v in jac.one_sided.items()}

    def block(name: str, m: np.ndarray) -> list[str]:
        rows = np.atleast_2d(m)
        return [f"{name}:"] + ["  " + " ".join(f"{x:>22.15g}" for x in row) for row in rows]

    lines = [f"class: {jac.polygon_class}"]
    lines += block("dJ", jac.dJ) + block("dAlpha", jac.dAlpha) + block("dBeta", jac.dBeta)
    lines += block("dNu", jac.dNu) + block("dDefect", jac.dDefect)
    if jac.one_sided is not None:
        for side, (da, db) in jac.one_sided.items():
            lines += block(f"dAlpha[{side}]", da) + block(f"dBeta[{side}]", db)
    if a.check_fd:
        if jac.polygon_class.kind not in (params.Kind.CENTERED, params.Kind.NON_CENTERED):
            raise UsageError("--check-fd needs a point off the centered boundary")
        gap = finite_difference_gap(d, a.R, tol)
        doc["fd_gap"] = gap
        doc["fd_pass"] = gap <= 1.0
        lines.append(f"fd gap / tolerance: {gap:.3g} ({'pass' if gap <= 1.0 else 'FAIL'})")
    _emit(out, a.json, doc, lines)
    return 0


def cmd_embed(a, tol, out) -> int:
    d = parse_sides(a.sides)
    e = emb.embed(d, a.model, tol)
    out.write(emb.emit(e, a.format).decode())
    return 0


def cmd_bounds(a, tol, out) -> int:
    lower = _parse_lengths(a.lower, 2)
    value = ang.defect_lower_bound_horocyclic(lower, a.R)
    _emit(out, a.json, {"bound": value, "R": a.R, "lower": list(lower)}, [f"bound: {_fmt(value)}"])
    return 0


def cmd_sweep(a, tol, out) -> int:
    template = parse_sides(a.template)
    n = len(template)
    if not 0 <= a.vary < n:
        raise UsageError(f"--vary must be in [0, {n - 1}]")
    if a.steps < 1:
        raise UsageError("--steps must be at least 1")
    if not (a.start > 0 and a.stop > 0):
        raise UsageError("--from and --to must be positive")
    rows = []
    for k in range(a.steps + 1):
        x = a.start + (a.stop - a.start) * k / a.steps
        d = list(template)
        d[a.vary] = x
        cls = params.classify(d, tol)
        J = D = None
        if cls.kind != params.Kind.NOT_REALIZABLE:
            data = ang.angles(d, tol)
            J = data.J
            D = ang.defect_from_angles(data, a.R)
        rows.append({"value": x, "class": str(cls), "J": J, "defect": D})
    if a.json:
        out.write(json.dumps({"vary": a.vary, "R": a.R, "rows": rows}) + "\n")
    else:
        out.write(f"{'d[' + str(a.vary) + ']':>22} {'class':>22} {'J':>22} {'defect':>22}\n")
        for r in rows:
            out.write(f"{_fmt(r['value']):>22} {r['class']:>22} {_fmt(r['J']):>22} {_fmt(r['defect']):>22}\n")
    return 0


COMMANDS: dict[str, Callable] = {
    "classify": cmd_classify,
    "radius": cmd_radius,
    "angles": cmd_angles,
    "defect": cmd_defect,
    "jacobian": cmd_jacobian,
    "embed": cmd_embed,
    "bounds": cmd_bounds,
    "sweep": cmd_sweep,
}


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        a = build_parser().parse_args(argv)
        tol = a.tol if a.tol is not None else _default_tol()
        if not TOL_RANGE[0] <= tol <= TOL_RANGE[1]:
            raise UsageError(f"tolerance {tol:g} outside [{TOL_RANGE[0]:g}, {TOL_RANGE[1]:g}]")
        return COMMANDS[a.command](a, tol, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except (NotRealizableError, RadiusDivergesError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
