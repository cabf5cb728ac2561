"""Command-line front end.

    kdet signature "x^3-2"
    kdet ranks "x^2+1" --n-max 12 --format csv
    kdet det "x" --s 1.5+2i --method both
    kdet verify "x^3-2" --grid default --tol 1e-8
    kdet lerch 0.5

Output is JSON on stdout (complex numbers as {"re": ..., "im": ...}).
Exit codes: 0 success, 1 verification failed, 2 parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import io
import itertools
import json
import logging
import math
import sys
from dataclasses import dataclass, field

from .errors import DegreeError, KdetError, ParseError
from .ktheory import spectrum
from .number_field import parse_polynomial, render_polynomial, signature
from .regdet import det_closed, det_spectral
from .special_fn import (
    PrecisionConfig,
    gamma,
    hurwitz_zeta_dw_at0_fd,
    lerch_regprod,
    precision_from_env,
)

log = logging.getLogger("kdet")

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3

DEFAULT_GRID = tuple(
    complex(re, im) for re, im in itertools.product((0.3, 1.0, 1.7, 2.0, 3.5), (0.0, 0.5, -0.5, 2.0, -2.0))
)
EXCLUDED_POINTS = {0j: "pole of s^-1 at s=0", 0.5 + 0j: "trivial zero of (s - 1/2) at s=1/2"}


def parse_complex(text: str) -> complex:
    cleaned = text.strip().replace(" ", "").replace("i", "j")
    try:
        z = complex(cleaned)
    except ValueError:
        raise ParseError(f"cannot read {text!r} as a complex number", 0, "e.g. 1.5, 2i, 0.3-0.5i") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ParseError(f"{text!r} is not finite", 0, "a finite complex number")
    return z


def parse_grid(spec: str) -> list[complex]:
    if spec.strip().lower() == "default":
        return list(DEFAULT_GRID)
    return [parse_complex(part) for part in spec.split(",") if part.strip()]


def cjson(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


@dataclass
class VerificationReport:
    field_poly: str
    sig: dict
    grid: list
    tolerance: float
    precision: dict
    excluded: list = field(default_factory=list)
    per_point: list = field(default_factory=list)
    max_rel_err: float = 0.0
    passed: bool = False
    all_failed: bool = False

    def to_dict(self):
        return {
            "field_poly": self.field_poly,
            "sig": self.sig,
            "grid": [cjson(s) for s in self.grid],
            "excluded": self.excluded,
            "per_point": self.per_point,
            "max_rel_err": self.max_rel_err,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "precision": self.precision,
        }


def verify(poly_text: str, grid: list[complex], tol: float, cfg: PrecisionConfig) -> VerificationReport:
    poly = parse_polynomial(poly_text)
    sig = signature(poly)
    report = VerificationReport(render_polynomial(poly), sig.to_dict(), list(grid), tol, cfg.to_dict())
    errored = 0
    for s in grid:
        if s in EXCLUDED_POINTS:
            reason = EXCLUDED_POINTS[s]
            log.info("excluding s=%s: %s", s, reason)
            report.excluded.append({"s": cjson(s), "reason": reason})
            continue
        entry = {"s": cjson(s), "det_spectral": None, "det_closed": None, "abs_err": None, "rel_err": None, "error": None}
        try:
            spec_v = det_spectral(s, sig, cfg).value
            closed_v = det_closed(s, sig).value
        except KdetError as exc:
            errored += 1
            entry["error"] = {"code": exc.code, "message": str(exc)}
        else:
            abs_err = abs(spec_v - closed_v)
            rel_err = abs_err / abs(closed_v) if closed_v != 0 else abs_err
            entry.update(det_spectral=cjson(spec_v), det_closed=cjson(closed_v), abs_err=abs_err, rel_err=rel_err)
            report.max_rel_err = max(report.max_rel_err, rel_err)
        report.per_point.append(entry)
    report.passed = errored == 0 and report.max_rel_err < tol
    report.all_failed = bool(report.per_point) and errored == len(report.per_point)
    return report


def _precision(args) -> PrecisionConfig:
    base = precision_from_env().to_dict()
    for key in ("em_shift", "em_order", "fd_step"):
        value = getattr(args, key)
        if value is not None:
            base[key] = value
    return PrecisionConfig(**base)


def _emit(obj, out):
    out.write(json.dumps(obj, allow_nan=False) + "\n")


def _emit_csv(header, rows, out):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    out.write(buf.getvalue())


def cmd_signature(args, out):
    sig = signature(parse_polynomial(args.poly))
    _emit(sig.to_dict(), out)
    return EXIT_OK


def cmd_ranks(args, out):
    poly = parse_polynomial(args.poly)
    sig = signature(poly)
    slices = spectrum(sig, args.n_max)
    if args.format == "csv":
        _emit_csv(["n", "eigenvalue", "rank"], [(sl.n, str(sl.eigenvalue), sl.multiplicity) for sl in slices], out)
    else:
        _emit({"polynomial": render_polynomial(poly), "sig": sig.to_dict(), "rows": [sl.to_dict() for sl in slices]}, out)
    return EXIT_OK


def cmd_det(args, out):
    poly = parse_polynomial(args.poly)
    sig = signature(poly)
    s = parse_complex(args.s)
    cfg = _precision(args)
    values = {}
    if args.method in ("spectral", "both"):
        values["spectral"] = det_spectral(s, sig, cfg).value
    if args.method in ("closed", "both"):
        values["closed"] = det_closed(s, sig).value
    abs_diff = rel_diff = None
    if args.method == "both":
        abs_diff = abs(values["spectral"] - values["closed"])
        rel_diff = abs_diff / abs(values["closed"]) if values["closed"] != 0 else abs_diff
    _emit(
        {
            "polynomial": render_polynomial(poly),
            "sig": sig.to_dict(),
            "s": cjson(s),
            "method": args.method,
            "values": {k: cjson(v) for k, v in values.items()},
            "abs_diff": abs_diff,
            "rel_diff": rel_diff,
            "precision": cfg.to_dict(),
        },
        out,
    )
    return EXIT_OK


def cmd_verify(args, out):
    cfg = _precision(args)
    report = verify(args.poly, parse_grid(args.grid), args.tol, cfg)
    if args.format == "csv":
        rows = []
        for p in report.per_point:
            spec_v, closed_v = p["det_spectral"] or {}, p["det_closed"] or {}
            rows.append((
                p["s"]["re"], p["s"]["im"],
                spec_v.get("re"), spec_v.get("im"), closed_v.get("re"), closed_v.get("im"),
                p["abs_err"], p["rel_err"], p["error"]["code"] if p["error"] else "",
            ))
        _emit_csv(
            ["s_re", "s_im", "spectral_re", "spectral_im", "closed_re", "closed_im", "abs_err", "rel_err", "error"],
            rows, out,
        )
    else:
        _emit(report.to_dict(), out)
    if report.all_failed:
        return EXIT_DOMAIN
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_lerch(args, out):
    x = parse_complex(args.x)
    cfg = _precision(args)
    closed = lerch_regprod(x)
    fd = cmath.exp(-hurwitz_zeta_dw_at0_fd(x, cfg))
    check = abs(closed * gamma(x) - math.sqrt(2 * math.pi))
    _emit({"x": cjson(x), "closed": cjson(closed), "finite_difference": cjson(fd), "gamma_check": check,
           "precision": cfg.to_dict()}, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kdet", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log exclusions and progress to stderr")

    precision = argparse.ArgumentParser(add_help=False)
    precision.add_argument("--em-shift", dest="em_shift", type=int, help="directly summed Hurwitz terms (default 30)")
    precision.add_argument("--em-order", dest="em_order", type=int, help="Bernoulli correction order (default 12)")
    precision.add_argument("--fd-step", dest="fd_step", type=float, help="finite-difference step (default 1e-5)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("signature", help="signature (r1, r2) of the field defined by POLY")
    p.add_argument("poly")
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("ranks", help="Borel ranks and eigenvalues for n = 0..n_max")
    p.add_argument("poly")
    p.add_argument("--n-max", dest="n_max", type=int, default=12)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_ranks)

    p = sub.add_parser("det", parents=[precision], help="regularized determinant at one point s")
    p.add_argument("poly")
    p.add_argument("--s", required=True, help="complex point, e.g. 1.7-0.5i")
    p.add_argument("--method", choices=("spectral", "closed", "both"), default="both")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("verify", parents=[precision], help="compare both routes over a grid of s")
    p.add_argument("poly")
    p.add_argument("--grid", default="default", help='"default" or comma-separated complex points')
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lerch", parents=[precision], help="regularized product of (n + x) against sqrt(2 pi)/Gamma(x)")
    p.add_argument("x")
    p.set_defaults(func=cmd_lerch)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args, out)
    except (ParseError, DegreeError) as exc:
        code = EXIT_PARSE
        err = exc
    except KdetError as exc:
        code = EXIT_DOMAIN
        err = exc
    payload = {"code": err.code, "message": str(err)}
    if isinstance(err, ParseError):
        payload.update(position=err.position, expected=err.expected)
    _emit({"error": payload}, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
