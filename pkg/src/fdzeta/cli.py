"""Command-line front end.

Commands: ``eval``, ``check``, ``list``, ``fourier``.  Exit codes: 0 on
success, 1 when an identity (or a duality residual) fails, 2 on a domain
violation, 64 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import transform_engine as te
from . import zeta_kernel as zk
from .errors import DomainError
from .identity_catalog import SamplePlan, known_ids, register_catalog, run_checks
from .numerics import Tolerance

EXIT_OK, EXIT_FAIL, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2, 64

FUNCTIONS = {
    "gamma": "gamma",
    "riemann-zeta": "riemann_zeta",
    "riemann-zeta-strip": te.ZETA_STRIP,
    "eta-factor": "dirichlet_eta_factor",
    "hurwitz-zeta": "hurwitz_zeta",
    "lerch-phi": "lerch_phi",
    "polylog": "polylog",
    "fd": "fermi_dirac",
    "be": "bose_einstein",
    "efd": "efd_theta",
    "ebe": "ebe_psi",
}

GLOBAL_DEFAULTS = {"tol_rel": 1e-6, "tol_abs": 1e-9, "seed": 42, "samples": 10,
                   "format": "json", "out": None, "workers": 1}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def parse_complex(text: str) -> complex:
    """``RE`` or ``RE,IM``."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected RE or RE,IM, got {text!r}")


def _add_globals(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda k: argparse.SUPPRESS) if suppress else GLOBAL_DEFAULTS.get
    p.add_argument("--tol-rel", type=float, default=d("tol_rel"))
    p.add_argument("--tol-abs", type=float, default=d("tol_abs"))
    p.add_argument("--seed", type=int, default=d("seed"))
    p.add_argument("--samples", type=int, default=d("samples"), help="random samples per identity")
    p.add_argument("--format", choices=("json", "csv", "md"), default=d("format"))
    p.add_argument("--out", metavar="PATH", default=d("out"))
    p.add_argument("--workers", type=int, default=d("workers"))


def _add_function_params(p: argparse.ArgumentParser):
    p.add_argument("--x", type=float, default=0.0, help="eFD/eBE shift; FD/BE use mu = -x")
    p.add_argument("--mu", type=float, default=None, help="FD/BE argument (overrides --x)")
    p.add_argument("--nu", type=parse_complex, default=0j)
    p.add_argument("--z", type=parse_complex, default=0j)
    p.add_argument("--a", type=parse_complex, default=1 + 0j)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fdzeta", description="Zeta-family functions and identity checks.")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate a function")
    p.add_argument("function", choices=sorted(FUNCTIONS))
    p.add_argument("--s", type=parse_complex, required=True)
    p.add_argument("--path", choices=("series", "quadrature"), default=None)
    _add_function_params(p)
    _add_globals(p, suppress=True)

    p = sub.add_parser("check", help="run identity checks")
    p.add_argument("ids", nargs="*")
    p.add_argument("--all", action="store_true")
    _add_globals(p, suppress=True)

    p = sub.add_parser("list", help="list the registered identities")
    _add_globals(p, suppress=True)

    p = sub.add_parser("fourier", help="both sides of a duality transform")
    p.add_argument("function", choices=sorted(set(FUNCTIONS) - {"gamma"}))
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--omega", type=float, default=0.0)
    _add_function_params(p)
    _add_globals(p, suppress=True)
    return parser


def _fmt_complex(v: complex) -> str:
    sign = "-" if v.imag < 0 or (v.imag == 0 and str(v.imag).startswith("-")) else "+"
    return f"{v.real:.16g} {sign} i·{abs(v.imag):.16g}"


def _params(args, s) -> zk.FunctionParams:
    fid = FUNCTIONS[args.function]
    mu = args.mu if args.mu is not None else -args.x
    nu, a = args.nu, args.a
    if fid == "hurwitz_zeta" and args.nu == 0:
        nu = args.a  # accept --a as the Hurwitz shift too
    return zk.FunctionParams(s=s, x=args.x, nu=nu, z=args.z, a=a, mu=mu)


def cmd_eval(args, out) -> int:
    fid = FUNCTIONS[args.function]
    params = _params(args, args.s)
    tol = Tolerance(rel=min(args.tol_rel, zk.FUNCTION_TOL.rel), abs=min(args.tol_abs, zk.FUNCTION_TOL.abs))
    if fid == te.ZETA_STRIP:
        if not 0 < params.s.real < 1:
            raise DomainError("0 < Re(s) < 1", "critical strip")
        fid = "riemann_zeta"
    result = zk.evaluate(fid, params, args.path, tol)
    print(f"value: {_fmt_complex(result.value)}", file=out)
    print(f"abs_err: {result.abs_err:.3e}", file=out)
    print(f"method: {result.method}", file=out)
    if set(result.flags) - {"converged"}:
        print(f"flags: {','.join(sorted(result.flags))}", file=out)
    return EXIT_OK


def cmd_fourier(args, out) -> int:
    fid = FUNCTIONS[args.function]
    params = _params(args, args.sigma)
    closed = te.duality_value(fid, params, omega=args.omega)
    line = te.duality_line_integral(fid, params, args.omega)
    resid = abs(closed.value - line.value)
    tol = Tolerance(rel=args.tol_rel, abs=args.tol_abs)
    print(f"closed_form: {_fmt_complex(closed.value)}", file=out)
    print(f"line_integral: {_fmt_complex(line.value)}  (abs_err {line.abs_err:.3e})", file=out)
    print(f"residual: {resid:.3e}", file=out)
    return EXIT_OK if resid <= tol.target(abs(closed.value)) else EXIT_FAIL


def cmd_list(args, out) -> int:
    for spec in register_catalog():
        mark = "erratum" if spec.erratum is not None else "-"
        print(f"{spec.id} {spec.equation:<10} {mark:<8} {spec.title}; {spec.constraint}", file=out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    ids = known_ids() if args.all else list(args.ids)
    if not ids:
        raise UsageError("check: give identity ids or --all")
    unknown = [i for i in ids if i not in set(known_ids())]
    if unknown:
        raise UsageError(f"check: unknown identity {', '.join(unknown)}")
    if args.samples < 0 or args.workers < 1:
        raise UsageError("check: --samples must be >= 0 and --workers >= 1")
    report = run_checks(ids, SamplePlan(random_count=args.samples, seed=args.seed),
                        Tolerance(rel=args.tol_rel, abs=args.tol_abs), workers=args.workers)
    text = report.dumps(args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        summary = out
    else:
        out.write(text)
        summary = sys.stderr
    for r in report.identities:
        extra = "" if r.erratum is None else (
            f"  printed={'pass' if r.erratum['printed_passes'] else 'fail'}"
            f" derived={'pass' if r.erratum['derived_passes'] else 'fail'}")
        print(f"{r.id} {r.equation:<10} {r.verdict:<18} max_rel={r.max_resid:.2e}{extra}",
              file=summary)
    return EXIT_OK if report.ok else EXIT_FAIL


COMMANDS = {"eval": cmd_eval, "check": cmd_check, "list": cmd_list, "fourier": cmd_fourier}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(list(argv) if argv is not None else None)
        for key, value in GLOBAL_DEFAULTS.items():
            if not hasattr(args, key):
                setattr(args, key, value)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    entry()
