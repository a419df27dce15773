"""Command-line front door: ``agpoly compute | verify | list-suites``.

stdout carries results only (a rendered polynomial, JSON, or the one-line
verdict of a sweep); progress and diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .identities import (
    DomainError,
    GordonParams,
    boson_polynomial,
    dual_lhs,
    dual_rhs,
    e7_sides,
    fermion_polynomial,
    fq_rhs,
)
from .partitions import gen_func_bruteforce
from .qcomb import gaussian_binomial, q_multinomial, q_multinomial_tilde
from .qpoly import GradedSeries
from .suites import dumps_report, expand, list_suites, resolve, run_suite

EXIT_PASS, EXIT_WITNESS, EXIT_USAGE = 0, 1, 2

OBJECTS = ("binomial", "multinomial", "tilde", "boson", "fermion", "oracle", "fq", "e7", "dual")

# which flags each object needs
_NEEDS = {
    "binomial": ("L", "a"),
    "multinomial": ("L", "a", "p", "k"),
    "tilde": ("L", "a", "p", "k"),
    "boson": ("k", "i", "iprime", "L"),
    "fermion": ("k", "i", "iprime", "L"),
    "oracle": ("k", "i", "iprime", "L"),
    "fq": ("k", "i", "L"),
    "e7": ("k", "i", "L"),
    "dual": ("k", "i", "iprime"),
}

RANGE_FLAGS = ("k", "i", "iprime", "L", "ell", "N", "a")


class UsageError(Exception):
    pass


def render_graded(series: GradedSeries, var: str = "q") -> str:
    D = series.denominator
    parts = []
    for g, c in sorted(series.terms().items()):
        e = Fraction(g, D)
        if e == 0:
            mono = ""
        elif e == 1:
            mono = var
        else:
            mono = f"{var}^{e}" if e.denominator == 1 and e > 0 else f"{var}^({e})"
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        sign = "-" if c < 0 else "+"
        parts.append(body if not parts and c > 0 else f"{sign} {body}" if parts else f"-{body}")
    cut = Fraction(series.order + 1, D)
    parts.append(f"+ O({var}^({cut}))" if parts else f"O({var}^({cut}))")
    return " ".join(parts)


def _gordon(args) -> GordonParams:
    return GordonParams(args.k, args.i, args.iprime, args.L, args.ell)


def compute(args) -> tuple[str, Any]:
    """Return (human text, JSON payload) for ``compute OBJECT``."""
    missing = [f"--{n}" for n in _NEEDS[args.object] if getattr(args, n) is None]
    if missing:
        raise UsageError(f"compute {args.object} needs {' '.join(missing)}")
    obj = args.object
    if obj == "binomial":
        poly = gaussian_binomial(args.L, args.a)
    elif obj == "multinomial":
        poly = q_multinomial(args.L, args.a, args.p, args.k)
    elif obj == "tilde":
        poly = q_multinomial_tilde(args.L, args.a, args.p, args.k)
    elif obj == "boson":
        # the bosonic sum is a finite expression at every L, so no domain gate
        poly = boson_polynomial(_gordon(args), check_domain=False)
    elif obj == "fermion":
        poly = fermion_polynomial(_gordon(args))
    elif obj == "oracle":
        poly = gen_func_bruteforce(args.k, args.i, args.iprime, args.L)
    elif obj == "fq":
        if args.L < args.k - args.i + 1:
            raise DomainError("the binomial form needs L >= k - i + 1")
        poly = fq_rhs(args.k, args.i, args.L)
    elif obj == "e7":
        lhs, rhs = e7_sides(args.k, args.i, args.L)
        holds = lhs == rhs
        text = f"{'true' if holds else 'false'}\nlhs: {lhs}\nrhs: {rhs}"
        return text, {"holds": holds, "lhs": lhs.to_json(), "rhs": rhs.to_json()}
    else:  # dual
        ell = args.k if args.ell is None else args.ell
        N = 20 if args.N is None else args.N
        kw: dict[str, Any] = {}
        if args.form == "corrected":
            kw = {"exponent": "limit", "prefactor": Fraction(args.iprime - args.i + args.k - ell, 4)}
        lhs = dual_lhs(args.k, ell, args.i, args.iprime, N, **kw)
        rhs = dual_rhs(args.k, ell, args.i, args.iprime, N)
        text = f"lhs: {render_graded(lhs)}\nrhs: {render_graded(rhs)}\nequal: {'true' if lhs == rhs else 'false'}"
        return text, {"lhs": lhs.to_json(), "rhs": rhs.to_json(), "equal": lhs == rhs}
    return poly.to_str(), poly.to_json()


def _load_config(path: str) -> dict[str, Any]:
    p = Path(path)
    raw = p.read_bytes()
    if p.suffix.lower() == ".toml":
        try:
            import tomllib
        except ModuleNotFoundError:  # Python 3.10
            import tomli as tomllib
        return tomllib.loads(raw.decode())
    return json.loads(raw)


def _sweep_config(args) -> tuple[str, dict[str, Any], str | None, int]:
    cfg: dict[str, Any] = _load_config(args.config) if args.config else {}
    suite = args.suite or cfg.pop("suite", None)
    cfg.pop("suite", None)
    if not suite:
        raise UsageError("verify needs a suite name (argument or 'suite' in the config)")
    out = args.out or cfg.pop("out", None)
    cfg.pop("out", None)
    workers = args.workers or cfg.pop("workers", None) or os.cpu_count() or 1
    cfg.pop("workers", None)
    grid = dict(cfg.pop("grid", {}))
    grid.update(cfg)
    for name in RANGE_FLAGS:
        value = getattr(args, f"range_{name}")
        if value is not None:
            grid[name] = value
    for name in ("form", "a_max"):
        value = getattr(args, name, None)
        if value is not None:
            grid[name] = value
    return suite, grid, out, int(workers)


def _progress(done: int, total: int) -> None:
    step = max(1, total // 20)
    if done == total or done % step == 0:
        print(f"\r  {done}/{total} points", end="\n" if done == total else "", file=sys.stderr, flush=True)


def verify(args) -> int:
    suite, grid, out, workers = _sweep_config(args)
    try:
        spec = resolve(suite)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    try:
        expand(spec, grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"running {spec.name} with {workers} worker(s)", file=sys.stderr)
    report = run_suite(spec.name, grid, workers=workers, timing=args.timing,
                       progress=None if args.quiet else _progress)
    text = dumps_report(report)
    if out:
        Path(out).write_text(text)
        print(f"report written to {out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    verdict = "PASS" if report.passed else f"FAIL ({len(report.witnesses)} witness(es))"
    print(f"{spec.name}: {verdict}, {report.points} checks", file=sys.stderr)
    for note in report.notes[:3]:
        print(f"  report-only mismatch at {note['params']}", file=sys.stderr)
    return EXIT_PASS if report.passed else EXIT_WITNESS


def list_cmd(args) -> int:
    for spec in list_suites(include_hidden=args.all):
        print(f"{spec.name:<26}{spec.summary}")
    return EXIT_PASS


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 already; keep the message on stderr
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="agpoly", description="Exact q-series computations and identity sweeps.")
    parser.add_argument("--version", action="version", version=f"agpoly {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="compute one polynomial or series")
    c.add_argument("object", choices=OBJECTS)
    for name in ("L", "a", "p", "k", "i", "iprime", "ell", "N"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--form", choices=("printed", "corrected"), default="printed",
                   help="dual only: exponent and prefactor convention")
    c.add_argument("--json", action="store_true", help="print JSON instead of text")
    c.set_defaults(func=lambda a: _run_compute(a))

    v = sub.add_parser("verify", help="run a verification suite over a parameter grid")
    v.add_argument("suite", nargs="?")
    for name in RANGE_FLAGS:
        v.add_argument(f"--{name}", dest=f"range_{name}", metavar="RANGE",
                       help="int, 'lo..hi', comma list, or 'all'")
    v.add_argument("--form", choices=("printed", "corrected"))
    v.add_argument("--a-max", dest="a_max", choices=("kL", "L"))
    v.add_argument("--config", help="JSON or TOML sweep file")
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--workers", type=int, help="worker processes (default: all cores)")
    v.add_argument("--timing", action="store_true", help="record elapsed_ms (breaks byte-identical reports)")
    v.add_argument("--quiet", action="store_true", help="no progress on stderr")
    v.set_defaults(func=verify)

    ls = sub.add_parser("list-suites", help="show the available suites")
    ls.add_argument("--all", action="store_true", help="include the harness self-test")
    ls.set_defaults(func=list_cmd)
    return parser


def _run_compute(args) -> int:
    text, payload = compute(args)
    print(json.dumps(payload) if args.json else text)
    return EXIT_PASS


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"agpoly: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
