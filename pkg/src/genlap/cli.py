"""Command-line interface: ``genlap eval | sample | fit | simulate | mgf``.

Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical failure.
Numbers are written with 15 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from collections.abc import Sequence

import numpy as np

from . import catalog
from .bml import BmlParams, as_distribution, bml_hazard, bml_mgf
from .errors import ConvergenceError, DegenerateFitError, DomainError, GenlapError, RangeError
from .estimate import fit_weighted
from .simstudy import DEFAULT_N_LIST, rows_to_csv, rows_to_json, run_table
from .streams import check_seed

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_NUMERIC = 0, 1, 2, 3

_PARAM_FLAGS = ("alpha", "beta", "p", "mu", "sigma", "a", "b", "lam", "c", "theta", "k", "phi")


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt(v) -> str:
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    return format(float(v), ".15g")


def _num(v):
    # the value a reader recovers from the 15-digit text
    return v if isinstance(v, (int, np.integer)) else float(_fmt(v))


def _table(columns: Sequence[str], rows: Sequence[Sequence], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(columns, map(_num, r))) for r in rows], indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_fmt(v) for v in r])
    return buf.getvalue()


def parse_grid(spec: str) -> np.ndarray:
    """``lo:hi:step`` (inclusive of hi when it falls on the grid) or a single number."""
    parts = spec.split(":")
    try:
        vals = [float(s) for s in parts]
    except ValueError:
        raise UsageError(f"grid must be lo:hi:step, got {spec!r}") from None
    if len(vals) == 1:
        vals = [vals[0], vals[0], 1.0]
    if len(vals) != 3 or not all(math.isfinite(v) for v in vals):
        raise UsageError(f"grid must be lo:hi:step, got {spec!r}")
    lo, hi, step = vals
    if step <= 0.0:
        raise UsageError("grid step must be positive")
    if hi < lo:
        raise UsageError("grid upper end must not be below the lower end")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    if count > 10_000_000:
        raise UsageError("grid has too many points")
    return lo + step * np.arange(count)


def _parse_n_list(spec: str) -> list[int]:
    try:
        out = [int(s) for s in spec.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"n-list must be comma-separated integers, got {spec!r}") from None
    if not out:
        raise UsageError("n-list is empty")
    return out


def _given(args, names) -> dict:
    return {n: getattr(args, n) for n in names if getattr(args, n, None) is not None}


def _bml_params(args) -> BmlParams:
    missing = [n for n in ("alpha", "beta", "p") if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--dist bml needs {', '.join('--' + m for m in missing)}")
    extra = [n for n in ("a", "b", "lam", "c", "theta", "k", "phi") if getattr(args, n, None) is not None]
    if extra:
        raise UsageError(f"--dist bml does not take {', '.join('--' + m for m in extra)}")
    return BmlParams(args.alpha, args.beta, args.p, args.mu if args.mu is not None else 0.0,
                     args.sigma if args.sigma is not None else 1.0)


def _catalog_entry(args) -> catalog.CatalogEntry:
    if args.dist not in catalog.FAMILY_IDS:
        raise UsageError(f"unknown distribution {args.dist!r}; choose bml or one of {', '.join(catalog.FAMILY_IDS)}")
    if args.p is not None:
        raise UsageError("--p applies only to --dist bml")
    return catalog.make_entry(args.dist, **_given(args, _PARAM_FLAGS))


def _add_params(p: argparse.ArgumentParser):
    g = p.add_argument_group("distribution parameters")
    for name in _PARAM_FLAGS:
        g.add_argument(f"--{name}", type=float, default=None)


def _write(text: str, path: str | None):
    if path in (None, "-"):
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


def _hazard(pdf: np.ndarray, sf: np.ndarray, x: np.ndarray) -> np.ndarray:
    if np.any(sf <= 0.0):
        raise RangeError(f"survival function is 0 at x={x[sf <= 0.0][0]}; hazard undefined")
    return pdf / sf


def cmd_eval(args) -> str:
    x = parse_grid(args.grid)
    if args.dist == "bml":
        d = as_distribution(_bml_params(args))
        pdf, cdf, sf = (np.atleast_1d(d.pdf(x)), np.atleast_1d(d.cdf(x)), np.atleast_1d(d.survival(x)))
        haz = np.atleast_1d(bml_hazard(d.params, x))
    else:
        e = _catalog_entry(args)
        pdf = np.atleast_1d(catalog.catalog_pdf(e, x))
        cdf = np.atleast_1d(catalog.catalog_cdf(e, x))
        sf = np.atleast_1d(catalog.catalog_survival(e, x))
        haz = _hazard(pdf, sf, x)
    rows = list(zip(x, pdf, cdf, sf, haz))
    return _table(("x", "pdf", "cdf", "survival", "hazard"), rows, args.format)


def cmd_sample(args) -> str:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    seed = check_seed(args.seed)
    if args.dist == "bml":
        xs = as_distribution(_bml_params(args)).sample(args.n, seed)
    else:
        xs = catalog.composed(_catalog_entry(args)).sample(args.n, seed)
    if args.format == "json":
        return json.dumps([_num(v) for v in xs]) + "\n"
    return "".join(_fmt(v) + "\n" for v in xs)


def read_data(path: str) -> np.ndarray:
    """One real per line; blank lines and ``#`` comments are skipped."""
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
    vals = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.split("#", 1)[0].strip()
        if not s:
            continue
        try:
            v = float(s)
        except ValueError:
            raise DataError(f"{path}:{lineno}: not a number: {s!r}") from None
        if not math.isfinite(v):
            raise DataError(f"{path}:{lineno}: value must be finite")
        vals.append(v)
    if not vals:
        raise DataError(f"{path}: no data")
    return np.array(vals)


def cmd_fit(args) -> str:
    x = read_data(args.input)
    mu = 0.0 if args.mu is None else args.mu
    sigma = 1.0 if args.sigma is None else args.sigma
    if not (sigma > 0.0 and math.isfinite(sigma)) or not math.isfinite(mu):
        raise UsageError("--sigma must be positive and --mu finite")
    res = fit_weighted((x - mu) / sigma, args.p)
    rec = {"alpha_hat": res.alpha_hat, "beta_hat": res.beta_hat, "n": res.n, "p": res.p,
           "log_likelihood": res.log_likelihood_at_estimate}
    if args.format == "csv":
        return _table(tuple(rec), [tuple(rec.values())], "csv")
    return json.dumps({k: _num(v) for k, v in rec.items()}, indent=2) + "\n"


def cmd_simulate(args) -> str:
    rows = run_table(_parse_n_list(args.n_list), args.k, args.alpha, args.beta, args.p, args.seed,
                     workers=args.workers)
    return rows_to_json(rows) if args.format == "json" else rows_to_csv(rows)


def cmd_mgf(args) -> str:
    params = _bml_params(args)
    try:
        ts = [float(s) for s in args.t.split(",")]
    except ValueError:
        raise UsageError(f"--t must be comma-separated numbers, got {args.t!r}") from None
    return _table(("t", "mgf"), [(t, bml_mgf(params, t)) for t in ts], args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="genlap", description="Generated distributions and the beta-mixture Laplace law.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", "-o", default=None, help="output file (default: stdout)")

    p = sub.add_parser("eval", help="pdf, cdf, survival and hazard on a grid")
    p.add_argument("--dist", required=True, help="bml or a catalog family id")
    p.add_argument("--grid", required=True, help="lo:hi:step")
    _add_params(p)
    fmt(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sample", help="draw a seeded sample")
    p.add_argument("--dist", default="bml")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    _add_params(p)
    fmt(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("fit", help="weighted closed-form fit of alpha and beta (p known)")
    p.add_argument("--input", "-i", required=True, help="file with one value per line, or - for stdin")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--mu", type=float, default=None, help="standardize data by this location")
    p.add_argument("--sigma", type=float, default=None, help="standardize data by this scale")
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("simulate", help="Monte-Carlo recovery table")
    p.add_argument("--n-list", default=",".join(map(str, DEFAULT_N_LIST)))
    p.add_argument("--k", type=int, default=2000)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--workers", type=int, default=1, help="worker processes (capped by GENLAP_THREADS)")
    fmt(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("mgf", help="moment generating function of a BML law")
    p.add_argument("--t", required=True, help="comma-separated arguments")
    _add_params(p)
    fmt(p)
    p.set_defaults(func=cmd_mgf, dist="bml")
    return parser


_VALUE_FLAGS = {"--grid", "--t", "--n-list", *(f"--{n}" for n in _PARAM_FLAGS)}


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    # argparse reads "-5:5:0.1" as an option; pass such values as --flag=value
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and nxt != "-":
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_glue_negative_values(argv))
        _write(args.func(args), args.output)
        return EXIT_OK
    except UsageError as exc:
        print(f"genlap: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, DegenerateFitError) as exc:
        print(f"genlap: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (RangeError, ConvergenceError) as exc:
        print(f"genlap: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except DomainError as exc:
        print(f"genlap: invalid argument: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GenlapError as exc:
        print(f"genlap: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
