"""Command-line interface: tables, verification sweeps and the spin dimension check.

Exit codes: 0 when every comparison matches, 1 on a mismatch, 2 on invalid
parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from .errors import ParameterError
from .solver import MultiplicityReport, cross_check
from .sp_models import SpXPrimeSpec, SpXSpec, all_x_specs, all_xprime_specs
from .spinmod import spin_dimension_check
from .u_models import UpqSpec, all_u_specs
from .weights import SpFamily, UFamily

FIELDS = ["family", "params", "xLambda", "tau", "special", "stats", "brute", "closed", "match"]


# ---------------------------------------------------------------- model selection

def _filtered(models, args, names):
    given = {n: getattr(args, n) for n in names if getattr(args, n) is not None}
    return [m for m in models if all(getattr(m, n) == v for n, v in given.items())]


def _sp_models(args) -> list[SpXSpec]:
    if args.n is not None and None not in (args.p, args.q, args.eps, args.eta):
        spec = SpXSpec.make(args.n, args.p, args.q, args.eps, args.eta)
        if args.k is not None and args.k != spec.k:
            raise ParameterError(f"k = {args.k} but p + q = {spec.p + spec.q} requires k = {spec.k}")
        return [spec]
    ns = [args.n] if args.n is not None else list(range(1, _need(args.max_n, "--n or --max-n") + 1))
    return _filtered([m for n in ns for m in all_x_specs(n)], args, ("k", "p", "q", "eps", "eta"))


def _sp_prime_models(args) -> list[SpXPrimeSpec]:
    if None not in (args.p, args.q, args.eps, args.eta):
        spec = SpXPrimeSpec.make(args.p, args.q, args.eps, args.eta)
        if args.n is not None and args.n != spec.n:
            raise ParameterError(f"n = {args.n} but p + q = {spec.p + spec.q} requires n = {spec.n}")
        return [spec]
    if args.n is not None:
        if args.n < 1 or args.n % 2 == 0:
            raise ParameterError(f"n = {args.n} must be odd and positive")
        ns = [args.n]
    else:
        ns = list(range(1, _need(args.max_n, "--n or --max-n") + 1, 2))
    return _filtered([m for n in ns for m in all_xprime_specs(n)], args, ("k", "p", "q", "eps", "eta"))


def _u_models(args) -> list[UpqSpec]:
    names = ("p1", "q1", "p2", "q2", "xi")
    if all(getattr(args, n) is not None for n in names):
        return [UpqSpec(*(getattr(args, n) for n in names))]
    return _filtered(all_u_specs(_need(args.max_pq, "--max-pq")), args, names)


def _need(value, flag):
    if value is None:
        raise ParameterError(f"{flag} is required")
    if value < 1:
        raise ParameterError(f"{flag} must be positive, got {value}")
    return value


def select_models(family: str, args) -> list:
    if family == "sp":
        return _sp_models(args)
    if family == "sp-prime":
        return _sp_prime_models(args)
    return _u_models(args)


# ---------------------------------------------------------------- records

def _params(model) -> dict:
    if isinstance(model, UpqSpec):
        return {"p1": model.p1, "q1": model.q1, "p2": model.p2, "q2": model.q2, "xi": model.xi}
    return {"n": model.n, "k": model.k, "p": model.p, "q": model.q, "eps": model.eps, "eta": model.eta}


def _family_name(model) -> str:
    if isinstance(model, SpXSpec):
        return "sp"
    if isinstance(model, SpXPrimeSpec):
        return "sp-prime"
    return "u"


def report_records(report: MultiplicityReport) -> list[dict]:
    model = report.model
    out = []
    for e in report.entries:
        c = e.candidate
        if isinstance(model, UpqSpec):
            stats = {"r": c.r, "s": c.s, "t": c.t, "u": c.u}
        else:
            stats = {"u": c.u, "v": c.v}
        out.append({
            "family": _family_name(model),
            "params": _params(model),
            "xLambda": c.xLambda.strings(),
            "tau": c.tau.strings(),
            "special": bool(c.special),
            "stats": stats,
            "brute": e.brute,
            "closed": e.closed,
            "match": e.match,
        })
    return out


def _check_one(model) -> list[dict]:
    return report_records(cross_check(model))


def run_models(models: Sequence, workers: int) -> list[list[dict]]:
    """Cross-check every model; results come back in input order."""
    if workers <= 1 or len(models) <= 1:
        return [_check_one(m) for m in models]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_check_one, models, chunksize=max(1, len(models) // (4 * workers))))


# ---------------------------------------------------------------- rendering

def _flat(value) -> str:
    if isinstance(value, list):
        return ";".join(value)
    if isinstance(value, dict):
        return ";".join(f"{k}={v}" for k, v in value.items())
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render(records: Iterable[dict], fmt: str) -> str:
    records = list(records)
    if fmt == "json":
        return "".join(json.dumps(r) + "\n" for r in records)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        writer.writerow(FIELDS)
        for r in records:
            writer.writerow([r[f] if type(r[f]) is int else _flat(r[f]) for f in FIELDS])
        return buf.getvalue()
    rows = [[_flat(r[f]) for f in FIELDS] for r in records]
    widths = [max([len(f)] + [len(row[i]) for row in rows]) for i, f in enumerate(FIELDS)]
    lines = ["  ".join(f.ljust(w) for f, w in zip(FIELDS, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- commands

def cmd_table(args, family: str) -> tuple[str, int]:
    models = select_models(family, args)
    if not models:
        raise ParameterError("no admissible model matches the given parameters")
    records = [r for chunk in run_models(models, args.workers) for r in chunk]
    return render(records, args.format), 0 if all(r["match"] for r in records) else 1


def cmd_verify(args) -> tuple[str, int]:
    family = args.family or "sp"
    models = select_models(family, args)
    results = run_models(models, args.workers)
    records = [r for chunk in results for r in chunk]
    bad = [r for r in records if not r["match"]]
    summary = {
        "family": family,
        "models": len(models),
        "candidates": len(records),
        "matches": len(records) - len(bad),
        "mismatches": len(bad),
    }
    if args.format == "json":
        text = json.dumps(summary) + "\n"
        if bad:
            text += json.dumps({"firstMismatch": bad[0]}) + "\n"
    else:
        text = " ".join(f"{k}={v}" for k, v in summary.items()) + "\n"
        if bad:
            text += "first mismatch: " + json.dumps(bad[0]) + "\n"
    return text, 1 if bad else 0


def cmd_spin(args) -> tuple[str, int]:
    family = args.family or "sp"
    if family == "u":
        top = _need(args.max_pq, "--max-pq")
        fams = [UFamily(p, t - p) for t in range(1, top + 1) for p in range(t, -1, -1)]
    elif family == "sp":
        fams = [SpFamily(n) for n in range(1, _need(args.max_n, "--max-n") + 1)]
    else:
        raise ParameterError("spin-dim supports --family sp or u")
    lines, ok_all, rows = [], True, []
    for fam in fams:
        total, expected, ok = spin_dimension_check(fam)
        ok_all &= ok
        label = f"Sp({2 * fam.n})" if isinstance(fam, SpFamily) else f"U({fam.p},{fam.q})"
        rows.append({"group": label, "total": total, "expected": expected, "ok": ok})
        lines.append(f"{label}: total={total} expected={expected} {'ok' if ok else 'FAIL'}")
    if args.format == "json":
        text = "".join(json.dumps(r) + "\n" for r in rows)
    else:
        text = "\n".join(lines) + "\n"
    return text, 0 if ok_all else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirac-unipotent",
        description="Dirac cohomology multiplicities of unipotent modules: brute force vs closed forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    for name in ("n", "k", "p", "q", "eps", "eta", "p1", "q1", "p2", "q2", "xi"):
        common.add_argument(f"--{name}", type=int)
    common.add_argument("--max-n", type=int, dest="max_n")
    common.add_argument("--max-pq", type=int, dest="max_pq")
    common.add_argument("--family", choices=["sp", "sp-prime", "u"])
    common.add_argument("--format", choices=["json", "csv", "table"], default="json")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--out", metavar="FILE")
    for name, help_ in [
        ("sp-table", "records for X(p,q,eps,eta) of Sp(2n,R)"),
        ("sp-prime-table", "records for X'(p,q,eps,eta), n odd"),
        ("u-table", "records for X(p1,q1,xi) of U(p,q)"),
        ("verify", "cross-check a whole family and summarize"),
        ("spin-dim", "check the dimension of the spin module"),
    ]:
        sub.add_parser(name, parents=[common], help=help_)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.workers < 1:
            raise ParameterError(f"--workers must be positive, got {args.workers}")
        if args.command == "sp-table":
            text, code = cmd_table(args, "sp")
        elif args.command == "sp-prime-table":
            text, code = cmd_table(args, "sp-prime")
        elif args.command == "u-table":
            text, code = cmd_table(args, "u")
        elif args.command == "verify":
            text, code = cmd_verify(args)
        else:
            text, code = cmd_spin(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
