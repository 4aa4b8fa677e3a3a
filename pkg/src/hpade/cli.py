"""Command-line front end.

Examples::

    hpade series.json --steps 7 --oracle-check
    hpade --series "1;1,1,1,1" --steps 1 --emit text
    hpade --mode pade --series "1,1,1/2,1/6,1/24" --steps 3
    hpade --mode cfrac --series "1,0,0;1,1,0"
    HPADE_SEED=3 hpade --mode bench --bench-m 1,2,3 --bench-n 4,8,12

Exit status: 0 success, 2 degenerate input, 3 not enough coefficients,
4 malformed input, 5 residual shortfall.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from pathlib import Path

from .errors import (
    DegenerateError,
    EmptyInputError,
    HPadeError,
    InputError,
    TruncationError,
)
from .field import get_field
from .oracle import hp_nullspace, proportional
from .poly import Polynomial, PolyVector
from .samples import random_general_position
from .series import SeriesTuple, apply_start_permutation, from_coefficients
from .verify import order_json, verify
from .viskovatov import hermite_pade, iter_partial_quotients, pade_approximant

MODES = ("hp", "pade", "cfrac", "bench")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2, which is reserved here for degenerate input
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(4, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="hpade",
        description="Hermite-Pade polynomials of type I via the Viskovatov recurrence.",
    )
    p.add_argument("input", nargs="?", help='JSON file {"m": int, "series": [[...], ...]}')
    p.add_argument("--series", help="inline rows: coefficients split by ',', rows by ';'")
    p.add_argument("--steps", type=int, help="recurrence level n (default: largest possible)")
    p.add_argument("--backend", choices=("rational", "float"), default="rational")
    p.add_argument("--tol", type=float, default=1e-10, help="zero tolerance for --backend float")
    p.add_argument("--start", type=int, default=0, help="start permutation index s")
    p.add_argument("--mode", choices=MODES, default="hp")
    p.add_argument("--oracle-check", action="store_true",
                   help="compare against the linear-system solution")
    p.add_argument("--verify-full", action="store_true",
                   help="also check row degrees and the determinant of A[n]")
    p.add_argument("--emit", choices=("json", "text"), default="json")
    p.add_argument("--output", "-o", help="write the document here instead of stdout")
    p.add_argument("--bench-m", default="1,2,3", help="bench grid: values of m")
    p.add_argument("--bench-n", default="3,6,9,12", help="bench grid: values of n")
    p.add_argument("--bench-reps", type=int, default=3)
    return p


def _split_rows(text: str) -> list[list[str]]:
    rows = [r.strip() for r in text.split(";")]
    return [[c.strip() for c in r.split(",") if c.strip()] for r in rows]


def load_rows(args) -> list[list]:
    if args.input and args.series:
        raise InputError("give either an input file or --series, not both")
    if args.series:
        return _split_rows(args.series)
    if not args.input:
        raise EmptyInputError("no input: pass a JSON file or --series")
    try:
        doc = json.loads(Path(args.input).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {args.input}: {exc}") from None
    if not isinstance(doc, dict) or "series" not in doc:
        raise InputError('input must be an object with a "series" array')
    rows = doc["series"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError('"series" must be an array of arrays')
    if "m" in doc and doc["m"] != len(rows) - 1:
        raise InputError(f'"m" is {doc["m"]} but {len(rows)} series were given')
    return rows


def _poly_json(p: Polynomial, fld) -> list[str]:
    return [fld.format(c) for c in p.coeffs]


def polys_from_json(polys: list[list[str]], backend: str = "rational",
                    tol: float = 1e-10) -> PolyVector:
    fld = get_field(backend, tol)
    return PolyVector(tuple(Polynomial(fld.parse(c) for c in row) for row in polys))


def _default_steps(t: SeriesTuple) -> int:
    return t.valid_order - 2


def run_hp(args, rows) -> dict:
    t = from_coefficients(rows, args.backend, args.tol)
    if args.start:
        t = apply_start_permutation(t, args.start)
    n = _default_steps(t) if args.steps is None else args.steps
    res = hermite_pade(t, n)
    fld = t.field
    report = verify(t, res, lemma1=args.verify_full, det=args.verify_full)
    doc = {
        "mode": "hp",
        "backend": fld.tag,
        "m": t.m,
        "steps": n,
        "start": args.start,
        "multiindex": list(res.multiindex.degrees),
        "polys": [_poly_json(p, fld) for p in res.polys],
        "predicted_order": res.predicted_order,
        "verified_order": order_json(res.verified_order),
        "report": report.to_dict(),
    }
    if args.oracle_check:
        ref, dim = hp_nullspace(t, res.multiindex)
        rtol = None if fld.name == "rational" else 1e-6
        doc["oracle"] = {
            "proportional": proportional(res.polys, ref, rtol),
            "kernel_dim": dim,
            "polys": [_poly_json(p, fld) for p in ref],
        }
    return doc


def run_pade(args, rows) -> dict:
    if len(rows) != 1:
        raise InputError("pade mode takes exactly one series")
    fld = get_field(args.backend, args.tol)
    n = len(rows[0]) - 2 if args.steps is None else args.steps
    f = [fld.parse(c) if isinstance(c, str) else fld.coerce(c) for c in rows[0]]
    P, Q = pade_approximant(f, n, args.backend, args.tol)
    return {
        "mode": "pade",
        "backend": fld.tag,
        "steps": n,
        "P": _poly_json(P, fld),
        "Q": _poly_json(Q, fld),
        "degrees": [len(P) - 1, len(Q) - 1],
    }


def run_cfrac(args, rows) -> dict:
    t = from_coefficients(rows, args.backend, args.tol)
    if t.m != 1:
        raise InputError("cfrac mode takes exactly two series f_0; f_1")
    n = _default_steps(t) if args.steps is None else args.steps
    if t.valid_order < n + 2:
        raise TruncationError(
            f"{n + 1} partial quotients need {n + 2} coefficients, have {t.valid_order}",
            required=n + 2,
        )
    quotients = []
    terminated = None
    try:
        for v in iter_partial_quotients(t, n):
            quotients.append(v)
    except DegenerateError as exc:
        terminated = {"level": exc.level, "slot": exc.slot, "reason": exc.code}
    return {
        "mode": "cfrac",
        "backend": t.field.tag,
        "steps": n,
        "quotients": [t.field.format(v) for v in quotients],
        "terminated": terminated,
    }


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _best_time(fn, reps: int) -> float:
    best = float("inf")
    for _ in range(max(reps, 1)):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_bench(args, rows=None) -> dict:
    seed = int(os.environ.get("HPADE_SEED", "0"))
    rng = random.Random(seed)
    table = []
    for m in _int_list(args.bench_m):
        for n in _int_list(args.bench_n):
            if n < m - 1:
                continue
            t, _ = random_general_position(m, n + 2, rng, degrees=False)
            res = hermite_pade(t, n)
            ref, dim = hp_nullspace(t, res.multiindex)
            table.append({
                "m": m,
                "n": n,
                "recurrence_s": _best_time(lambda: hermite_pade(t, n, check=False),
                                           args.bench_reps),
                "oracle_s": _best_time(lambda: hp_nullspace(t, res.multiindex), args.bench_reps),
                "agree": proportional(res.polys, ref) and dim == 1,
            })
    return {"mode": "bench", "backend": "rational", "seed": seed, "rows": table}


def _pretty(coeffs: list[str]) -> str:
    out = ""
    for k, c in enumerate(coeffs):
        if c in ("0", "0.0", "-0.0"):
            continue
        neg = c.startswith("-")
        mag = c[1:] if neg else c
        mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        if mono and mag in ("1", "1.0"):
            term = mono
        elif mono:
            term = f"({mag})*{mono}" if "/" in mag or "e" in mag else f"{mag}*{mono}"
        else:
            term = mag
        if not out:
            out = f"-{term}" if neg else term
        else:
            out += f" - {term}" if neg else f" + {term}"
    return out or "0"


def render_text(doc: dict) -> str:
    lines = [f"mode: {doc['mode']}"]
    if "error" in doc:
        err = doc["error"]
        lines.append(f"error: {err['code']}: {err['message']}")
        return "\n".join(lines) + "\n"
    if "backend" in doc:
        lines.append(f"backend: {doc['backend']}")
    mode = doc["mode"]
    if mode == "hp":
        lines.append("multiindex: " + " ".join(str(k) for k in doc["multiindex"]))
        for j, coeffs in enumerate(doc["polys"]):
            lines.append(f"Q_{j} = {_pretty(coeffs)}")
        lines.append(f"predicted_order: {doc['predicted_order']}")
        lines.append(f"verified_order: {doc['verified_order']}")
        rep = doc["report"]
        lines.append(f"report: {'ok' if rep['ok'] else 'FAILED'}")
        lines.extend(f"  note: {note}" for note in rep["notes"])
        if "oracle" in doc:
            o = doc["oracle"]
            lines.append(f"oracle: proportional={o['proportional']} kernel_dim={o['kernel_dim']}")
    elif mode == "pade":
        lines.append(f"P = {_pretty(doc['P'])}")
        lines.append(f"Q = {_pretty(doc['Q'])}")
    elif mode == "cfrac":
        lines.append("quotients: " + " ".join(doc["quotients"]))
        term = doc["terminated"]
        if term:
            lines.append(f"terminated at level {term['level']} (slot {term['slot']} vanished)")
    elif mode == "bench":
        lines.append(f"seed: {doc['seed']}")
        lines.append(f"{'m':>3} {'n':>4} {'recurrence_s':>14} {'oracle_s':>12} {'agree':>6}")
        for r in doc["rows"]:
            lines.append(f"{r['m']:>3} {r['n']:>4} {r['recurrence_s']:>14.6f} "
                         f"{r['oracle_s']:>12.6f} {str(r['agree']):>6}")
    return "\n".join(lines) + "\n"


def _emit(doc: dict, args) -> None:
    text = render_text(doc) if args.emit == "text" else json.dumps(doc, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    runners = {"hp": run_hp, "pade": run_pade, "cfrac": run_cfrac, "bench": run_bench}
    try:
        rows = None if args.mode == "bench" else load_rows(args)
        doc = runners[args.mode](args, rows)
    except HPadeError as exc:
        err = {"code": exc.code, "message": str(exc)}
        if isinstance(exc, DegenerateError):
            err.update(level=exc.level, slot=exc.slot, index=exc.index)
        if isinstance(exc, TruncationError) and exc.required is not None:
            err["required_length"] = exc.required
        print(f"hpade: {exc.code}: {exc}", file=sys.stderr)
        _emit({"mode": args.mode, "error": err}, args)
        return exc.exit_code
    _emit(doc, args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
