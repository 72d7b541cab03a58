"""Command-line entry point.

Exit codes: 0 on success, 1 for usage problems, 2 for invalid mathematical
input (loops, dimension mismatches, search-space caps), 3 when an internal
consistency check fails; in particular `--method both` exits 3 if the two
routes disagree, because that can only mean a bug.

Output is deterministic byte-for-byte for a given invocation.  JSON encodes
polynomial coefficients as decimal strings so arbitrarily large integers
survive any consumer; scalar counts stay plain JSON numbers.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import selftest as selftest_mod
from .errors import ConsistencyError, InputError
from .fforacle import DEFAULT_CAP, count_absolutely_indecomposable
from .kacmoody import (
    character_level_one,
    is_real_root,
    peterson,
    weight_mult_framed,
    weight_mult_freudenthal,
)
from .kacpoly import kac_polynomial, kac_series
from .qseries import Box
from .quiver import Quiver, builtin_quiver
from .varieties import (
    euler_characteristic,
    poincare_via_kac,
    profile_via_hausel,
    weight_mult_via_betti,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; 2 is reserved for domain errors here
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vector {text!r}") from None


def _load_quiver(source: str) -> Quiver:
    if os.path.exists(source):
        try:
            with open(source) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise _UsageError(f"cannot read quiver file {source!r}: {exc}") from exc
        return Quiver.from_dict(data)
    q = builtin_quiver(source)
    if q is None:
        raise _UsageError(f"{source!r} is neither a file nor a built-in quiver name")
    return q


def _join(values) -> str:
    seq = tuple(values)
    return " ".join(str(v) for v in seq) if seq else "0"


def _poly_json(coeffs) -> dict:
    return {"num": [str(c) for c in coeffs] or ["0"], "den": ["1"]}


# ------------------------------------------------------------- subcommands

def _cmd_kac(args):
    q = _load_quiver(args.quiver)
    if args.all_upto is not None:
        bound = q.check_vector(args.all_upto, nonneg=True)
        box = Box(bound)
        series = kac_series(q, box, jobs=args.jobs)
        entries, rows = [], []
        for e in box.exponents():
            coeffs = series.coefficient(e).as_int_polynomial()
            entries.append({"alpha": list(e), "polynomial": _poly_json(coeffs)})
            rows.append([_join(e), _join(coeffs)])
        return {"bound": list(bound), "entries": entries}, rows
    if args.dim is None:
        raise _UsageError("kac needs either --dim or --all-upto")
    kp = kac_polynomial(q, args.dim)
    payload = {"alpha": list(kp.alpha), "polynomial": _poly_json(kp.coeffs)}
    return payload, [[_join(kp.alpha), _join(kp.coeffs)]]


def _cmd_roots(args):
    q = _load_quiver(args.quiver)
    bound = q.check_vector(args.bound, nonneg=True)
    table = peterson(q, bound)
    roots, rows = [], []
    for beta, m in table.positive_roots():
        real = is_real_root(q, beta, table)
        roots.append({"beta": list(beta), "multiplicity": m, "real": real})
        rows.append([_join(beta), str(m), "real" if real else "imaginary"])
    return {"bound": list(bound), "roots": roots}, rows


def _cmd_weightmult(args):
    q = _load_quiver(args.quiver)
    hw = q.check_vector(args.hw, nonneg=True)
    drop = q.check_vector(args.drop, nonneg=True)
    methods = {}
    if args.method in ("framed", "both"):
        methods["framed"] = weight_mult_framed(q, hw, drop)
    if args.method in ("freudenthal", "both"):
        methods["freudenthal"] = weight_mult_freudenthal(q, hw, drop).multiplicity(drop)
    if len(set(methods.values())) > 1:
        raise ConsistencyError(f"weight multiplicity methods disagree: {methods}")
    value = next(iter(methods.values()))
    payload = {
        "hw": list(hw),
        "drop": list(drop),
        "multiplicity": value,
        "method": args.method,
    }
    if args.method == "both":
        payload["methods_agree"] = True
    return payload, [[_join(drop), str(value)]]


def _cmd_character(args):
    q = _load_quiver(args.quiver)
    hw = q.check_vector(args.hw, nonneg=True)
    bound = q.check_vector(args.bound, nonneg=True)
    table = character_level_one(q, hw, bound)
    entries = [{"drop": list(b), "multiplicity": m} for b, m in table.items()]
    rows = [[_join(b), str(m)] for b, m in table.items()]
    return {"hw": list(hw), "bound": list(bound), "entries": entries}, rows


def _cmd_betti(args):
    q = _load_quiver(args.quiver)
    alpha = q.check_vector(args.v, nonneg=True)
    lam = q.check_vector(args.w, nonneg=True)
    profiles = {}
    if args.method in ("kac", "both"):
        profiles["kac"] = poincare_via_kac(q, alpha, lam)
    if args.method in ("hausel", "both"):
        profiles["hausel"] = profile_via_hausel(q, alpha, lam, jobs=args.jobs)
    if len(profiles) == 2 and profiles["kac"] != profiles["hausel"]:
        raise ConsistencyError(
            f"Betti methods disagree: kac={profiles['kac'].poly} "
            f"hausel={profiles['hausel'].poly}"
        )
    prof = next(iter(profiles.values()))
    euler = euler_characteristic(prof)
    payload = {
        "alpha": list(alpha),
        "lambda": list(lam),
        "d": prof.d,
        "empty": prof.empty,
        "p": _poly_json(prof.poly),
        "betti": [{"degree": deg, "h": h} for deg, h in prof.betti],
        "middle": weight_mult_via_betti(prof),
        "euler": euler,
    }
    if args.method == "both":
        payload["methods_agree"] = True
    return payload, [[_join(alpha), _join(prof.poly), str(euler)]]


def _cmd_oracle_ai_count(args):
    q = _load_quiver(args.quiver)
    alpha = q.check_vector(args.dim, nonneg=True)
    n = count_absolutely_indecomposable(q, alpha, args.p, cap=args.cap)
    payload = {"alpha": list(alpha), "p": args.p, "count": n}
    return payload, [[_join(alpha), str(args.p), str(n)]]


def _cmd_selftest(args):
    return selftest_mod.run()


# ------------------------------------------------------------------ parser

def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1)

    parser = _Parser(
        prog="quiverkac",
        description="Kac polynomials, root and weight multiplicities, and "
        "Betti numbers of quiver varieties, all in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kac", parents=[common], help="Kac polynomials")
    p.add_argument("--quiver", required=True)
    p.add_argument("--dim", type=_vector)
    p.add_argument("--all-upto", type=_vector, dest="all_upto")
    p.set_defaults(func=_cmd_kac)

    p = sub.add_parser("roots", parents=[common], help="root multiplicities")
    p.add_argument("--quiver", required=True)
    p.add_argument("--bound", type=_vector, required=True)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("weightmult", parents=[common], help="weight multiplicities")
    p.add_argument("--quiver", required=True)
    p.add_argument("--hw", type=_vector, required=True)
    p.add_argument("--drop", type=_vector, required=True)
    p.add_argument("--method", choices=("framed", "freudenthal", "both"), default="both")
    p.set_defaults(func=_cmd_weightmult)

    p = sub.add_parser("character", parents=[common], help="all weight multiplicities up to a bound")
    p.add_argument("--quiver", required=True)
    p.add_argument("--hw", type=_vector, required=True)
    p.add_argument("--bound", type=_vector, required=True)
    p.set_defaults(func=_cmd_character)

    p = sub.add_parser("betti", parents=[common], help="Betti numbers of a quiver variety")
    p.add_argument("--quiver", required=True)
    p.add_argument("--v", type=_vector, required=True)
    p.add_argument("--w", type=_vector, required=True)
    p.add_argument("--method", choices=("kac", "hausel", "both"), default="both")
    p.set_defaults(func=_cmd_betti)

    oracle = sub.add_parser("oracle", parents=[common], help="finite-field brute force")
    osub = oracle.add_subparsers(dest="action", required=True)
    p = osub.add_parser("ai-count", parents=[common], help="absolutely indecomposable classes")
    p.add_argument("--quiver", required=True)
    p.add_argument("--dim", type=_vector, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=_cmd_oracle_ai_count)

    p = sub.add_parser("selftest", parents=[common], help="cross-validation battery")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        result = args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    if isinstance(result, int):
        return result
    payload, rows = result
    if args.format == "json":
        print(json.dumps(payload, separators=(",", ":")))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerows(rows)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
