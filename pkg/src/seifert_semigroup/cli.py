"""Command-line interface.

Single-record commands take the input record as a JSON string, ``@path`` to
read it from a file, or ``-`` for stdin.  A record carries exactly one of:

    {"seifert": {"b0": 1, "legs": [[5, 1], [5, 1], [7, 1], [10, 1]]}}
    {"alphas": [2, 3, 7]}
    {"bh": [6, 10, 14]}

plus an optional "id".  Rationals are rendered as "p/q" strings (reduced,
positive denominator, integers without "/1").  Exit codes: 0 on success,
1 on hard input errors, 2 on verification failures.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import laufer, verification
from .brieskorn import NOT_QHS, bh_generators, bh_seifert, classify
from .errors import RationalLinkError, TrivialSemigroupError
from .lattice import RationalCycle, build_graph, canonical_cycle, class_rep, dual_cycle, r_of_class, zero_cycle
from .seifert import (
    SeifertData,
    ceil_frac,
    ihs_from_alphas,
    invariants,
    is_numerically_gorenstein,
    is_rational_link,
)
from .semigroup import (
    SemigroupView,
    apery_selmer,
    frobenius_bruteforce,
    frobenius_by_formula,
    frobenius_module_raw,
    min_module,
    minimal_generators,
    poincare,
    symmetry_report,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2


def fmt(x) -> str | int | float | bool | None:
    """Render exact rationals as reduced "p/q" strings; pass other scalars through."""
    if isinstance(x, Fraction):
        return str(x)
    return x


def fmt_cycle(l: RationalCycle) -> list[str]:
    return [str(c) for c in l.coeffs]


def parse_record(text_or_obj) -> dict:
    obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
    if not isinstance(obj, dict):
        raise ValueError("input record must be a JSON object")
    variants = [k for k in ("seifert", "alphas", "bh") if k in obj]
    if len(variants) != 1:
        raise ValueError("record must contain exactly one of 'seifert', 'alphas', 'bh'")
    return obj


def record_seifert(record: dict) -> SeifertData:
    """The Seifert data of a record, synthesising it for alphas/bh inputs."""
    if "seifert" in record:
        payload = record["seifert"]
        return SeifertData(int(payload["b0"]), tuple((int(a), int(w)) for a, w in payload["legs"]))
    if "alphas" in record:
        return ihs_from_alphas(record["alphas"])
    cls = classify(record["bh"])
    if cls.case == NOT_QHS:
        raise ValueError(f"exponents {tuple(record['bh'])} give positive genus (not a QHS)")
    return bh_seifert(cls)


def invariants_block(sf: SeifertData) -> dict:
    inv = invariants(sf)
    return {
        "e": fmt(inv.e),
        "alpha": inv.alpha,
        "gamma": fmt(inv.gamma),
        "orderH": inv.order_h,
        "orbitOrder": inv.orbit_order,
        "numericallyGorenstein": is_numerically_gorenstein(sf),
        "rational": is_rational_link(sf),
    }


def full_report(record: dict) -> dict:
    """The canonical per-record result object (used by `batch`)."""
    sf = record_seifert(record)
    out: dict = {}
    if "id" in record:
        out["id"] = record["id"]
    out["invariants"] = invariants_block(sf)
    trivial = sf.b0 >= sf.d
    if trivial:
        semi = {"frobenius": -1, "trivial": True, "generators": [1],
                "apery": list(apery_selmer(sf).apery), "gaps": 0, "symmetric": True}
    else:
        ap = apery_selmer(sf)
        rep = symmetry_report(sf)
        semi = {
            "frobenius": frobenius_bruteforce(sf),
            "trivial": False,
            "generators": minimal_generators(sf),
            "apery": list(ap.apery),
            "gaps": ap.gaps,
            "symmetric": rep.symmetric,
        }
    out["semigroup"] = semi
    out["module"] = {"frobenius": frobenius_module_raw(sf), "min": min_module(sf)}
    if "bh" in record:
        cls = classify(record["bh"])
        out["bh"] = {
            "case": cls.case,
            "m": cls.m,
            "c": cls.c,
            "p": list(cls.p),
            "generators": bh_generators(cls),
            "seifert": {"b0": sf.b0, "legs": [list(leg) for leg in sf.legs]},
        }
    return out


# ---------------------------------------------------------------------------
# Subcommands


def cmd_info(args) -> int:
    record = parse_record(_read_record(args.record))
    sf = record_seifert(record)
    g = build_graph(sf)
    out = {}
    if "id" in record:
        out["id"] = record["id"]
    out["invariants"] = invariants_block(sf)
    out["zk"] = fmt_cycle(canonical_cycle(g))
    _emit(out)
    return EXIT_OK


def cmd_frobenius(args) -> int:
    record = parse_record(_read_record(args.record))
    sf = record_seifert(record)
    out = {}
    if "id" in record:
        out["id"] = record["id"]
    trivial = sf.b0 >= sf.d
    semi: dict = {"trivial": trivial}
    if trivial:
        semi["frobenius"] = -1
    elif args.method == "formula":
        semi["frobenius"] = frobenius_by_formula(sf)
    elif args.method == "brute":
        semi["frobenius"] = frobenius_bruteforce(sf)
    else:
        formula, brute = frobenius_by_formula(sf), frobenius_bruteforce(sf)
        if formula != brute:
            print(f"verification failure: formula {formula} != brute {brute}", file=sys.stderr)
            return EXIT_VERIFY
        semi["frobenius"] = formula

    rational = is_rational_link(sf)
    module: dict = {"rational": rational}
    if rational:
        module["frobenius"] = None
    elif args.method == "formula":
        module["frobenius"] = laufer.frobenius_module(build_graph(sf))
    elif args.method == "brute":
        module["frobenius"] = frobenius_bruteforce(sf, "module")
    else:
        formula, brute = laufer.frobenius_module(build_graph(sf)), frobenius_bruteforce(sf, "module")
        if formula != brute:
            print(f"verification failure: module formula {formula} != brute {brute}", file=sys.stderr)
            return EXIT_VERIFY
        module["frobenius"] = formula
    out["method"] = args.method
    out["semigroup"] = semi
    out["module"] = module
    _emit(out)
    return EXIT_OK


def cmd_semigroup(args) -> int:
    record = parse_record(_read_record(args.record))
    sf = record_seifert(record)
    inv = invariants(sf)
    up_to = args.up_to if args.up_to is not None else max(0, ceil_frac(inv.gamma))
    view = SemigroupView(sf)
    out = {}
    if "id" in record:
        out["id"] = record["id"]
    out["invariants"] = invariants_block(sf)
    out["members"] = view.members(0, up_to)
    trivial = sf.b0 >= sf.d
    ap = apery_selmer(sf)
    out["semigroup"] = {
        "frobenius": -1 if trivial else frobenius_bruteforce(sf),
        "trivial": trivial,
        "generators": [1] if trivial else minimal_generators(sf),
        "apery": list(ap.apery),
        "gaps": ap.gaps,
    }
    if not trivial:
        rep = symmetry_report(sf)
        out["symmetry"] = {
            "symmetric": rep.symmetric,
            "witnesses": [list(w) for w in rep.witnesses],
            "modulePrincipal": rep.module_principal,
        }
    poin = poincare(sf, up_to)
    out["poincare"] = {
        "p0": list(poin.p0),
        "p0Plus": list(poin.p0_plus),
        "pg": poin.pg,
    }
    _emit(out)
    return EXIT_OK


def cmd_laufer(args) -> int:
    record = parse_record(_read_record(args.record))
    sf = record_seifert(record)
    g = build_graph(sf)
    zk = canonical_cycle(g)
    if args.class_rep == "zk":
        start_class = class_rep(zk)
    elif args.class_rep == "zk+e0":
        start_class = class_rep(zk + dual_cycle(g, 0))
    else:
        start_class = class_rep(zero_cycle(g.n))
    r = r_of_class(start_class)
    result, trace = laufer.to_antinef(g, r, trace=args.trace)
    sc = laufer.scalars(g)
    out = {}
    if "id" in record:
        out["id"] = record["id"]
    out["class"] = args.class_rep
    out["r"] = fmt_cycle(r)
    out["sH"] = fmt_cycle(result)
    out["scalars"] = {
        "delta": sc.delta,
        "Delta": sc.big_delta,
        "s": fmt(sc.s),
        "sCheck": fmt(sc.s_check),
    }
    if args.trace:
        out["trace"] = [
            f"step {k}: +E_{v}, chi={chi_val}"
            for k, (v, chi_val) in enumerate(trace.steps, start=1)
        ]
    _emit(out)
    return EXIT_OK


def cmd_bh(args) -> int:
    record = parse_record(_read_record(args.record))
    if "bh" not in record:
        raise ValueError("the bh command needs a {'bh': [...]} record")
    cls = classify(record["bh"])
    out = {}
    if "id" in record:
        out["id"] = record["id"]
    out["exponents"] = list(cls.exponents)
    out["case"] = cls.case
    if cls.case != NOT_QHS:
        sf = bh_seifert(cls)
        out["m"] = cls.m
        out["c"] = cls.c
        out["p"] = list(cls.p)
        out["seifert"] = {"b0": sf.b0, "legs": [list(leg) for leg in sf.legs]}
        out["generators"] = bh_generators(cls)
    _emit(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.random is not None:
        results = verification.verify_random(
            args.random, seed=args.seed, max_alpha=args.max_alpha, max_legs=args.max_legs
        )
    else:
        if args.record is None:
            raise ValueError("verify needs a record or --random K")
        record = parse_record(_read_record(args.record))
        sf = record_seifert(record)
        results = verification.verify_seifert(sf, random.Random(args.seed))
    failed = 0
    for res in results:
        status = "ok  " if res.passed else "FAIL"
        detail = f"  ({res.detail})" if res.detail else ""
        print(f"{status} {res.name}{detail}")
        if not res.passed:
            failed += 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


CSV_COLUMNS = [
    "id", "error", "e", "alpha", "gamma", "orderH", "orbitOrder",
    "numericallyGorenstein", "rational", "semigroupFrobenius", "trivial",
    "gaps", "symmetric", "moduleFrobenius", "moduleMin",
]


def _flatten(result: dict) -> dict:
    if "error" in result:
        return {"id": result.get("id", ""), "error": result["error"]}
    inv = result["invariants"]
    semi = result["semigroup"]
    return {
        "id": result.get("id", ""),
        "error": "",
        "e": inv["e"],
        "alpha": inv["alpha"],
        "gamma": inv["gamma"],
        "orderH": inv["orderH"],
        "orbitOrder": inv["orbitOrder"],
        "numericallyGorenstein": inv["numericallyGorenstein"],
        "rational": inv["rational"],
        "semigroupFrobenius": semi["frobenius"],
        "trivial": semi["trivial"],
        "gaps": semi["gaps"],
        "symmetric": semi["symmetric"],
        "moduleFrobenius": result["module"]["frobenius"],
        "moduleMin": result["module"]["min"],
    }


def _batch_one(line: str) -> tuple[str, bool]:
    """Process one JSONL record; returns (result line, had_error)."""
    try:
        record = parse_record(line)
        result = full_report(record)
        return json.dumps(result), False
    except Exception as ex:  # noqa: BLE001 - per-record error reporting
        ident = ""
        try:
            ident = json.loads(line).get("id", "")
        except Exception:  # noqa: BLE001
            pass
        return json.dumps({"id": ident, "error": str(ex)}), True


def cmd_batch(args) -> int:
    with open(args.infile, "r", encoding="utf-8") as fh:
        lines = [line.strip() for line in fh if line.strip()]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            outcomes = list(pool.map(_batch_one, lines, chunksize=8))
    else:
        outcomes = [_batch_one(line) for line in lines]
    had_error = any(err for _, err in outcomes)
    results = [json.loads(text) for text, _ in outcomes]

    if args.format == "csv" or (args.out and args.out.endswith(".csv") and args.format == "auto"):
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, extrasaction="ignore")
        writer.writeheader()
        for result in results:
            writer.writerow(_flatten(result))
        payload = buf.getvalue()
    else:
        payload = "".join(text + "\n" for text, _ in outcomes)

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return EXIT_INPUT if had_error else EXIT_OK


# ---------------------------------------------------------------------------
# Wiring


def _read_record(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if arg.startswith("@"):
        with open(arg[1:], "r", encoding="utf-8") as fh:
            return fh.read()
    return arg


def _emit(obj: dict) -> None:
    json.dump(obj, sys.stdout)
    sys.stdout.write("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifert-semigroup",
        description="Numerical semigroups of negative-definite Seifert rational homology spheres",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_record(p, required=True):
        if required:
            p.add_argument("record", help="JSON record, @file, or - for stdin")
        else:
            p.add_argument("record", nargs="?", default=None, help="JSON record, @file, or - for stdin")

    p = sub.add_parser("info", help="invariants and the canonical cycle")
    add_record(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("frobenius", help="Frobenius numbers of the semigroup and module")
    add_record(p)
    p.add_argument("--method", choices=["formula", "brute", "both"], default="both")
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("semigroup", help="membership, generators, Apery set, symmetry, Poincare data")
    add_record(p)
    p.add_argument("--up-to", type=int, default=None, dest="up_to")
    p.set_defaults(func=cmd_semigroup)

    p = sub.add_parser("laufer", help="computation-sequence scalars and optional trace")
    add_record(p)
    p.add_argument("--class", choices=["zk", "zk+e0", "zero"], default="zk", dest="class_rep")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_laufer)

    p = sub.add_parser("bh", help="Brieskorn-Hamm classification, Seifert data and generators")
    add_record(p)
    p.set_defaults(func=cmd_bh)

    p = sub.add_parser("verify", help="run the invariant/oracle suite; nonzero exit on failure")
    add_record(p, required=False)
    p.add_argument("--random", type=int, default=None, metavar="K")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-alpha", type=int, default=30, dest="max_alpha")
    p.add_argument("--max-legs", type=int, default=5, dest="max_legs")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="process a JSONL file of records")
    p.add_argument("--in", required=True, dest="infile")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["auto", "jsonl", "csv"], default="auto")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_batch)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, TrivialSemigroupError, RationalLinkError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
