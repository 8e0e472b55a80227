"""Command-line front end: single queries and deterministic sweeps.

Output is JSON by default (one document, keys sorted) or CSV rows; sweep rows
are emitted in lexicographic order of the swept parameters regardless of the
worker count, so output is byte-identical across runs and across --threads
values.  Exit codes: 0 success, 1 a verification claim failed, 2 input error,
3 resource guard exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import bott, criteria, resolutions
from .weights import FlagShape, LeviWeight

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

DEFAULT_MAX_CASES = 100_000_000


class InputError(ValueError):
    pass


class ResourceGuardError(RuntimeError):
    pass


# --- argument parsing helpers ----------------------------------------------


def parse_flag(text: str) -> FlagShape:
    """Parse 'd1,d2,...:n' into a FlagShape."""
    try:
        steps, _, ambient = text.partition(":")
        if not ambient:
            raise ValueError("missing ':n' part")
        d = tuple(int(x) for x in steps.split(",")) + (int(ambient),)
        return FlagShape(d)
    except ValueError as exc:
        raise InputError(f"bad --flag value {text!r}: {exc}") from exc


def parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad integer list {text!r}") from exc


def parse_range(text: str) -> range:
    """Parse 'a..b' (inclusive) into a range; negatives allowed."""
    try:
        lo, sep, hi = text.partition("..")
        if not sep:
            raise ValueError("missing '..'")
        lo, hi = int(lo), int(hi)
    except ValueError as exc:
        raise InputError(f"bad range {text!r}: expected a..b") from exc
    if hi < lo:
        raise InputError(f"empty range {text!r}")
    return range(lo, hi + 1)


def load_scenario(path: str) -> criteria.Scenario:
    """Read a versioned scenario file: shape, split V, and N."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read scenario {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("scenario must be a JSON object")
    unknown = set(doc) - {"schema", "shape", "V", "N"}
    if unknown:
        raise InputError(f"unknown scenario fields: {sorted(unknown)}")
    if doc.get("schema") != 1:
        raise InputError("scenario requires \"schema\": 1")
    try:
        shape = FlagShape(tuple(doc["shape"]))
        summands = []
        for item in doc["V"]:
            extra = set(item) - {"weight", "multiplicity"}
            if extra:
                raise InputError(f"unknown summand fields: {sorted(extra)}")
            summands.append(
                (tuple(item["weight"]), int(item.get("multiplicity", 1)))
            )
        v = criteria.SplitBundle(shape, tuple(summands))
        raw_n = doc["N"]
        if raw_n == criteria.UNIVERSAL_QUOTIENT:
            n = criteria.UNIVERSAL_QUOTIENT
        elif isinstance(raw_n, dict) and set(raw_n) == {"split"}:
            n_summands = []
            for item in raw_n["split"]:
                extra = set(item) - {"weight", "multiplicity"}
                if extra:
                    raise InputError(f"unknown summand fields: {sorted(extra)}")
                n_summands.append(
                    (tuple(item["weight"]), int(item.get("multiplicity", 1)))
                )
            n = criteria.SplitBundle(shape, tuple(n_summands))
        else:
            raise InputError(
                "N must be {\"split\": [...]} or \"universal-quotient\""
            )
        return criteria.Scenario(shape, v, n)
    except InputError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad scenario {path}: {exc}") from exc


# --- output -----------------------------------------------------------------


def emit(args, command: str, rows: list[dict], summary: dict) -> None:
    if args.format == "json":
        doc = {"command": command, "rows": rows, "summary": summary}
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    else:
        buf = io.StringIO()
        fields = sorted({key for row in rows for key in row})
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(
                {k: _csv_cell(v) for k, v in row.items()}
            )
        buf.write(
            "# summary: "
            + ",".join(f"{k}={v}" for k, v in sorted(summary.items()))
            + "\n"
        )
        text = buf.getvalue()
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_cell(value):
    if isinstance(value, (list, tuple)):
        return " ".join(str(x) for x in value)
    return value


def _result_row(res: bott.CohomologyResult | None) -> dict:
    if res is None:
        return {"zero": True}
    return {
        "zero": False,
        "degree": res.degree,
        "dominant_weight": list(res.dominant_weight),
        "dimension": str(res.dimension),
    }


def _sweep(args, func, inputs):
    """Evaluate func over inputs, fanning out over threads but emitting in
    input order."""
    threads = args.threads or os.cpu_count() or 1
    if threads <= 1 or len(inputs) <= 1:
        return [func(x) for x in inputs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, inputs))


def _guard(args, count: int) -> None:
    limit = args.max_cases
    if count > limit:
        raise ResourceGuardError(
            f"sweep of {count} cases exceeds the guard of {limit}"
        )


# --- commands ---------------------------------------------------------------


def cmd_cohomology(args) -> int:
    shape = parse_flag(args.flag)
    entries = parse_ints(args.weight)
    try:
        weight = LeviWeight(shape, entries)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    res = bott.cohomology(shape, weight)
    row = {"flag": list(shape.d), "weight": list(entries), **_result_row(res)}
    emit(args, "cohomology", [row], {"zero": int(res is None)})
    return EXIT_OK


def cmd_hsplit(args) -> int:
    shape = parse_flag(args.flag)
    ok, witness = bott.h_splitting(shape, args.h, args.bound)
    row = {
        "flag": list(shape.d),
        "h": args.h,
        "h_splitting": ok,
        "witness": None if witness is None else list(witness.entries),
    }
    emit(args, "hsplit", [row], {"h_splitting": int(ok)})
    return EXIT_OK


def cmd_claim2(args) -> int:
    nus = parse_range(args.nu_range)
    ns = parse_range(args.n_range)
    ks = parse_range(args.k_range)
    if nus.start < 1 or ns.start < 1:
        raise InputError("claim2 needs nu >= 1 and n >= 1")
    cases = list(itertools.product(nus, ns, ks))
    _guard(args, len(cases))

    def one(case):
        nu, n, k = case
        holds, counterexample = bott.claim2_vanishing(nu, n, k)
        return {
            "nu": nu,
            "n": n,
            "k": k,
            "holds": holds,
            "counterexample_m": counterexample,
            "theorem_regime": nu >= 2 and n >= 2,
        }

    rows = _sweep(args, one, cases)
    failures = sum(1 for r in rows if r["theorem_regime"] and not r["holds"])
    summary = {
        "cases": len(rows),
        "vanishing": sum(1 for r in rows if r["holds"]),
        "nonvanishing": sum(1 for r in rows if not r["holds"]),
        "theorem_failures": failures,
    }
    emit(args, "claim2", rows, summary)
    return EXIT_CLAIM_FAILED if failures else EXIT_OK


def all_shapes(max_n: int, min_n: int = 2):
    """All flag shapes with ambient dimension up to max_n, lexicographically."""
    shapes = []
    for n in range(min_n, max_n + 1):
        for r in range(1, n):
            for steps in itertools.combinations(range(1, n), r):
                shapes.append(FlagShape(steps + (n,)))
    shapes.sort(key=lambda s: s.d)
    return shapes


def cmd_cohom0_verify(args) -> int:
    if args.max_n < 2:
        raise InputError("need --max-n >= 2")
    shapes = all_shapes(args.max_n)
    _guard(args, len(shapes))

    def one(shape):
        search, witness = bott.h_splitting(shape, 1)
        structural = not bott.has_adjacent_singleton_blocks(shape)
        return {
            "flag": list(shape.d),
            "search_one_splitting": search,
            "structural_one_splitting": structural,
            "agree": search == structural,
            "witness": None if witness is None else list(witness.entries),
        }

    rows = _sweep(args, one, shapes)
    disagreements = sum(1 for r in rows if not r["agree"])
    summary = {
        "shapes": len(rows),
        "one_splitting": sum(1 for r in rows if r["search_one_splitting"]),
        "disagreements": disagreements,
    }
    emit(args, "cohom0-verify", rows, summary)
    return EXIT_CLAIM_FAILED if disagreements else EXIT_OK


def cmd_resolution(args) -> int:
    if args.nu < 1 or args.m < 1:
        raise InputError("need --nu >= 1 and --m >= 1")
    complex_ = resolutions.be_complex(args.nu, args.m)
    rows = [
        {"position": pos, "rank": rank} for pos, rank in complex_.ranks()
    ]
    summary = {
        "nu": args.nu,
        "m": args.m,
        "augmentation": complex_.augmentation,
        "euler_rank_check": int(resolutions.euler_rank_check(complex_)),
    }
    emit(args, "resolution", rows, summary)
    return EXIT_OK


def cmd_chase(args) -> int:
    try:
        e, d = parse_ints(args.grass)
    except ValueError as exc:
        raise InputError(f"bad --grass value {args.grass!r}") from exc
    if not 1 <= e < d:
        raise InputError(f"need 1 <= e < d, got ({e},{d})")
    shape = FlagShape((e, d))
    F = [(args.twist, 0)]
    try:
        vanishes, ledger = resolutions.vanishing_chase(shape, F, args.m, args.t)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    rows = []
    for entry in ledger:
        rows.append(
            {
                "j": entry.j,
                "degree": entry.degree,
                "summand": list(entry.summand),
                **_result_row(entry.result),
            }
        )
    summary = {
        "grass": f"({e};{d})",
        "m": args.m,
        "t": args.t,
        "vanishes": int(vanishes),
    }
    emit(args, "chase", rows, summary)
    return EXIT_OK


def cmd_thresholds(args) -> int:
    scenario = load_scenario(args.scenario)
    if not isinstance(scenario.N, criteria.SplitBundle) or not criteria.is_ample_split(
        scenario.N
    ):
        raise InputError("thresholds need N split with ample summands")
    m_v = criteria.m_threshold_V(scenario.V, scenario.N)
    e = criteria.end_split(scenario.V)
    m_f = criteria.m_threshold_F(e, scenario.N)
    rows = [
        {"threshold": "m_V", "value": m_v},
        {"threshold": "m_F(End V)", "value": m_f},
    ]
    emit(
        args,
        "thresholds",
        rows,
        {"rank_V": scenario.V.rank, "nu": scenario.nu},
    )
    return EXIT_OK


def cmd_poset(args) -> int:
    scenario = load_scenario(args.scenario)
    result = criteria.poset(scenario.V)
    rows = [
        {
            "index": i,
            "class": list(values),
            "maximal": i in result.maximal,
        }
        for i, values in enumerate(result.classes)
    ]
    summary = {
        "classes": len(result.classes),
        "relation": " ".join(
            f"{i}<{j}" for i, j in sorted(result.relation)
        ),
        "maximal": " ".join(str(i) for i in sorted(result.maximal)),
    }
    emit(args, "poset", rows, summary)
    return EXIT_OK


def cmd_reduce(args) -> int:
    if (args.grass is None) == (args.flag is None):
        raise InputError("reduce needs exactly one of --grass or --flag")
    if args.grass is not None:
        try:
            e, d = parse_ints(args.grass)
        except ValueError as exc:
            raise InputError(f"bad --grass value {args.grass!r}") from exc
        try:
            steps = criteria.reduction_chain_grass(e, d)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        rows = [
            {
                "step": i,
                "kind": s.kind,
                "source": list(s.source),
                "target": list(s.target),
                "nu": s.nu,
                "n": s.n,
            }
            for i, s in enumerate(steps, start=1)
        ]
        emit(args, "reduce", rows, {"steps": len(rows), "terminal": "(2;4)"})
        return EXIT_OK
    shape = parse_flag(args.flag)
    try:
        steps = criteria.reduction_chain_flag(shape)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    rows = [
        {
            "step": i,
            "j": s.j,
            "source": list(s.source.d),
            "target": list(s.target.d),
            "target_ge_staircase": s.target_ge_staircase,
            "target_no_adjacent_singletons": s.target_no_adjacent_singletons,
            "target_one_splitting": s.target_one_splitting,
            "cd_applicable": s.cd_applicable,
        }
        for i, s in enumerate(steps, start=1)
    ]
    emit(
        args,
        "reduce",
        rows,
        {
            "steps": len(rows),
            "terminal": str(FlagShape.staircase(shape.t)),
        },
    )
    return EXIT_OK


# --- driver -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagsplit",
        description="Exact cohomology and splitting-criterion computations "
        "on GL partial flag varieties.",
    )
    parser.add_argument(
        "--format", choices=("json", "csv"), default="json",
        help="output format (default json)",
    )
    parser.add_argument("--output", help="write output to this file")
    parser.add_argument(
        "--threads", type=int, default=None,
        help="worker threads for sweeps (default: available cores)",
    )
    parser.add_argument(
        "--max-cases", type=int, default=DEFAULT_MAX_CASES,
        help="resource guard on the number of swept cases",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cohomology", help="Bott cohomology of one weight")
    p.add_argument("--flag", required=True, help="shape as d1,d2,...:n")
    p.add_argument("--weight", required=True, help="length-n weight w1,...,wn")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("hsplit", help="decide h-splitting of a flag variety")
    p.add_argument("--flag", required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=cmd_hsplit)

    p = sub.add_parser("claim2", help="sweep the Sym^m(N-dual) twist vanishing")
    p.add_argument("--nu-range", required=True, help="a..b inclusive")
    p.add_argument("--n-range", required=True)
    p.add_argument("--k-range", required=True)
    p.set_defaults(func=cmd_claim2)

    p = sub.add_parser(
        "cohom0-verify",
        help="compare the 1-splitting search with the structural predicate",
    )
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_cohom0_verify)

    p = sub.add_parser("resolution", help="ranks of the degree-m resolution")
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_resolution)

    p = sub.add_parser("chase", help="cohomology-vanishing chase on Grs(e;d)")
    p.add_argument("--grass", required=True, help="e,d")
    p.add_argument("--twist", type=int, default=0, help="F = O(twist)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_chase)

    p = sub.add_parser("thresholds", help="effective thresholds m_V and m_F")
    p.add_argument("--scenario", required=True, help="scenario JSON file")
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("poset", help="isotypical poset of a split bundle")
    p.add_argument("--scenario", required=True)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("reduce", help="reduction chain to the base case")
    p.add_argument("--grass", default=None, help="e,d")
    p.add_argument("--flag", default=None, help="d1,d2,...:n")
    p.set_defaults(func=cmd_reduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
