"""Command-line front end.

    wedgehom homology SPEC       oracle reduced homology of I(G)
    wedgehom reduce SPEC         fold trace, collapse verdict, del/lk certificate
    wedgehom predict SPEC        closed-form prediction (oracle if unrecognized)
    wedgehom verify SPEC         prediction versus oracle
    wedgehom sweep FAMILY        verify a whole parameter grid

Exit codes: 0 match, 2 mismatch, 3 no prediction (verify), 1 usage or size error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from pathlib import Path

from . import families
from .collapse import is_collapsible
from .complex import DEFAULT_MAX_FACES, euler_characteristic, f_vector, independence_complex
from .errors import InvalidParameterError, SizeLimitError
from .grammar import build_graph, parse_spec, serialize
from .grids import STATED_COMPLEX, stated_type
from .homology import INTEGERS, _is_prime, compare_profiles, profile_of_type, reduced_homology
from .homotopy import parse_type
from .predictor import CycleWedgePathParams, predict_cycle_wedge_path
from .reduction import alternating_face, del_link_decompose, reduce_fully

REPORT_VERSION = "1"
EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_UNKNOWN = 0, 1, 2, 3

SWEEP_FAMILIES = (
    "paths",
    "cycles",
    "path-wedge-path",
    "cycle-wedge-cycle",
    "k-cycles",
    "cycle-wedge-path",
    "terminal-paths",
    "random-wedges",
)


@dataclass(frozen=True)
class Options:
    max_vertices: int = 26
    max_faces: int = DEFAULT_MAX_FACES
    field: int = INTEGERS
    collapse_budget: int | None = None
    check_collapse: bool = False


def _check_size(expr, options: Options) -> None:
    if expr.vertex_count > options.max_vertices:
        raise SizeLimitError(
            f"{serialize(expr)} has {expr.vertex_count} vertices (cap {options.max_vertices})"
        )


def run_instance(command: str, spec: str, options: Options, predicted: str | None = None) -> dict:
    """Run one command on one specification and return its report.

    ``predicted`` overrides family recognition (sweeps use it to compare a
    prediction for one parameterization against an isomorphic representative).
    """
    start = time.perf_counter()
    expr = parse_spec(spec)
    _check_size(expr, options)
    rec = families.recognize(expr)
    if predicted is not None:
        rec = families.Recognition(rec.family, parse_type(predicted), rec.params)

    g = build_graph(expr)
    report = {
        "version": REPORT_VERSION,
        "command": command,
        "spec": serialize(expr),
        "family": rec.family,
        "params": rec.params,
        "vertices": g.vertex_count,
        "edges": len(g.edges),
        "f_vector": None,
        "homology": None,
        "predicted": None if command == "homology" else str(rec.predicted),
        "verdicts": {"fold": None, "collapse": None, "decomposition": None},
        "notes": [],
    }
    needs_oracle = command in ("homology", "verify", "reduce") or rec.predicted.is_unknown
    if command == "predict" and rec.predicted.is_unknown:
        report["notes"].append("no closed form for this shape; oracle result reported instead")

    k = None
    if needs_oracle:
        k = independence_complex(g, max_faces=options.max_faces)
        profile = reduced_homology(k, ring=options.field)
        fv = f_vector(k)
        if profile.euler_characteristic() != euler_characteristic(k):
            raise AssertionError(f"Euler characteristic mismatch for {report['spec']}")
        report["f_vector"] = fv
        report["homology"] = profile.to_dict()
        if not profile.torsion_checked:
            report["notes"].append("torsion unchecked: homology computed over a prime field")
        if command == "verify" and not rec.predicted.is_unknown:
            consistency = compare_profiles(profile, profile_of_type(rec.predicted))
            report["match"] = consistency.consistent
            report["mismatched_dimensions"] = list(consistency.mismatched_dimensions)

    if command == "reduce":
        report["verdicts"]["fold"] = reduce_fully(g).summary()
        point = families.wedge_point_index(expr)
        if point is not None:
            d = del_link_decompose(
                g,
                point,
                step_budget=options.collapse_budget,
                preferred=[alternating_face(g, point)],
            )
            report["verdicts"]["decomposition"] = {
                "vertex": g.label(point),
                "verdict": d.verdict.value,
                "witness": None if d.witness is None else [g.label(v) for v in d.witness.vertices()],
                "candidates_tried": d.candidates_tried,
            }
            if d.warning:
                report["notes"].append(d.warning)
    if k is not None and (options.check_collapse or command == "reduce"):
        verdict = is_collapsible(k, options.collapse_budget)
        report["verdicts"]["collapse"] = verdict.value
        if verdict and report["homology"]["reduced_betti"]:
            raise AssertionError("collapsible complex with non-zero reduced homology")

    report["seconds"] = round(time.perf_counter() - start, 6)
    return report


def exit_code(report: dict) -> int:
    if report["command"] != "verify":
        return EXIT_OK
    if "match" not in report:
        return EXIT_UNKNOWN
    return EXIT_OK if report["match"] else EXIT_MISMATCH


def format_profile(h: dict | None) -> str:
    if h is None:
        return "-"
    parts = [f"b~{d}={b}" for d, b in sorted(h["reduced_betti"].items(), key=lambda x: int(x[0]))]
    parts += [
        f"T{d}=" + "+".join(f"Z/{t}" for t in ts)
        for d, ts in sorted(h["torsion"].items(), key=lambda x: int(x[0]))
    ]
    return (" ".join(parts) or "0") + f" ({h['ring']})"


def format_report(r: dict) -> str:
    lines = [f"spec:       {r['spec']}", f"family:     {r['family'] or 'unrecognized'}"]
    lines.append(f"vertices:   {r['vertices']} ({r['edges']} edges)")
    if r["f_vector"] is not None:
        lines.append("f-vector:   " + " ".join(map(str, r["f_vector"])))
        lines.append(f"homology:   {format_profile(r['homology'])}")
    if r["predicted"] is not None:
        lines.append(f"predicted:  {r['predicted']}")
    if "case_formula" in r["params"]:
        flag = "  DISCREPANCY" if r["params"]["discrepancy"] else ""
        lines.append(f"case form:  {r['params']['case_formula']}{flag}")
    if "match" in r:
        status = "yes" if r["match"] else f"no (dimensions {r['mismatched_dimensions']})"
        lines.append(f"match:      {status}")
    v = r["verdicts"]
    if v["fold"] is not None:
        lines.append(f"folds:      {v['fold']['folds']}, join factors {v['fold']['join_factors']}")
        lines.append(f"fold type:  {v['fold']['type']}")
        for s in v["fold"]["steps"]:
            lines.append(f"  {s}")
    if v["collapse"] is not None:
        lines.append(f"collapse:   {v['collapse']}")
    if v["decomposition"] is not None:
        d = v["decomposition"]
        witness = f", sigma={{{', '.join(d['witness'])}}}" if d["witness"] else ""
        lines.append(f"del/lk at {d['vertex']}: {d['verdict']}{witness}")
    lines += [f"note:       {n}" for n in r["notes"]]
    lines.append(f"time:       {r['seconds']:.3f}s")
    return "\n".join(lines)


# sweeps -------------------------------------------------------------------


@dataclass(frozen=True)
class Instance:
    spec: str
    oracle_spec: str
    predicted: str | None = None
    params: dict | None = None


def _range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    lo, hi = int(lo), int(hi or lo)
    if lo > hi:
        raise InvalidParameterError(f"empty range {text}")
    return lo, hi


def _plain(spec: str) -> Instance:
    return Instance(spec, spec)


def sweep_instances(family: str, args) -> list[Instance]:
    default = {
        "paths": "0:18",
        "cycles": "3:18",
        "path-wedge-path": "1:10",
        "cycle-wedge-cycle": "3:12",
        "k-cycles": "3:8",
        "cycle-wedge-path": "1:2",
        "terminal-paths": "2:3",
        "random-wedges": "3:10",
    }
    lo, hi = _range(args.range or default[family])
    out = []
    if family == "paths":
        # P(0) has no textual form; its complex is {∅}
        out = [_plain(f"P({m})") for m in range(max(lo, 1), hi + 1)]
    elif family == "cycles":
        out = [_plain(f"C({n})") for n in range(max(lo, 3), hi + 1)]
    elif family == "path-wedge-path":
        for m, n in product(range(lo, hi + 1), repeat=2):
            out += [_plain(f"wedge(P({m})@{m}, P({n})@{l})") for l in range(1, n + 1)]
    elif family == "cycle-wedge-cycle":
        out = [
            _plain(f"wedge(C({m})@1, C({n})@1)")
            for m, n in product(range(max(lo, 3), hi + 1), repeat=2)
        ]
    elif family == "k-cycles":
        for ms in combinations_with_replacement(range(max(lo, 3), hi + 1), args.arms):
            out.append(_plain("wedge(" + ", ".join(f"C({m})@1" for m in ms) + ")"))
    elif family == "cycle-wedge-path":
        out = cycle_wedge_path_instances(lo, hi)
    elif family == "terminal-paths":
        lengths = [int(x) for x in args.lengths.split(",")]
        for arms in range(lo, hi + 1):
            for ms in combinations_with_replacement(lengths, arms):
                out.append(_plain("wedge(" + ", ".join(f"P({m})@{m}" for m in ms) + ")"))
    elif family == "random-wedges":
        rng = random.Random(args.seed)
        for _ in range(args.count):
            parts = []
            for _ in range(2):
                kind = rng.choice("PC")
                size = rng.randint(max(lo, 3 if kind == "C" else 1), hi)
                parts.append(f"{kind}({size})@{rng.randint(1, size)}")
            out.append(_plain(f"wedge({parts[0]}, {parts[1]})"))
    return out


def cycle_wedge_path_instances(lo: int, hi: int) -> list[Instance]:
    """All residue classes of (n, k, m - k) for quotients a, b, c in [lo, hi].

    ``G_k`` and ``G_{m+1-k}`` are isomorphic, so the oracle runs on the one
    with ``k <= ceil(m/2)`` while the prediction uses the requested ``k``.
    """
    out = []
    for a, b, c in product(range(lo, hi + 1), repeat=3):
        for i, j, l in product(range(3), repeat=3):
            n, k = 3 * a + i, 3 * b + j
            m = k + 3 * c + l
            params = CycleWedgePathParams(n=n, m=m, k=k)
            rep = min(k, m + 1 - k)
            out.append(
                Instance(
                    f"wedge(C({n})@1, P({m})@{k})",
                    f"wedge(C({n})@1, P({m})@{rep})",
                    str(predict_cycle_wedge_path(params)),
                    {"a": a, "b": b, "c": c, "residues": [i, j, l], "alpha": a + b + c},
                )
            )
    return out


def _run_sweep_item(item: tuple[Instance, Options]) -> dict:
    inst, options = item
    try:
        report = run_instance("verify", inst.oracle_spec, options, inst.predicted)
    except SizeLimitError as exc:
        return {"version": REPORT_VERSION, "command": "sweep", "spec": inst.spec, "skipped": str(exc)}
    if inst.oracle_spec != inst.spec:
        report["oracle_spec"] = report["spec"]
        report["spec"] = serialize(parse_spec(inst.spec))
        report["params"] = families.recognize(parse_spec(inst.spec)).params
    if inst.params:
        report["params"] = {**report["params"], **inst.params}
    return report


def run_sweep(family: str, args, options: Options) -> list[dict]:
    items = [(inst, options) for inst in sweep_instances(family, args)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            return list(pool.map(_run_sweep_item, items))
    return [_run_sweep_item(item) for item in items]


def _oracle_type(r: dict) -> str:
    betti = r["homology"]["reduced_betti"]
    if r["homology"]["torsion"]:
        return "torsion"
    if "-1" in betti:
        return "S^-1"
    dims = [int(d) for d, b in betti.items() for _ in range(b)]
    return " v ".join(f"S^{d}" for d in sorted(dims)) or "pt"


def sweep_table(family: str, reports: list[dict]) -> str:
    rows = [f"{'spec':44} {'predicted':14} {'oracle':14} {'match':5} extra"]
    for r in reports:
        if "skipped" in r:
            rows.append(f"{r['spec']:44} skipped: {r['skipped']}")
            continue
        extra = ""
        if "case_formula" in r["params"]:
            extra = f"case formula {r['params']['case_formula']}"
            extra += " DISCREPANCY" if r["params"]["discrepancy"] else ""
        if "oracle_spec" in r:
            extra = f"oracle on {r['oracle_spec']}"
        match = "yes" if r["match"] else "NO"
        rows.append(f"{r['spec']:44} {r['predicted']:14} {_oracle_type(r):14} {match:5} {extra}")
    done = [r for r in reports if "skipped" not in r]
    bad = sum(not r["match"] for r in done)
    rows.append(f"{len(done)} instances, {bad} mismatches, {len(reports) - len(done)} skipped")
    if family == "cycle-wedge-path":
        rows.append("")
        rows.append(residue_grid(done))
    return "\n".join(rows)


def _offsets(type_text: str, alpha: int) -> str:
    return parse_type(type_text).relative_to(alpha)


def _stated(r: dict) -> str:
    p = r["params"]
    return str(stated_type(STATED_COMPLEX, CycleWedgePathParams(n=p["n"], m=p["m"], k=p["k"])))


def residue_grid(reports: list[dict]) -> str:
    """One line per residue class: oracle types relative to alpha next to the
    stated table entry, with the number of instances where they agree."""
    cells: dict[tuple, list] = {}
    for r in reports:
        cells.setdefault(tuple(r["params"]["residues"]), []).append(r)
    names = (("3a", "3a+1", "3a+2"), ("3b", "3b+1", "3b+2"), ("3c", "3c+1", "3c+2"))
    lines = [f"{'n':5} {'k':5} {'m-k':5} {'oracle':28} {'stated':22} agree"]
    for (i, j, l), group in sorted(cells.items()):
        oracle = sorted({_offsets(_oracle_type(r), r["params"]["alpha"]) for r in group})
        stated = sorted({_offsets(_stated(r), r["params"]["alpha"]) for r in group})
        agree = sum(_stated(r) == _oracle_type(r) for r in group)
        lines.append(
            f"{names[0][i]:5} {names[1][j]:5} {names[2][l]:5} {', '.join(oracle):28} "
            f"{', '.join(stated):22} {agree}/{len(group)}"
        )
    return "\n".join(lines)


# argument handling --------------------------------------------------------


def _env(name: str, default):
    return os.environ.get(f"WEDGEHOM_{name}", default)


def _field(text: str) -> int:
    if text.upper() in ("Z", "0"):
        return INTEGERS
    p = int(text)
    if not _is_prime(p):
        raise argparse.ArgumentTypeError(f"{text} is not a prime")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="newline-delimited JSON reports")
    common.add_argument("--max-vertices", type=int, default=int(_env("MAX_VERTICES", 26)))
    common.add_argument("--max-faces", type=int, default=int(_env("MAX_FACES", DEFAULT_MAX_FACES)))
    common.add_argument(
        "--field",
        type=_field,
        default=_field(_env("FIELD", "Z")),
        help="Z (integer SNF, GF(32003) fallback on huge complexes) or a prime p",
    )
    budget = _env("COLLAPSE_BUDGET", None)
    common.add_argument(
        "--collapse-budget", type=int, default=None if budget is None else int(budget)
    )
    common.add_argument("--collapse", action="store_true", help="also run the collapse checker")

    parser = argparse.ArgumentParser(prog="wedgehom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("homology", "reduce", "predict", "verify"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("spec", help='graph specification, e.g. "wedge(C(4)@1, P(5)@3)"')
    p = sub.add_parser("sweep", parents=[common])
    p.add_argument("family", choices=SWEEP_FAMILIES)
    p.add_argument("--range", help="LO:HI for the family's main parameter")
    p.add_argument("--arms", type=int, default=3, help="number of cycles (k-cycles)")
    p.add_argument("--lengths", default="4,5,7,8", help="arm lengths (terminal-paths)")
    p.add_argument("--count", type=int, default=50, help="instances (random-wedges)")
    p.add_argument("--seed", type=int, default=int(_env("SEED", 0)))
    p.add_argument("--jobs", type=int, default=int(_env("JOBS", 1)))
    p.add_argument("--output", type=Path, help="write a text table and a .jsonl file")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    options = Options(
        max_vertices=args.max_vertices,
        max_faces=args.max_faces,
        field=args.field,
        collapse_budget=args.collapse_budget,
        check_collapse=args.collapse,
    )
    try:
        if args.command == "sweep":
            return _sweep_main(args, options)
        report = run_instance(args.command, args.spec, options)
    except (InvalidParameterError, SizeLimitError) as exc:
        print(f"wedgehom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(report) if args.json else format_report(report))
    return exit_code(report)


def _sweep_main(args, options: Options) -> int:
    reports = run_sweep(args.family, args, options)
    for r in reports:
        if "skipped" in r:
            print(f"wedgehom: warning: skipped {r['spec']}: {r['skipped']}", file=sys.stderr)
    table = sweep_table(args.family, reports)
    if args.json:
        for r in reports:
            print(json.dumps(r))
    else:
        print(table)
    if args.output:
        args.output.write_text(table + "\n")
        with args.output.with_suffix(".jsonl").open("w") as fh:
            for r in reports:
                fh.write(json.dumps(r) + "\n")
    mismatches = any(not r["match"] for r in reports if "skipped" not in r)
    return EXIT_MISMATCH if mismatches else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
