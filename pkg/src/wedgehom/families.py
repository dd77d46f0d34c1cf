"""Recognize the closed-form families from the shape of a graph specification.

Recognition is purely syntactic over the canonicalized expression. Anything
not matched is reported as Unknown; nothing is guessed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .grammar import Expr, Prim, Wedge, canonicalize
from .homotopy import UNKNOWN_TYPE, HomotopyType
from .predictor import (
    CycleWedgePathParams,
    predict_cycle,
    predict_cycle_wedge_path,
    predict_cycle_wedges,
    predict_path,
    predict_path_wedge_path,
    predict_terminal_path_wedge,
)

PATH = "path"
CYCLE = "cycle"
PATH_WEDGE_PATH = "path-wedge-path"
CYCLE_WEDGES = "cycle-wedges"
CYCLE_WEDGE_PATH = "cycle-wedge-path"
TERMINAL_PATHS = "terminal-paths"


@dataclass(frozen=True)
class Recognition:
    family: str | None
    predicted: HomotopyType
    params: dict = field(default_factory=dict)


def _is_terminal(p: Prim, index: int) -> bool:
    return index in (1, p.size)


def recognize(e: Expr) -> Recognition:
    e = canonicalize(e)
    if isinstance(e, Prim):
        if e.kind == "P":
            return Recognition(PATH, predict_path(e.size), {"m": e.size})
        return Recognition(CYCLE, predict_cycle(e.size), {"n": e.size})

    ops = e.operands
    if not all(isinstance(x, Prim) for x, _ in ops):
        return Recognition(None, UNKNOWN_TYPE)
    kinds = sorted(x.kind for x, _ in ops)

    if kinds == ["C"] * len(ops):
        ms = [x.size for x, _ in ops]
        return Recognition(CYCLE_WEDGES, predict_cycle_wedges(ms), {"cycles": ms})

    if kinds == ["C", "P"]:
        (c, _), (p, k) = sorted(ops, key=lambda op: op[0].kind)
        params = CycleWedgePathParams(n=c.size, m=p.size, k=k)
        return Recognition(
            CYCLE_WEDGE_PATH,
            predict_cycle_wedge_path(params),
            {"n": c.size, "m": p.size, "k": k},
        )

    if kinds == ["P"] * len(ops) and all(_is_terminal(x, i) for x, i in ops):
        ms = [x.size for x, _ in ops]
        pred = predict_terminal_path_wedge(ms)
        # the fold derivation is the prediction; the case formula rides along
        return Recognition(
            TERMINAL_PATHS,
            pred.fold_answer,
            {
                "arms": ms,
                "case_formula": str(pred.case_formula),
                "discrepancy": pred.discrepancy,
            },
        )

    if kinds == ["P", "P"]:
        (p, i), (q, j) = ops
        if not _is_terminal(p, i):
            (p, i), (q, j) = (q, j), (p, i)
        if _is_terminal(p, i):
            return Recognition(
                PATH_WEDGE_PATH,
                predict_path_wedge_path(p.size, q.size, j),
                {"m": p.size, "n": q.size, "l": j},
            )
    return Recognition(None, UNKNOWN_TYPE)


def wedge_point_index(e: Expr) -> int | None:
    """0-based index of the wedge point in :func:`build_graph` numbering."""
    if isinstance(e, Wedge):
        return e.operands[0][1] - 1
    return None
