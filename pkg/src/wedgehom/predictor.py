"""Closed-form homotopy types of independence complexes of path/cycle wedges.

Every prediction is assembled from the path formula

    I(P_m) ≃ S^{k-1} (m = 3k),  pt (m = 3k+1),  S^k (m = 3k+2)

with join, suspension and wedge sum, so the residue tables for the mixed
families are consequences rather than hard-coded data.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .collapse import CollapseVerdict, is_collapsible
from .complex import DEFAULT_MAX_FACES, f_vector, independence_complex
from .errors import InvalidParameterError
from .graph import Graph
from .homology import (
    DEFAULT_SNF_LIMIT,
    ConsistencyReport,
    HomologyProfile,
    compare_profiles,
    profile_of_type,
    reduced_homology,
)
from .homotopy import (
    EMPTY_SPHERE,
    POINT,
    HomotopyType,
    ht_join,
    ht_suspend,
    ht_wedge,
    sphere,
)


def predict_path(m: int) -> HomotopyType:
    if m < 0:
        raise InvalidParameterError("path length must be non-negative")
    k, r = divmod(m, 3)
    if r == 0:
        return sphere(k - 1)
    if r == 1:
        return POINT
    return sphere(k)


def predict_cycle(n: int) -> HomotopyType:
    if n < 3:
        raise InvalidParameterError(f"cycle needs at least 3 vertices, got {n}")
    k, r = divmod(n, 3)
    if r == 0:
        return ht_wedge(sphere(k - 1), sphere(k - 1))
    if r == 1:
        return sphere(k - 1)
    return sphere(k)


def _segment(length: int) -> HomotopyType:
    # an empty vertex segment (length <= 0) contributes the join unit
    return predict_path(max(length, 0))


def predict_path_wedge_path(m: int, n: int, l: int) -> HomotopyType:
    """P_m glued at its end vertex ``a_m`` to vertex ``b_l`` of P_n (1-based)."""
    if m < 1 or n < 1:
        raise InvalidParameterError("both paths need at least one vertex")
    if not 1 <= l <= n:
        raise InvalidParameterError(f"base vertex {l} outside 1..{n}")
    if l in (1, n):
        return predict_path(m + n - 1)
    if m >= 4:
        # fold a_1 into a_3: strips an S^0 factor off the P_m arm
        return ht_join(sphere(0), predict_path_wedge_path(m - 3, n, l))
    if m == 1:
        return predict_path(n)
    if m == 2:
        return ht_join(predict_path(l - 2), predict_path(n - l + 2))
    return ht_join(sphere(0), predict_path(l - 1), predict_path(n - l))


def cycle_wedges_deletion(ms) -> HomotopyType:
    """Type of del(a) for a wedge of cycles at a: join of I(P_{m_i - 1})."""
    return ht_join(*(predict_path(m - 1) for m in ms))


def cycle_wedges_link(ms) -> HomotopyType:
    """Type of lk(a): removing a and its two neighbours leaves P_{m_i - 3} per cycle."""
    return ht_join(*(_segment(m - 3) for m in ms))


def predict_cycle_wedges(ms) -> HomotopyType:
    """Wedge of cycles C_{m_1}, ..., C_{m_k} at one common vertex."""
    ms = list(ms)
    if not ms:
        raise InvalidParameterError("need at least one cycle")
    if any(m < 3 for m in ms):
        raise InvalidParameterError("every cycle needs at least 3 vertices")
    if len(ms) == 1:
        return predict_cycle(ms[0])
    return ht_wedge(cycle_wedges_deletion(ms), ht_suspend(cycle_wedges_link(ms)))


@dataclass(frozen=True)
class CycleWedgePathParams:
    """C_n glued at ``a_1`` to vertex ``b_k`` of P_m (1-based).

    ``a, b, c`` are the quotients in ``n = 3a + i``, ``k = 3b + j`` and
    ``m - k = 3c + l``; ``alpha = a + b + c``.
    """

    n: int
    m: int
    k: int

    def __post_init__(self):
        if self.n < 3:
            raise InvalidParameterError("cycle needs at least 3 vertices")
        if not 1 <= self.k <= self.m:
            raise InvalidParameterError(f"base vertex {self.k} outside 1..{self.m}")

    @property
    def a(self) -> int:
        return self.n // 3

    @property
    def b(self) -> int:
        return self.k // 3

    @property
    def c(self) -> int:
        return (self.m - self.k) // 3

    @property
    def alpha(self) -> int:
        return self.a + self.b + self.c

    @property
    def residues(self) -> tuple[int, int, int]:
        return self.n % 3, self.k % 3, (self.m - self.k) % 3


def cycle_wedge_path_deletion(params: CycleWedgePathParams) -> HomotopyType:
    p = params
    return ht_join(predict_path(p.n - 1), _segment(p.k - 1), _segment(p.m - p.k))


def cycle_wedge_path_link(params: CycleWedgePathParams) -> HomotopyType:
    p = params
    return ht_join(_segment(p.n - 3), _segment(p.k - 2), _segment(p.m - p.k - 1))


def predict_cycle_wedge_path(params: CycleWedgePathParams) -> HomotopyType:
    return ht_wedge(
        cycle_wedge_path_deletion(params), ht_suspend(cycle_wedge_path_link(params))
    )


@dataclass(frozen=True)
class TerminalWedgePrediction:
    """Two answers for a terminal wedge of paths.

    ``case_formula`` follows the four-case closed form (some arm ≡ 0 mod 3;
    all ≡ 1; all ≡ 2; a mix of 1 and 2 giving ``S^{Σl - 1}``).
    ``fold_answer`` follows the fold reduction arm by arm. ``discrepancy``
    is set when they differ; the homology oracle decides which is right.
    """

    case_formula: HomotopyType
    fold_answer: HomotopyType

    @property
    def discrepancy(self) -> bool:
        return self.case_formula != self.fold_answer


def _terminal_zero_arm(ms: list[int]) -> HomotopyType:
    first = next(i for i, m in enumerate(ms) if m % 3 == 0)
    factors = [sphere(0)] * (ms[first] // 3)
    factors += [predict_path(m - 1) for i, m in enumerate(ms) if i != first]
    return ht_join(*factors)


def predict_terminal_path_wedge(ms) -> TerminalWedgePrediction:
    """Terminal wedge of P_{m_1}, ..., P_{m_k}: every arm ends at the wedge point."""
    ms = list(ms)
    if len(ms) < 2:
        raise InvalidParameterError("a terminal wedge needs at least two paths")
    if any(m < 1 for m in ms):
        raise InvalidParameterError("every path needs at least one vertex")
    ls = [(m - 1) // 3 if m % 3 == 1 else (m - 2) // 3 for m in ms]

    if any(m % 3 == 0 for m in ms):
        formula = _terminal_zero_arm(ms)
    elif all(m % 3 == 1 for m in ms):
        formula = POINT
    elif all(m % 3 == 2 for m in ms):
        formula = sphere(sum(ls))
    else:
        formula = sphere(sum(ls) - 1)

    # folding from each free end strips P_3 blocks (one S^0 each): arms
    # ≡ 1 vanish into the wedge point, arms ≡ 2 leave a pendant vertex
    if any(m % 3 == 0 for m in ms):
        derived = _terminal_zero_arm(ms)
    elif all(m % 3 == 1 for m in ms):
        derived = POINT
    else:
        # the pendants form a star around the wedge point, which folds to an edge
        derived = sphere(sum(ls))
    return TerminalWedgePrediction(formula, derived)


@dataclass
class VerificationReport:
    graph: Graph
    predicted: HomotopyType
    profile: HomologyProfile
    consistency: ConsistencyReport
    f_vector: list
    collapse: CollapseVerdict | None = None
    seconds: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def match(self) -> bool:
        return self.consistency.consistent

    @property
    def mismatched_dimensions(self) -> tuple:
        return self.consistency.mismatched_dimensions


def verify(
    g: Graph,
    t: HomotopyType,
    *,
    max_faces: int = DEFAULT_MAX_FACES,
    snf_limit: int = DEFAULT_SNF_LIMIT,
    check_collapse: bool = False,
    collapse_budget: int | None = None,
    cross_check: bool = False,
) -> VerificationReport:
    """Compare the oracle homology of ``I(g)`` with the prediction ``t``."""
    if t.is_unknown:
        raise InvalidParameterError("cannot verify an unknown prediction")
    start = time.perf_counter()
    k = independence_complex(g, max_faces=max_faces)
    profile = reduced_homology(k, snf_limit=snf_limit, cross_check=cross_check)
    consistency = compare_profiles(profile, profile_of_type(t))
    report = VerificationReport(g, t, profile, consistency, f_vector(k))
    if not profile.torsion_checked:
        report.notes.append("torsion unchecked: homology computed over a prime field")
    if check_collapse:
        report.collapse = is_collapsible(k, collapse_budget)
        if report.collapse and not profile.is_zero:
            raise AssertionError("collapsible complex with non-zero reduced homology")
    report.seconds = time.perf_counter() - start
    return report


__all__ = [
    "CycleWedgePathParams",
    "EMPTY_SPHERE",
    "TerminalWedgePrediction",
    "VerificationReport",
    "cycle_wedge_path_deletion",
    "cycle_wedge_path_link",
    "cycle_wedges_deletion",
    "cycle_wedges_link",
    "predict_cycle",
    "predict_cycle_wedge_path",
    "predict_cycle_wedges",
    "predict_path",
    "predict_path_wedge_path",
    "predict_terminal_path_wedge",
    "verify",
]
