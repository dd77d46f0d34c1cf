"""Fold reductions and link/deletion splitting of independence complexes.

If ``N(v) ⊆ N(w)`` for distinct vertices, deleting ``w`` does not change the
homotopy type of the independence complex. Disconnected graphs give joins,
an isolated vertex makes the complex a cone, and a lone edge contributes an
``S^0`` join factor. :func:`reduce_fully` applies these rules until none fits.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Union

from .collapse import CollapseVerdict, is_collapsible
from .complex import SimplicialComplex, deletion, independence_complex, link
from .errors import InvalidParameterError
from .graph import Graph, _bits, connected_components, delete_vertices
from .homotopy import POINT, UNKNOWN_TYPE, HomotopyType, ht_join, sphere


@dataclass(frozen=True)
class FoldStep:
    """Deletion of ``removed`` justified by ``N(kept) ⊆ N(removed)``.

    Indices refer to the graph just before the step; labels are stable.
    """

    kept: int
    removed: int
    kept_neighbors: frozenset
    removed_neighbors: frozenset
    kept_label: str = ""
    removed_label: str = ""

    def witness_holds(self, g: Graph) -> bool:
        return (
            self.kept != self.removed
            and set(_bits(g.adjacency[self.kept])) == set(self.kept_neighbors)
            and set(_bits(g.adjacency[self.removed])) == set(self.removed_neighbors)
            and self.kept_neighbors <= self.removed_neighbors
        )

    def describe(self) -> str:
        return f"fold {self.kept_label}->{self.removed_label}: delete {self.removed_label}"


@dataclass(frozen=True)
class ComponentSplit:
    """A component split off as a join factor (``S^0`` for an edge, pt for a vertex)."""

    vertices: tuple
    labels: tuple
    factor: HomotopyType

    def describe(self) -> str:
        return f"split {{{', '.join(self.labels)}}} as {self.factor}"


Step = Union[FoldStep, ComponentSplit]


@dataclass
class ReductionTrace:
    """Certificate of a fold reduction run.

    ``I(source) ≃ join(join_factors) * I(residual)``; a ``pt`` factor makes
    the whole join contractible.
    """

    source: Graph
    steps: list = field(default_factory=list)
    join_factors: list = field(default_factory=list)
    residual: Graph = None

    @property
    def contractible(self) -> bool:
        return any(f.is_contractible for f in self.join_factors)

    @property
    def fold_count(self) -> int:
        return sum(isinstance(s, FoldStep) for s in self.steps)

    def factor_type(self) -> HomotopyType:
        return ht_join(*self.join_factors)

    def homotopy_type(self) -> HomotopyType:
        """Closed form when the residual is empty or a factor is contractible."""
        if self.contractible:
            return POINT
        if self.residual.vertex_count == 0:
            return self.factor_type()
        return UNKNOWN_TYPE

    def replay(self) -> Graph:
        """Re-apply every step to the source graph, checking each witness."""
        g = self.source
        for step in self.steps:
            if isinstance(step, FoldStep):
                if not step.witness_holds(g):
                    raise AssertionError(f"witness fails at {step.describe()}")
                g = delete_vertices(g, [step.removed])
            else:
                g = delete_vertices(g, step.vertices)
        return g

    def summary(self) -> dict:
        return {
            "folds": self.fold_count,
            "steps": [s.describe() for s in self.steps],
            "join_factors": [str(f) for f in self.join_factors],
            "residual_vertices": self.residual.vertex_count,
            "residual_edges": len(self.residual.edges),
            "type": str(self.homotopy_type()),
        }


def find_fold(g: Graph) -> tuple[int, int] | None:
    """Lexicographically least ``(v, w)`` with ``∅ ≠ N(v) ⊆ N(w)``, ``v ≠ w``."""
    adj = g.adjacency
    for v in range(g.vertex_count):
        nv = adj[v]
        if not nv:
            continue
        for w in range(g.vertex_count):
            if w != v and nv & ~adj[w] == 0:
                return v, w
    return None


def apply_fold(g: Graph, v: int, w: int) -> Graph:
    g._check_vertex(v)
    g._check_vertex(w)
    if v == w or g.adjacency[v] & ~g.adjacency[w]:
        raise InvalidParameterError(f"N({v}) is not contained in N({w})")
    return delete_vertices(g, [w])


def _fold_step(g: Graph, v: int, w: int) -> FoldStep:
    return FoldStep(
        v,
        w,
        frozenset(_bits(g.adjacency[v])),
        frozenset(_bits(g.adjacency[w])),
        g.label(v),
        g.label(w),
    )


def reduce_fully(g: Graph) -> ReductionTrace:
    """Fold until no fold applies, splitting off edges and isolated vertices.

    Stops early once an isolated vertex appears (the complex is a cone).
    """
    trace = ReductionTrace(source=g)
    current = g
    while True:
        # split one small component at a time so recorded indices stay valid
        while comp := next((c for c in connected_components(current) if len(c) <= 2), None):
            factor = POINT if len(comp) == 1 else sphere(0)
            trace.steps.append(
                ComponentSplit(tuple(comp), tuple(current.label(v) for v in comp), factor)
            )
            trace.join_factors.append(factor)
            current = delete_vertices(current, comp)
        if trace.contractible:
            break
        fold = find_fold(current)
        if fold is None:
            break
        trace.steps.append(_fold_step(current, *fold))
        current = apply_fold(current, *fold)
    trace.residual = current
    return trace


class DecompositionVerdict(enum.Enum):
    LINK_CONTRACTIBLE = "link collapsible"
    DELETION_CONTRACTIBLE = "deletion collapsible"
    MAXIMAL_FACE = "deletion minus a maximal face collapsible"
    HOMOLOGY_ONLY = "homology only"


@dataclass(frozen=True)
class MaximalSimplexWitness:
    """Maximal face of the deletion, absent from the link, whose removal
    leaves a collapsible complex."""

    sigma: int
    vertex: int
    evidence: CollapseVerdict

    def vertices(self) -> list[int]:
        return list(_bits(self.sigma))


@dataclass
class Decomposition:
    vertex: int
    complex: SimplicialComplex
    deletion: SimplicialComplex
    link: SimplicialComplex
    verdict: DecompositionVerdict
    witness: MaximalSimplexWitness | None = None
    candidates_tried: int = 0

    @property
    def warning(self) -> str | None:
        if self.verdict is DecompositionVerdict.HOMOLOGY_ONLY:
            return (
                "no contractibility certificate found; K ≃ del ∨ Σ lk is assumed and "
                "checked at homology level only"
            )
        return None


def del_link_decompose(
    g: Graph,
    v: int,
    step_budget: int | None = None,
    preferred: Iterable[int] = (),
    max_candidates: int = 64,
) -> Decomposition:
    """Split ``I(g)`` at vertex ``v`` and look for a certificate that the link
    is contractible inside the deletion.

    Tried in order: the link collapses; the deletion collapses (any map into
    a contractible space is null-homotopic); the deletion minus one maximal
    face that is not in the link collapses (``preferred`` faces first).
    """
    k = independence_complex(g)
    dl = deletion(k, v)
    lk = link(k, v)
    result = Decomposition(v, k, dl, lk, DecompositionVerdict.HOMOLOGY_ONLY)
    if len(lk.faces) > 1 and is_collapsible(lk, step_budget):
        result.verdict = DecompositionVerdict.LINK_CONTRACTIBLE
        return result
    if is_collapsible(dl, step_budget):
        result.verdict = DecompositionVerdict.DELETION_CONTRACTIBLE
        return result

    preferred = [s for s in preferred if s in dl.maximal_faces and s not in lk.faces]
    others = [s for s in dl.maximal_faces if s not in lk.faces and s not in preferred]
    for sigma in (preferred + others)[:max_candidates]:
        result.candidates_tried += 1
        verdict = is_collapsible(dl.without_face(sigma), step_budget)
        if verdict:
            result.verdict = DecompositionVerdict.MAXIMAL_FACE
            result.witness = MaximalSimplexWitness(sigma, v, verdict)
            break
    return result


def alternating_face(g: Graph, point: int) -> int:
    """Candidate witness for wedges at ``point``: walk each arm of ``g - point``
    from its smallest neighbour of ``point`` and take positions 1, 3, 6, 9, ...
    (1-based), plus the last vertex when it is not dominated.

    The result is a maximal independent set of ``g - point`` that meets the
    neighbourhood of ``point``, hence a maximal face of the deletion missing
    from the link.
    """
    others = [u for u in range(g.vertex_count) if u != point]
    rest = delete_vertices(g, [point])
    face = 0
    for comp in connected_components(rest):
        arm = {others[i] for i in comp}
        ends = sorted(u for u in arm if g.adjacency[point] >> u & 1)
        if not ends:
            continue
        order = _walk(g, ends[0], arm)
        length = len(order)
        positions = [1] + list(range(3, length + 1, 3))
        if length - positions[-1] >= 2:
            positions.append(length)
        for p in positions:
            face |= 1 << order[p - 1]
    return face


def _walk(g: Graph, start: int, allowed: set[int]) -> list[int]:
    order = [start]
    seen = {start}
    while True:
        nxt = sorted(u for u in _bits(g.adjacency[order[-1]]) if u in allowed and u not in seen)
        if not nxt:
            return order
        order.append(nxt[0])
        seen.add(nxt[0])
