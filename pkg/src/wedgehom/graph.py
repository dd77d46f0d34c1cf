"""Finite simple graphs: paths, cycles, wedges and disjoint unions.

Vertices are dense indices ``0..n-1``. Adjacency is cached as one integer
bitmask per vertex, so a graph (and every face of its independence complex)
is limited to :data:`MAX_VERTICES` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidParameterError, SizeLimitError

MAX_VERTICES = 64


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``. ``labels``
    optionally names each vertex (wedges label arms as ``a_j^i`` and the
    wedge point as ``a``).
    """

    vertex_count: int
    edges: frozenset = frozenset()
    labels: tuple | None = None
    adjacency: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise InvalidParameterError("vertex_count must be non-negative")
        if n > MAX_VERTICES:
            raise SizeLimitError(
                f"graph has {n} vertices; the bitmask representation allows at most {MAX_VERTICES}"
            )
        normalized = set()
        adj = [0] * n
        for u, v in self.edges:
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            u, v = min(u, v), max(u, v)
            normalized.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "edges", frozenset(normalized))
        object.__setattr__(self, "adjacency", tuple(adj))
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != n:
                raise InvalidParameterError("labels must name every vertex")
            object.__setattr__(self, "labels", labels)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def neighbor_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self.adjacency[v]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.vertex_count):
            raise InvalidParameterError(
                f"vertex {v!r} is not in [0, {self.vertex_count})"
            )

    def __len__(self) -> int:
        return self.vertex_count


def path(m: int) -> Graph:
    """Path P_m on vertices ``0..m-1``."""
    if m < 0:
        raise InvalidParameterError("path length must be non-negative")
    return Graph(m, frozenset((i, i + 1) for i in range(m - 1)))


def cycle(n: int) -> Graph:
    """Cycle C_n; ``n >= 3`` since shorter cycles are not simple."""
    if n < 3:
        raise InvalidParameterError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


@dataclass(frozen=True)
class WedgeSpec:
    """Ordered graphs with one base vertex each, to be glued at a single point."""

    parts: tuple

    def __post_init__(self):
        parts = tuple((g, b) for g, b in self.parts)
        if len(parts) < 2:
            raise InvalidParameterError("a wedge needs at least two parts")
        for i, (g, b) in enumerate(parts):
            if not isinstance(g, Graph):
                raise InvalidParameterError(f"part {i} is not a Graph")
            if not (isinstance(b, int) and 0 <= b < g.vertex_count):
                raise InvalidParameterError(
                    f"base vertex {b!r} of part {i} is outside [0, {g.vertex_count})"
                )
        object.__setattr__(self, "parts", parts)


def wedge(spec: WedgeSpec | Sequence[tuple[Graph, int]]) -> Graph:
    """Glue the parts of ``spec`` by identifying all base vertices.

    Vertices are numbered arm by arm, each arm in its original order; the wedge
    point takes the index of its first occurrence (the base of the first arm).
    So ``wedge([(path(3), 2), (path(4), 0)])`` is literally ``path(6)``.
    """
    if not isinstance(spec, WedgeSpec):
        spec = WedgeSpec(tuple(spec))
    total = sum(g.vertex_count for g, _ in spec.parts) - (len(spec.parts) - 1)
    if total > MAX_VERTICES:
        raise SizeLimitError(f"wedge would have {total} vertices (cap {MAX_VERTICES})")

    edges = set()
    labels: list[str] = []
    point = None
    for arm, (g, base) in enumerate(spec.parts, start=1):
        index = {}
        for v in range(g.vertex_count):
            if v == base:
                if point is None:
                    point = len(labels)
                    labels.append("a")
                index[v] = point
            else:
                index[v] = len(labels)
                labels.append(f"a_{v + 1}^{arm}")
        edges.update((index[u], index[v]) for u, v in g.edges)
    return Graph(total, frozenset(edges), tuple(labels))


def wedge_point(spec: WedgeSpec | Sequence[tuple[Graph, int]]) -> int:
    """Index of the wedge point in ``wedge(spec)``."""
    if not isinstance(spec, WedgeSpec):
        spec = WedgeSpec(tuple(spec))
    return spec.parts[0][1]


def neighborhood(g: Graph, v: int) -> set[int]:
    return set(_bits(g.neighbor_mask(v)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Place ``g2`` after ``g1``; indices of ``g2`` shift by ``len(g1)``."""
    shift = g1.vertex_count
    edges = set(g1.edges) | {(u + shift, v + shift) for u, v in g2.edges}
    labels = None
    if g1.labels is not None or g2.labels is not None:
        labels = tuple(g1.label(v) for v in range(shift)) + tuple(
            g2.label(v) for v in range(g2.vertex_count)
        )
    return Graph(shift + g2.vertex_count, frozenset(edges), labels)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on ``vertices`` (kept in increasing order), labels carried over."""
    keep = sorted(set(vertices))
    for v in keep:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(keep)}
    edges = frozenset(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    return Graph(len(keep), edges, tuple(g.label(v) for v in keep))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    drop = set(vertices)
    for v in drop:
        g._check_vertex(v)
    return induced_subgraph(g, (v for v in range(g.vertex_count) if v not in drop))


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the components, ordered by smallest vertex."""
    seen = 0
    components = []
    for start in range(g.vertex_count):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            grown = 0
            for v in _bits(frontier):
                grown |= g.adjacency[v]
            frontier = grown & ~comp
            comp |= frontier
        seen |= comp
        components.append(list(_bits(comp)))
    return components


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def chromatic_number(g: Graph, max_vertices: int = 12) -> int:
    """Smallest k admitting a proper k-colouring, by exhaustive backtracking."""
    n = g.vertex_count
    if n == 0:
        raise InvalidParameterError("chromatic number of the empty graph is undefined")
    if n > max_vertices:
        raise SizeLimitError(
            f"exhaustive colouring refused: {n} vertices exceeds bound {max_vertices}"
        )
    # colour high-degree vertices first; prunes the search a lot
    order = sorted(range(n), key=lambda v: -g.degree(v))
    for k in range(1, n + 1):
        if _colourable(g, order, k):
            return k
    raise AssertionError("unreachable: n colours always suffice")


def _colourable(g: Graph, order: list[int], k: int) -> bool:
    colour = [-1] * g.vertex_count

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {colour[u] for u in _bits(g.adjacency[v])}
        # symmetry breaking: never open more than one new colour at a time
        for c in range(min(k, used + 1)):
            if c not in taken:
                colour[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
                colour[v] = -1
        return False

    return place(0, 0)


def is_isomorphic(g: Graph, h: Graph, max_vertices: int = 10) -> bool:
    """Brute-force isomorphism test by backtracking over vertex maps."""
    n = g.vertex_count
    if n != h.vertex_count or len(g.edges) != len(h.edges):
        return False
    if n > max_vertices:
        raise SizeLimitError(f"isomorphism search refused above {max_vertices} vertices")
    if sorted(map(g.degree, range(n))) != sorted(map(h.degree, range(n))):
        return False
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or h.degree(w) != g.degree(v):
                continue
            if any(
                (g.adjacency[v] >> u & 1) != (h.adjacency[w] >> image[u] & 1)
                for u in range(v)
            ):
                continue
            image[v], used[w] = w, True
            if extend(v + 1):
                return True
            image[v], used[w] = -1, False
        return False

    return extend(0)


def canonical_form(g: Graph, max_vertices: int = 10) -> tuple:
    """Lexicographically least sorted edge list over all relabelings.

    Only permutations that list vertices by non-increasing degree are tried,
    which keeps the search small for sparse graphs.
    """
    n = g.vertex_count
    if n > max_vertices:
        raise SizeLimitError(f"canonical form refused above {max_vertices} vertices")
    degrees = sorted((g.degree(v) for v in range(n)), reverse=True)
    best = None
    image = [-1] * n
    used = [False] * n

    def extend(pos: int) -> None:
        nonlocal best
        if pos == n:
            form = tuple(sorted((min(image[u], image[v]), max(image[u], image[v])) for u, v in g.edges))
            if best is None or form < best:
                best = form
            return
        for v in range(n):
            if not used[v] and g.degree(v) == degrees[pos]:
                used[v], image[v] = True, pos
                extend(pos + 1)
                used[v], image[v] = False, -1

    extend(0)
    return (n, best)
