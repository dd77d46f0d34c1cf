"""Greedy elementary collapses as a certificate of contractibility."""

from __future__ import annotations

import enum
import heapq

from .complex import SimplicialComplex
from .errors import InvalidParameterError
from .graph import _bits


class CollapseVerdict(enum.Enum):
    CERTIFIED = "collapsible"
    UNKNOWN = "unknown"

    def __bool__(self) -> bool:
        return self is CollapseVerdict.CERTIFIED


def default_budget(k: SimplicialComplex) -> int:
    return 10 * len(k.faces)


def is_collapsible(k: SimplicialComplex, step_budget: int | None = None) -> CollapseVerdict:
    """Try to collapse ``k`` down to a single vertex.

    A free face is a non-empty face with exactly one proper coface; removing
    it together with that coface is an elementary collapse. Free faces are
    taken smallest first (by dimension, then bitmask). ``CERTIFIED`` proves
    contractibility; ``UNKNOWN`` proves nothing, since greedy collapsing can
    get stuck on collapsible complexes too.
    """
    if step_budget is None:
        step_budget = default_budget(k)
    if step_budget <= 0:
        raise InvalidParameterError("step budget must be positive")

    faces = set(k.faces)
    support = k.support
    # number of cofaces one dimension up; "free" means exactly one
    up = {}
    for f in faces:
        if f:
            up[f] = sum(1 for v in _bits(support & ~f) if f | (1 << v) in faces)
    heap = [(f.bit_count(), f) for f, c in up.items() if c == 1]
    heapq.heapify(heap)

    steps = 0
    while heap and steps < step_budget:
        _, tau = heapq.heappop(heap)
        if tau not in faces or up.get(tau) != 1:
            continue
        sigma = next(tau | (1 << v) for v in _bits(support & ~tau) if tau | (1 << v) in faces)
        faces.discard(tau)
        faces.discard(sigma)
        del up[tau], up[sigma]
        steps += 1
        for facet in _facets(sigma):
            if facet != tau and facet:
                up[facet] -= 1
                if up[facet] == 1:
                    heapq.heappush(heap, (facet.bit_count(), facet))
        for facet in _facets(tau):
            if facet:
                up[facet] -= 1
                if up[facet] == 1:
                    heapq.heappush(heap, (facet.bit_count(), facet))

    if len(faces) == 2 and all(f == 0 or f.bit_count() == 1 for f in faces):
        return CollapseVerdict.CERTIFIED
    return CollapseVerdict.UNKNOWN


def _facets(f: int):
    m = f
    while m:
        low = m & -m
        yield f ^ low
        m ^= low
