"""Abstract simplicial complexes stored as explicit sets of bitmask faces.

A face is an ``int`` whose set bits are its vertices. Every complex contains
the empty face ``0``; the complex ``{0}`` is the join unit (the (-1)-sphere).
Ambient vertices that are not 0-faces are allowed, so link and deletion keep
the original vertex indices.
"""

from __future__ import annotations

from collections import Counter
from functools import cached_property
from typing import Iterable

from .errors import InvalidParameterError, SizeLimitError
from .graph import MAX_VERTICES, Graph, _bits

DEFAULT_MAX_FACES = 1 << 20


class SimplicialComplex:
    """Downward-closed family of vertex subsets of ``range(vertex_count)``.

    Instances are immutable. Construct with :meth:`from_faces` (validates
    downward closure) or :meth:`from_maximal_faces`.
    """

    def __init__(self, vertex_count: int, faces: Iterable[int], *, validate: bool = True):
        if vertex_count > MAX_VERTICES:
            raise SizeLimitError(f"complex on {vertex_count} vertices exceeds cap {MAX_VERTICES}")
        faces = frozenset(faces) | {0}
        if validate:
            limit = 1 << vertex_count
            for f in faces:
                if f < 0 or f >= limit:
                    raise InvalidParameterError(f"face {f:#x} uses a vertex outside the ambient set")
                for b in _bits(f):
                    if f ^ (1 << b) not in faces:
                        raise InvalidParameterError(
                            f"faces are not downward closed: {sorted(_bits(f))} lacks a facet"
                        )
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "faces", faces)

    def __setattr__(self, name, value):
        if name in ("vertex_count", "faces"):
            raise AttributeError("SimplicialComplex is immutable")
        object.__setattr__(self, name, value)

    @classmethod
    def from_faces(cls, vertex_count: int, faces: Iterable[int]) -> SimplicialComplex:
        return cls(vertex_count, faces)

    @classmethod
    def from_maximal_faces(
        cls, vertex_count: int, maximal: Iterable[Iterable[int] | int], max_faces: int = DEFAULT_MAX_FACES
    ) -> SimplicialComplex:
        """Complex generated by the given faces (vertex lists or bitmasks)."""
        faces = {0}
        for m in maximal:
            mask = m if isinstance(m, int) else sum(1 << v for v in set(m))
            sub = mask
            # enumerate all submasks of mask
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & mask
            if len(faces) > max_faces:
                raise SizeLimitError(f"more than {max_faces} faces")
        return cls(vertex_count, faces, validate=False)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.faces == other.faces

    def __hash__(self):
        return hash((self.vertex_count, self.faces))

    def __len__(self) -> int:
        return len(self.faces)

    def __contains__(self, face) -> bool:
        return _as_mask(face) in self.faces

    def __repr__(self):
        return (
            f"SimplicialComplex(vertex_count={self.vertex_count}, faces={len(self.faces)}, "
            f"dim={self.dimension})"
        )

    @property
    def dimension(self) -> int:
        return max(f.bit_count() for f in self.faces) - 1

    @cached_property
    def support(self) -> int:
        """Bitmask of the vertices that are 0-faces."""
        mask = 0
        for v in range(self.vertex_count):
            if 1 << v in self.faces:
                mask |= 1 << v
        return mask

    @cached_property
    def maximal_faces(self) -> tuple[int, ...]:
        faces = self.faces
        free = []
        for f in faces:
            outside = self.support & ~f
            if not any(f | (1 << v) in faces for v in _bits(outside)):
                free.append(f)
        return tuple(sorted(free, key=lambda f: (f.bit_count(), f)))

    def faces_of_dimension(self, d: int) -> list[int]:
        return sorted(f for f in self.faces if f.bit_count() == d + 1)

    def face_lists(self) -> list[list[int]]:
        """Faces as sorted vertex lists, ordered by dimension then bitmask."""
        return [list(_bits(f)) for f in sorted(self.faces, key=lambda f: (f.bit_count(), f))]

    def without_face(self, sigma: int) -> SimplicialComplex:
        """Remove the single maximal face ``sigma`` (keeps downward closure)."""
        if sigma not in self.maximal_faces:
            raise InvalidParameterError("only a maximal face can be removed on its own")
        return SimplicialComplex(self.vertex_count, self.faces - {sigma}, validate=False)


def _as_mask(face) -> int:
    return face if isinstance(face, int) else sum(1 << v for v in face)


def independence_complex(g: Graph, max_faces: int = DEFAULT_MAX_FACES) -> SimplicialComplex:
    """All independent vertex sets of ``g``, the empty set included."""
    faces = [0]
    for v in range(g.vertex_count):
        blocked = g.adjacency[v]
        bit = 1 << v
        # sets using only vertices < v, extended by v where allowed
        faces += [f | bit for f in faces if not f & blocked]
        if len(faces) > max_faces:
            raise SizeLimitError(
                f"independence complex exceeds {max_faces} faces after {v + 1} vertices"
            )
    return SimplicialComplex(g.vertex_count, faces, validate=False)


def simplex(n: int) -> SimplicialComplex:
    """Full simplex on ``n`` vertices (``simplex(0)`` is ``{∅}``)."""
    return SimplicialComplex(n, range(1 << n), validate=False)


def empty_complex(n: int = 0) -> SimplicialComplex:
    """The complex ``{∅}`` on ``n`` ambient vertices."""
    return SimplicialComplex(n, (), validate=False)


def points(n: int) -> SimplicialComplex:
    """``n`` isolated points."""
    return SimplicialComplex(n, (1 << i for i in range(n)), validate=False)


def link(k: SimplicialComplex, v: int) -> SimplicialComplex:
    bit = 1 << v
    if bit not in k.faces:
        raise InvalidParameterError(f"vertex {v} is not a face of the complex")
    faces = k.faces
    return SimplicialComplex(
        k.vertex_count, (f for f in faces if not f & bit and f | bit in faces), validate=False
    )


def deletion(k: SimplicialComplex, v: int) -> SimplicialComplex:
    bit = 1 << v
    return SimplicialComplex(k.vertex_count, (f for f in k.faces if not f & bit), validate=False)


def join(k: SimplicialComplex, l: SimplicialComplex, max_faces: int = DEFAULT_MAX_FACES) -> SimplicialComplex:
    """Join on the disjoint union of vertex sets; ``l`` is shifted past ``k``."""
    n = k.vertex_count + l.vertex_count
    if n > MAX_VERTICES:
        raise SizeLimitError(f"join would have {n} vertices (cap {MAX_VERTICES})")
    if len(k) * len(l) > max_faces:
        raise SizeLimitError(f"join would have {len(k) * len(l)} faces (cap {max_faces})")
    shift = k.vertex_count
    shifted = [t << shift for t in l.faces]
    return SimplicialComplex(n, (s | t for s in k.faces for t in shifted), validate=False)


def suspension(k: SimplicialComplex) -> SimplicialComplex:
    return join(k, points(2))


def cone(k: SimplicialComplex) -> SimplicialComplex:
    return join(k, points(1))


def f_vector(k: SimplicialComplex) -> list[int]:
    """Entry ``i`` counts faces of dimension ``i - 1`` (entry 0 is the empty face)."""
    counts = Counter(f.bit_count() for f in k.faces)
    return [counts.get(i, 0) for i in range(max(counts) + 1)]


def euler_characteristic(k: SimplicialComplex) -> int:
    """Reduced Euler characteristic ``-f_{-1} + f_0 - f_1 + ...``."""
    return sum((-1) ** (i + 1) * c for i, c in enumerate(f_vector(k)))


def is_downward_closed(faces: Iterable[int]) -> bool:
    faces = set(faces)
    return 0 in faces and all(f ^ (1 << b) in faces for f in faces for b in _bits(f))
