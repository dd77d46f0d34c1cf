"""Reduced simplicial homology by exact elimination.

Boundary matrices are stored column-wise, one sparse column per face. Ranks
come from a lowest-pivot column reduction processed from the top dimension
down, skipping columns already known to be boundaries ("clearing"). Over the
integers every pivot met on independence complexes is a unit, which certifies
that the Smith normal form is all ones; if a non-unit pivot ever shows up the
reduced columns go through a full Smith normal form to extract torsion.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .complex import SimplicialComplex
from .errors import InvalidParameterError
from .homotopy import JOIN_IDENTITY, HomotopyType

INTEGERS = 0
DEFAULT_PRIME = 32003
# faces per dimension above which the integer route falls back to GF(32003)
DEFAULT_SNF_LIMIT = 200_000


def ring_name(ring: int) -> str:
    return "Z" if ring == INTEGERS else f"GF({ring})"


@dataclass
class ChainComplexData:
    """Augmented simplicial chain complex of a complex.

    ``bases[d]`` lists the ``d``-faces (bitmasks, ascending); ``columns[d][j]``
    maps row indices of ``bases[d-1]`` to the coefficient of the boundary of
    ``bases[d][j]``. ``bases[-1] == [0]`` is the empty face, so ``columns[0]``
    is the augmentation and the resulting homology is reduced.
    """

    bases: dict[int, list[int]]
    columns: dict[int, list[dict[int, int]]]

    @property
    def top_dimension(self) -> int:
        return max(self.bases)

    def matrix(self, d: int) -> np.ndarray:
        rows = len(self.bases.get(d - 1, []))
        cols = self.columns.get(d, [])
        m = np.zeros((rows, len(cols)), dtype=np.int64)
        for j, col in enumerate(cols):
            for i, c in col.items():
                m[i, j] = c
        return m


def boundary_matrices(k: SimplicialComplex) -> ChainComplexData:
    bases: dict[int, list[int]] = {}
    for f in k.faces:
        bases.setdefault(f.bit_count() - 1, []).append(f)
    for basis in bases.values():
        basis.sort()
    columns: dict[int, list[dict[int, int]]] = {}
    for d in range(0, max(bases) + 1):
        row_of = {f: i for i, f in enumerate(bases[d - 1])}
        cols = []
        for f in bases[d]:
            col = {}
            sign = 1
            m = f
            while m:
                low = m & -m
                col[row_of[f ^ low]] = sign
                sign = -sign
                m ^= low
            cols.append(col)
        columns[d] = cols
    return ChainComplexData(bases, columns)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) > 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _axpy(col: dict, factor: int, other: dict, modulus: int) -> None:
    """col -= factor * other, in place."""
    for k, v in other.items():
        nv = col.get(k, 0) - factor * v
        if modulus:
            nv %= modulus
        if nv:
            col[k] = nv
        else:
            col.pop(k, None)


def _combine(a: dict, x: int, b: dict, y: int) -> dict:
    out = {}
    for k in a.keys() | b.keys():
        v = x * a.get(k, 0) + y * b.get(k, 0)
        if v:
            out[k] = v
    return out


@dataclass
class _Reduction:
    ranks: dict[int, int] = field(default_factory=dict)
    # dimension -> reduced non-zero columns, kept only when a non-unit pivot appeared
    nonunit: dict[int, list[dict[int, int]]] = field(default_factory=dict)


def _reduce(chain: ChainComplexData, modulus: int) -> _Reduction:
    out = _Reduction()
    cleared: set[int] = set()
    for d in range(chain.top_dimension, -1, -1):
        pivots: dict[int, dict[int, int]] = {}
        unit_lows: set[int] = set()
        saw_nonunit = False
        for j, source in enumerate(chain.columns[d]):
            if j in cleared:
                continue
            col = dict(source)
            if modulus:
                col = {k: v % modulus for k, v in col.items()}
            while col:
                low = max(col)
                piv = pivots.get(low)
                if piv is None:
                    break
                p, c = piv[low], col[low]
                if modulus:
                    _axpy(col, c * pow(p, -1, modulus) % modulus, piv, modulus)
                elif c % p == 0:
                    _axpy(col, c // p, piv, 0)
                else:
                    # unimodular 2x2 column operation: pivot becomes gcd, col loses its low
                    g, x, y = _ext_gcd(p, c)
                    pivots[low] = _combine(piv, x, col, y)
                    col = _combine(col, p // g, piv, -(c // g))
            if col:
                low = max(col)
                pivots[low] = col
        for low, col in pivots.items():
            if modulus or abs(col[low]) == 1:
                unit_lows.add(low)
            else:
                saw_nonunit = True
        out.ranks[d] = len(pivots)
        if saw_nonunit:
            out.nonunit[d] = list(pivots.values())
        # a unit pivot in row `low` means face `low` of dim d-1 is a boundary
        # up to a unimodular change of basis, so its column is zero
        cleared = unit_lows
    return out


def _invariant_factors(columns: list[dict[int, int]]) -> list[int]:
    """Non-zero invariant factors of a sparse integer matrix given by columns."""
    cols = {j: dict(c) for j, c in enumerate(columns) if c}
    rows: dict[int, set[int]] = {}
    for j, c in cols.items():
        for i in c:
            rows.setdefault(i, set()).add(j)
    units = 0
    while True:
        pivot = None
        for j in sorted(cols, key=lambda j: len(cols[j])):
            for i, v in cols[j].items():
                if abs(v) == 1:
                    pivot = (i, j, v)
                    break
            if pivot:
                break
        if pivot is None:
            break
        r, c, u = pivot
        pc = cols.pop(c)
        for i in pc:
            rows[i].discard(c)
        for x in list(rows.get(r, ())):
            col = cols[x]
            factor = col[r] * u
            before = set(col)
            _axpy(col, factor, pc, 0)
            for i in before - set(col):
                rows[i].discard(x)
            for i in set(col) - before:
                rows.setdefault(i, set()).add(x)
            if not col:
                del cols[x]
        units += 1
    live_rows = sorted({i for c in cols.values() for i in c})
    if not live_rows:
        return [1] * units
    index = {i: n for n, i in enumerate(live_rows)}
    dense = [[0] * len(cols) for _ in live_rows]
    for n, col in enumerate(cols.values()):
        for i, v in col.items():
            dense[index[i]][n] = v
    return [1] * units + [d for d in smith_normal_form(dense) if d]


def smith_normal_form(matrix) -> list[int]:
    """Diagonal of the Smith normal form, ``min(rows, cols)`` entries.

    Exact elimination on Python integers, always pivoting on the entry of
    smallest absolute value. The result satisfies ``d_1 | d_2 | ...`` with
    zeros after the rank.
    """
    a = [[int(x) for x in row] for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    diag = []
    t = 0
    while t < min(nrows, ncols):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        _move_to(a, best, t)
        while True:
            p = a[t][t]
            for i in range(t + 1, nrows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, ncols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
            rest = [(i, t) for i in range(t + 1, nrows) if a[i][t]]
            rest += [(t, j) for j in range(t + 1, ncols) if a[t][j]]
            if rest:
                # remainders are smaller than the pivot: promote the smallest
                _move_to(a, min(rest, key=lambda ij: abs(a[ij[0]][ij[1]])), t)
                continue
            bad = next(
                (i for i in range(t + 1, nrows) for j in range(t + 1, ncols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag + [0] * (min(nrows, ncols) - len(diag))


def _move_to(a: list[list[int]], pos: tuple[int, int], t: int) -> None:
    i, j = pos
    a[t], a[i] = a[i], a[t]
    if j != t:
        for row in a:
            row[t], row[j] = row[j], row[t]


@dataclass(frozen=True, eq=False)
class HomologyProfile:
    """Reduced Betti numbers and torsion coefficients per dimension.

    Only non-zero Betti numbers and non-empty torsion lists are stored.
    ``torsion_checked`` is False when homology came from a prime field.
    """

    reduced_betti: dict = field(default_factory=dict)
    torsion: dict = field(default_factory=dict)
    ring: str = "Z"
    torsion_checked: bool = True

    def __post_init__(self):
        object.__setattr__(
            self, "reduced_betti", {d: b for d, b in sorted(self.reduced_betti.items()) if b}
        )
        object.__setattr__(
            self, "torsion", {d: tuple(t) for d, t in sorted(self.torsion.items()) if t}
        )

    def betti(self, d: int) -> int:
        return self.reduced_betti.get(d, 0)

    @property
    def is_zero(self) -> bool:
        return not self.reduced_betti and not self.torsion

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * b for d, b in self.reduced_betti.items())

    def dimensions(self) -> set[int]:
        return set(self.reduced_betti) | set(self.torsion)

    def __eq__(self, other):
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        return self.reduced_betti == other.reduced_betti and self.torsion == other.torsion

    def __repr__(self):
        return (
            f"HomologyProfile(betti={self.reduced_betti}, torsion={self.torsion}, "
            f"ring={self.ring!r})"
        )

    def to_dict(self) -> dict:
        return {
            "reduced_betti": {str(d): b for d, b in self.reduced_betti.items()},
            "torsion": {str(d): list(t) for d, t in self.torsion.items()},
            "ring": self.ring,
            "torsion_checked": self.torsion_checked,
        }


def reduced_homology(
    k: SimplicialComplex,
    ring: int = INTEGERS,
    snf_limit: int = DEFAULT_SNF_LIMIT,
    cross_check: bool = False,
) -> HomologyProfile:
    """Reduced homology of ``k`` over Z (``ring=0``) or GF(p) (``ring=p``).

    Over Z, dimensions with more than ``snf_limit`` faces switch the whole
    computation to GF(32003) and the profile is flagged ``torsion_checked=False``.
    With ``cross_check`` the Betti numbers are recomputed over GF(2) and
    GF(32003) and must equal the free ranks whenever no torsion was found.
    """
    chain = boundary_matrices(k)
    if ring == INTEGERS and max(len(b) for b in chain.bases.values()) > snf_limit:
        profile = _profile(chain, DEFAULT_PRIME)
        return HomologyProfile(profile.reduced_betti, {}, ring_name(DEFAULT_PRIME), False)
    profile = _profile(chain, ring)
    if cross_check and ring == INTEGERS and not profile.torsion:
        for p in (2, DEFAULT_PRIME):
            field_profile = _profile(chain, p)
            if field_profile.reduced_betti != profile.reduced_betti:
                raise AssertionError(
                    f"GF({p}) Betti numbers {field_profile.reduced_betti} disagree with "
                    f"torsion-free integer ranks {profile.reduced_betti}"
                )
    return profile


def _profile(chain: ChainComplexData, ring: int) -> HomologyProfile:
    if ring not in (INTEGERS, 2) and not _is_prime(ring):
        raise InvalidParameterError(f"coefficient modulus {ring} is not prime")
    red = _reduce(chain, ring)
    betti = {}
    for d in range(-1, chain.top_dimension + 1):
        betti[d] = len(chain.bases[d]) - red.ranks.get(d, 0) - red.ranks.get(d + 1, 0)
    torsion = {}
    for d, cols in red.nonunit.items():
        factors = [f for f in _invariant_factors(cols) if f > 1]
        if factors:
            torsion[d - 1] = sorted(factors)
    return HomologyProfile(betti, torsion, ring_name(ring), ring == INTEGERS)


def _is_prime(p: int) -> bool:
    return p > 1 and all(p % q for q in range(2, int(p**0.5) + 1))


def profile_of_type(t: HomotopyType) -> HomologyProfile:
    """Homology a space of type ``t`` must have (torsion-free in every case)."""
    if t.is_unknown:
        raise InvalidParameterError("an unknown homotopy type has no homology profile")
    if t.kind == JOIN_IDENTITY:
        return HomologyProfile({-1: 1}, ring="symbolic")
    betti: dict[int, int] = {}
    for d in t.dims:
        betti[d] = betti.get(d, 0) + 1
    return HomologyProfile(betti, ring="symbolic")


def join_profiles(p: HomologyProfile, q: HomologyProfile) -> HomologyProfile:
    """Reduced Künneth formula for joins of torsion-free complexes."""
    if p.torsion or q.torsion:
        raise InvalidParameterError("join convolution implemented for torsion-free profiles only")
    betti: dict[int, int] = {}
    for i, a in p.reduced_betti.items():
        for j, b in q.reduced_betti.items():
            betti[i + j + 1] = betti.get(i + j + 1, 0) + a * b
    return HomologyProfile(betti, ring=p.ring)


def suspend_profile(p: HomologyProfile) -> HomologyProfile:
    return HomologyProfile(
        {d + 1: b for d, b in p.reduced_betti.items()},
        {d + 1: t for d, t in p.torsion.items()},
        p.ring,
        p.torsion_checked,
    )


def wedge_profiles(p: HomologyProfile, q: HomologyProfile) -> HomologyProfile:
    """Reduced homology of a wedge sum is the direct sum."""
    betti = dict(p.reduced_betti)
    for d, b in q.reduced_betti.items():
        betti[d] = betti.get(d, 0) + b
    torsion = {d: list(t) for d, t in p.torsion.items()}
    for d, t in q.torsion.items():
        torsion.setdefault(d, []).extend(t)
    return HomologyProfile(betti, torsion, p.ring, p.torsion_checked and q.torsion_checked)


@dataclass(frozen=True)
class ConsistencyReport:
    consistent: bool
    expected: HomologyProfile
    observed: HomologyProfile
    mismatched_dimensions: tuple

    def __bool__(self) -> bool:
        return self.consistent


def compare_profiles(observed: HomologyProfile, expected: HomologyProfile) -> ConsistencyReport:
    dims = sorted(
        d
        for d in observed.dimensions() | expected.dimensions()
        if observed.betti(d) != expected.betti(d)
        or observed.torsion.get(d, ()) != expected.torsion.get(d, ())
    )
    return ConsistencyReport(not dims, expected, observed, tuple(dims))


def is_homology_consistent(k: SimplicialComplex, t: HomotopyType, **kwargs) -> ConsistencyReport:
    """Does the integral reduced homology of ``k`` match that of type ``t``?"""
    return compare_profiles(reduced_homology(k, **kwargs), profile_of_type(t))
