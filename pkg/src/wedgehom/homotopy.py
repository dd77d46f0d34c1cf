"""Symbolic homotopy types: a point, the (-1)-sphere, or a wedge of spheres.

Join, suspension and wedge sum act on these values the way they act on the
spaces, which is all the closed-form predictions need.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InvalidParameterError

CONTRACTIBLE = "contractible"
JOIN_IDENTITY = "join_identity"
WEDGE = "wedge"
UNKNOWN = "unknown"


@dataclass(frozen=True, order=True)
class HomotopyType:
    """One of ``pt``, ``S^-1`` (the complex {∅}), ``S^a v S^b v ...`` or unknown.

    ``dims`` is a sorted tuple and is non-empty exactly for wedges.
    """

    kind: str
    dims: tuple = ()

    def __post_init__(self):
        if self.kind not in (CONTRACTIBLE, JOIN_IDENTITY, WEDGE, UNKNOWN):
            raise InvalidParameterError(f"unknown homotopy kind {self.kind!r}")
        dims = tuple(sorted(self.dims))
        if (self.kind == WEDGE) != bool(dims):
            raise InvalidParameterError("only a wedge of spheres carries dimensions")
        if any(d < 0 for d in dims):
            raise InvalidParameterError("wedge summands are spheres of dimension >= 0")
        object.__setattr__(self, "dims", dims)

    @property
    def is_unknown(self) -> bool:
        return self.kind == UNKNOWN

    @property
    def is_contractible(self) -> bool:
        return self.kind == CONTRACTIBLE

    def __str__(self) -> str:
        if self.kind == CONTRACTIBLE:
            return "pt"
        if self.kind == JOIN_IDENTITY:
            return "S^-1"
        if self.kind == UNKNOWN:
            return "unknown"
        return " v ".join(f"S^{d}" for d in self.dims)

    def relative_to(self, alpha: int) -> str:
        """Render sphere dimensions as offsets from ``alpha`` (``S^{α+1}``)."""
        if self.kind != WEDGE:
            return str(self)

        def off(d):
            k = d - alpha
            return "α" if k == 0 else f"α{k:+d}"

        return " v ".join(f"S^{{{off(d)}}}" for d in self.dims)


POINT = HomotopyType(CONTRACTIBLE)
EMPTY_SPHERE = HomotopyType(JOIN_IDENTITY)
UNKNOWN_TYPE = HomotopyType(UNKNOWN)


def sphere(d: int) -> HomotopyType:
    """S^d; ``sphere(-1)`` is the join unit."""
    if d == -1:
        return EMPTY_SPHERE
    return HomotopyType(WEDGE, (d,))


def wedge_of_spheres(*dims: int) -> HomotopyType:
    return HomotopyType(WEDGE, tuple(dims)) if dims else POINT


_TOKEN = re.compile(r"S\^(-?\d+)")


def parse_type(text: str) -> HomotopyType:
    """Inverse of ``str``: ``"pt"``, ``"S^-1"``, ``"S^1 v S^2"``, ``"unknown"``."""
    text = text.strip()
    if text == "pt":
        return POINT
    if text == "unknown":
        return UNKNOWN_TYPE
    if text == "S^-1":
        return EMPTY_SPHERE
    dims = []
    for part in text.split(" v "):
        m = _TOKEN.fullmatch(part.strip())
        if not m or int(m.group(1)) < 0:
            raise InvalidParameterError(f"cannot parse homotopy type {text!r}")
        dims.append(int(m.group(1)))
    return wedge_of_spheres(*dims)


def ht_join(*types: HomotopyType) -> HomotopyType:
    """Join; S^a * S^b = S^{a+b+1}, distributing over wedges."""
    result = EMPTY_SPHERE
    for t in types:
        if result.is_unknown or t.is_unknown:
            return UNKNOWN_TYPE
        if result.is_contractible or t.is_contractible:
            result = POINT
            continue
        if t.kind == JOIN_IDENTITY:
            continue
        if result.kind == JOIN_IDENTITY:
            result = t
            continue
        result = HomotopyType(WEDGE, tuple(a + b + 1 for a in result.dims for b in t.dims))
    return result


def ht_suspend(t: HomotopyType) -> HomotopyType:
    return ht_join(t, sphere(0))


def ht_wedge(*types: HomotopyType) -> HomotopyType:
    """Wedge sum with the point as unit. The (-1)-sphere has no basepoint."""
    dims: list[int] = []
    for t in types:
        if t.is_unknown:
            return UNKNOWN_TYPE
        if t.kind == JOIN_IDENTITY:
            raise InvalidParameterError("wedge sum with S^-1 is undefined (no basepoint)")
        dims.extend(t.dims)
    return wedge_of_spheres(*dims)
