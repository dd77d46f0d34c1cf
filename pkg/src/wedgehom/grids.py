"""Residue-class grids for I(C_n ∨ P_m) as stated in the literature.

Keys are ``(n mod 3, k mod 3, (m - k) mod 3)``; values are sphere dimensions
as offsets from ``alpha = a + b + c`` (an empty tuple means contractible).
These are reference data only. Predictions never read them, and several
cells disagree with direct computation (see the acceptance suite).
"""

from __future__ import annotations

from .homotopy import HomotopyType, wedge_of_spheres
from .predictor import CycleWedgePathParams

_PT = ()


def _grid(rows):
    # rows[n_res][mk_res][k_res]
    return {
        (i, j, l): rows[i][l][j] for i in range(3) for l in range(3) for j in range(3)
    }


STATED_DELETION = _grid(
    [
        [[(-1,), (-1,), _PT], [_PT, _PT, _PT], [(0,), (0,), _PT]],
        [[(-2,), (-2,), _PT], [_PT, _PT, _PT], [(-1,), (-1,), _PT]],
        [[_PT, _PT, _PT], [_PT, _PT, _PT], [_PT, _PT, _PT]],
    ]
)

STATED_LINK = _grid(
    [
        [[_PT, _PT, _PT], [_PT, (0,), (0,)], [_PT, (0,), (0,)]],
        [[_PT, _PT, _PT], [_PT, _PT, _PT], [_PT, _PT, _PT]],
        [[_PT, _PT, _PT], [_PT, (1,), (1,)], [_PT, (1,), (1,)]],
    ]
)

STATED_COMPLEX = _grid(
    [
        [[(-1,), (-1,), _PT], [_PT, (1,), (1,)], [(0,), (0, 1), (1,)]],
        [[(-2,), (-2,), _PT], [_PT, _PT, _PT], [(-1,), (-1,), _PT]],
        [[_PT, _PT, _PT], [_PT, (2,), (2,)], [_PT, (2,), (2,)]],
    ]
)


def stated_type(grid: dict, params: CycleWedgePathParams) -> HomotopyType:
    offsets = grid[params.residues]
    return wedge_of_spheres(*(params.alpha + o for o in offsets))
