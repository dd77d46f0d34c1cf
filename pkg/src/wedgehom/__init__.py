"""Independence complexes of wedges of paths and cycles.

Build graphs, enumerate their independence complexes, compute reduced
homology exactly, reduce graphs by folds, and compare closed-form
homotopy-type predictions against the brute-force oracle.
"""

from .collapse import CollapseVerdict, is_collapsible
from .complex import (
    SimplicialComplex,
    cone,
    deletion,
    empty_complex,
    euler_characteristic,
    f_vector,
    independence_complex,
    join,
    link,
    points,
    simplex,
    suspension,
)
from .errors import InvalidParameterError, SizeLimitError
from .graph import (
    Graph,
    WedgeSpec,
    chromatic_number,
    connected_components,
    cycle,
    disjoint_union,
    is_isomorphic,
    neighborhood,
    path,
    wedge,
    wedge_point,
)
from .homology import (
    ChainComplexData,
    HomologyProfile,
    boundary_matrices,
    is_homology_consistent,
    profile_of_type,
    reduced_homology,
    smith_normal_form,
)
from .homotopy import (
    EMPTY_SPHERE,
    POINT,
    UNKNOWN_TYPE,
    HomotopyType,
    ht_join,
    ht_suspend,
    ht_wedge,
    parse_type,
    sphere,
    wedge_of_spheres,
)
from .predictor import (
    CycleWedgePathParams,
    predict_cycle,
    predict_cycle_wedge_path,
    predict_cycle_wedges,
    predict_path,
    predict_path_wedge_path,
    predict_terminal_path_wedge,
    verify,
)
from .reduction import (
    DecompositionVerdict,
    ReductionTrace,
    apply_fold,
    del_link_decompose,
    find_fold,
    reduce_fully,
)

__version__ = "0.1.0"
