"""Closed-form predictions checked against the oracle."""

from wedgehom import cycle, independence_complex, path, profile_of_type, reduced_homology, wedge
from wedgehom.predictor import (
    CycleWedgePathParams,
    predict_cycle_wedge_path,
    predict_cycle_wedges,
    predict_path_wedge_path,
)

cases = [
    ("P_4 at end to b_3 of P_7", predict_path_wedge_path(4, 7, 3), wedge([(path(4), 3), (path(7), 2)])),
    ("C_4 v C_4", predict_cycle_wedges([4, 4]), wedge([(cycle(4), 0), (cycle(4), 0)])),
    ("C_5 v C_6 v C_7", predict_cycle_wedges([5, 6, 7]), wedge([(cycle(m), 0) for m in (5, 6, 7)])),
    (
        "C_7 at b_4 of P_9",
        predict_cycle_wedge_path(CycleWedgePathParams(n=7, m=9, k=4)),
        wedge([(cycle(7), 0), (path(9), 3)]),
    ),
]
for name, predicted, g in cases:
    h = reduced_homology(independence_complex(g))
    status = "ok" if h == profile_of_type(predicted) else "MISMATCH"
    print(f"{name:26} predicted {str(predicted):12} oracle {dict(h.reduced_betti)}  {status}")
