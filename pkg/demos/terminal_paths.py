"""Terminal wedges of paths: the mixed 1/2 mod 3 case.

The four-case closed form and the fold derivation disagree when arms are a
mix of 1 and 2 mod 3. The oracle sides with the fold derivation.
"""

from wedgehom import independence_complex, path, reduced_homology, wedge
from wedgehom.predictor import predict_terminal_path_wedge

for arms in [(4, 5), (7, 7, 5), (5, 8), (4, 7), (3, 5, 5)]:
    pred = predict_terminal_path_wedge(arms)
    h = reduced_homology(independence_complex(wedge([(path(m), m - 1) for m in arms])))
    flag = "  <- differ" if pred.discrepancy else ""
    print(
        f"arms {str(arms):10} case formula {str(pred.case_formula):6} "
        f"fold {str(pred.fold_answer):6} oracle {dict(h.reduced_betti)}{flag}"
    )
