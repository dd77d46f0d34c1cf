"""Splitting I(G) at the wedge point as del v (suspended link).

Prints which contractibility certificate was found for each graph.
"""

from wedgehom import cycle, path, wedge
from wedgehom.reduction import alternating_face, del_link_decompose

for name, parts in [
    ("C_3 v C_3", [(cycle(3), 0), (cycle(3), 0)]),
    ("C_4 v C_4", [(cycle(4), 0), (cycle(4), 0)]),
    ("C_6 v C_8", [(cycle(6), 0), (cycle(8), 0)]),
    ("C_5 v P_7 at b_3", [(cycle(5), 0), (path(7), 2)]),
]:
    g = wedge(parts)
    d = del_link_decompose(g, 0, preferred=[alternating_face(g, 0)])
    line = f"{name:18} {d.verdict.value}"
    if d.witness is not None:
        line += f", sigma = {[g.label(v) for v in d.witness.vertices()]}"
    print(line)
