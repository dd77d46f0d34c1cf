"""Fold reduction with a replayable certificate.

A fold deletes w whenever N(v) is contained in N(w); the independence complex
keeps its homotopy type. Small components split off as join factors.
"""

from wedgehom import cycle, independence_complex, path, reduced_homology, wedge
from wedgehom.reduction import reduce_fully

g = wedge([(cycle(7), 0), (path(6), 2)])
trace = reduce_fully(g)
for step in trace.steps:
    print(step.describe())
print("join factors:", [str(f) for f in trace.join_factors])
print("closed form: ", trace.homotopy_type())
print("oracle:      ", reduced_homology(independence_complex(g)))

# the certificate replays step by step and ends at the recorded residual
assert trace.replay().vertex_count == trace.residual.vertex_count
