"""Exact reduced homology of independence complexes.

Enumerates I(G) for a few graphs and prints Betti numbers and torsion, then
shows torsion detection on the six-vertex projective plane.
"""

from wedgehom import (
    SimplicialComplex,
    cycle,
    f_vector,
    independence_complex,
    path,
    reduced_homology,
    wedge,
)

for name, g in [
    ("P_7", path(7)),
    ("C_9", cycle(9)),
    ("C_5 v C_5", wedge([(cycle(5), 0), (cycle(5), 0)])),
]:
    k = independence_complex(g)
    print(f"{name:10} f={f_vector(k)}  {reduced_homology(k)}")

# hemi-icosahedron: H_1 = Z/2, invisible to rational Betti numbers
rp2 = SimplicialComplex.from_maximal_faces(6, [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
    (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3),
])
print("RP^2 over Z:   ", reduced_homology(rp2))
print("RP^2 over GF(2)", reduced_homology(rp2, ring=2))
