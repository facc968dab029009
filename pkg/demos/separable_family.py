"""
Separable permutations and non-crossing dissections
===================================================

Binary interval posets (those of separable permutations) correspond to
dissections without crossings. Only the top of each argyle below the root
becomes a diagonal.
"""

from interval_posets import b_poset, build_poset, faces, noncrossing_dissections, phi, psi

P = build_poset("45213867")
print("phi:", phi(P))
print("psi:", psi(P))
assert b_poset(psi(P)) == P

for D in noncrossing_dissections(5):
    print(f"{str(D):28s} faces {faces(D)}  ->  {b_poset(D)}")
