"""
From posets to polygon dissections and back
===========================================

Each non-singleton interval [a,b] becomes the chord (a, b+1) of the
(n+1)-gon. The images are exactly the diagonally framed dissections with no
empty quadrilateral.
"""

from interval_posets import (Dissection, decompose, has_quadrilateral, is_diagonally_framed,
                             phi, phi_inverse, render_svg)

D = Dissection(10, [(1, 5), (1, 7), (1, 9), (5, 7), (5, 9), (7, 9)])
print(D, "framed:", is_diagonally_framed(D), "quadrilateral:", has_quadrilateral(D))

P = phi_inverse(D)
print("poset:", P)
assert phi(P) == D

# the recursive decomposition behind the inverse map
for node in decompose(D).walk():
    if node.kind != "singleton":
        print(f"  {node.interval}: {node.kind} over cuts {node.cuts}")

render_svg(D, "tengon.svg")
print("wrote tengon.svg")
