"""Maps between interval posets and polygon dissections.

``phi`` sends the interval ``[a,b]`` to the chord ``(a, b+1)`` of the
``(n+1)``-gon; singletons land on outer edges and ``[1,n]`` on the closing
edge ``(1, n+1)``. ``psi`` and ``b_poset`` form the separable-family pair,
where only the tops of argyles become diagonals.
"""
from itertools import combinations

from .dissection import (Dissection, face_on, has_quadrilateral,
                         is_diagonally_framed, is_noncrossing)
from .errors import (CutsNotComplete, HasCrossings, HasQuadrilateral,
                     InvalidDissection, NotFramed, QuadrilateralFace)
from .permutation import Interval
from .poset import (DecompositionNode, IntervalPoset, argyle_max_elements)

__all__ = ["phi", "phi_inverse", "decompose", "psi", "b_poset"]


def phi(P: IntervalPoset) -> Dissection:
    """Dissection of the ``(n+1)``-gon with a diagonal per non-trivial non-singleton interval.

    For ``n == 1`` the result is the degenerate 2-gon (``Dissection.degenerate``).
    """
    n = P.n
    return Dissection(n + 1, [(a, b + 1) for a, b in P.intervals
                              if b > a and (a, b) != (1, n)])


def _edge_intervals(D):
    return [(a, b - 1) for a, b in D.edges()]


def phi_inverse(D: Dissection) -> IntervalPoset:
    if not is_diagonally_framed(D):
        raise NotFramed(f"{D} is not diagonally framed")
    if has_quadrilateral(D):
        raise HasQuadrilateral(f"{D} contains a quadrilateral")
    return IntervalPoset(D.m - 1, _edge_intervals(D))


def decompose(D: Dissection, a: int = 1, b: int = None) -> DecompositionNode:
    """Recursive argyle / dual-claw decomposition of the subpolygon ``a..b``.

    Cut vertices are those joined to both ``a`` and ``b``. With at least one
    cut vertex the cuts must form a complete graph and give an argyle;
    without any, the face on ``(a, b)`` is a dual claw with at least four
    children.
    """
    b = D.m if b is None else b
    adj = D.adjacency()
    if b not in adj[a]:
        raise InvalidDissection(f"({a},{b}) is not an edge")

    def node(a, b):
        if b - a == 1:
            return DecompositionNode(Interval(a, a), "singleton", (a, b))
        cuts = [a] + [v for v in range(a + 1, b) if v in adj[a] and b in adj[v]] + [b]
        if len(cuts) == 2:
            cuts = face_on(adj, a, b)
            if len(cuts) == 4:
                raise QuadrilateralFace(f"face {cuts} is a quadrilateral")
            kind = "dual_claw"
        else:
            for u, w in combinations(cuts, 2):
                if w not in adj[u]:
                    raise CutsNotComplete(f"cut vertices {cuts} miss the edge ({u},{w})")
            kind = "argyle"
        kids = tuple(node(u, w) for u, w in zip(cuts, cuts[1:]))
        return DecompositionNode(Interval(a, b - 1), kind, tuple(cuts), kids)

    return node(a, b)


def psi(P: IntervalPoset) -> Dissection:
    """Non-crossing dissection with one diagonal per argyle top below the root (binary posets only)."""
    return Dissection(P.n + 1, [(iv.lo, iv.hi + 1) for iv in argyle_max_elements(P)])


def b_poset(D: Dissection) -> IntervalPoset:
    """Binary interval poset of a non-crossing dissection: each face becomes an argyle."""
    if not is_noncrossing(D):
        raise HasCrossings(f"{D} has crossing diagonals")
    if D.m == 2:
        return IntervalPoset(1, [(1, 1)])
    adj = D.adjacency()
    out = set()
    stack = [(1, D.m)]
    while stack:
        a, b = stack.pop()
        if b - a == 1:
            out.add((a, a))
            continue
        face = face_on(adj, a, b)
        for i, j in combinations(range(len(face)), 2):
            out.add((face[i], face[j] - 1))
        stack.extend(zip(face, face[1:]))
    return IntervalPoset(D.m - 1, out)
