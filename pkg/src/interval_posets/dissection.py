"""Dissections of a convex polygon, crossings allowed.

Vertices are labeled ``1..m`` in circular order and nothing is computed
geometrically: every predicate works on that order alone. Outer edges
``(i, i+1)`` and ``(1, m)`` are implicit.
"""
from dataclasses import dataclass
from itertools import combinations
import json
from typing import FrozenSet, Tuple

import numpy as np

from .errors import DegenerateSize, HasCrossings, InvalidDissection, TooLarge

__all__ = [
    "Dissection", "IntersectionalComponent", "crosses", "edge_present",
    "is_diagonally_framed", "has_quadrilateral", "has_triangle",
    "is_noncrossing", "intersectional_components", "support_induces_complete",
    "all_diagonals", "all_dissections", "noncrossing_dissections", "faces",
    "framed_subset_ranks", "SUBSET_SCAN_CAP",
]

SUBSET_SCAN_CAP = 8


@dataclass(frozen=True)
class Dissection:
    m: int
    diagonals: FrozenSet[Tuple[int, int]]

    def __init__(self, m, diagonals=()):
        if m < 2:
            raise DegenerateSize(f"a polygon needs at least 2 vertices, got m={m}")
        diags = set()
        for i, j in diagonals:
            i, j = int(i), int(j)
            if i > j:
                i, j = j, i
            if not (1 <= i and j <= m) or j - i < 2 or (i, j) == (1, m):
                raise InvalidDissection(f"({i},{j}) is not a diagonal of the {m}-gon")
            diags.add((i, j))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "diagonals", frozenset(diags))

    @property
    def degenerate(self):
        """The 2-gon image of the one-element poset."""
        return self.m < 3

    def edges(self):
        """Sorted list of all edges: outer edges and diagonals."""
        out = set(self.diagonals)
        out.update((i, i + 1) for i in range(1, self.m))
        if self.m > 2:
            out.add((1, self.m))
        return sorted(out)

    def adjacency(self):
        adj = [set() for _ in range(self.m + 1)]
        for i, j in self.edges():
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def to_json(self):
        return {"m": self.m, "diagonals": [list(d) for d in sorted(self.diagonals)]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["m"]), [tuple(d) for d in data["diagonals"]])

    def dumps(self):
        return json.dumps(self.to_json(), separators=(", ", ": ")) + "\n"

    def __str__(self):
        return f"{self.m}-gon " + "{" + ", ".join(f"({i},{j})" for i, j in sorted(self.diagonals)) + "}"


def crosses(d1, d2) -> bool:
    """Strict interleaving of endpoints; chords sharing an endpoint never cross."""
    a, c = d1
    b, d = d2
    return a < b < c < d or b < a < d < c


def edge_present(D: Dissection, i: int, j: int) -> bool:
    if i > j:
        i, j = j, i
    return j == i + 1 or (i, j) == (1, D.m) or (i, j) in D.diagonals


def _crossing_pairs(diags):
    diags = sorted(diags)
    for x, y in combinations(diags, 2):
        if crosses(x, y):
            yield x, y


def is_noncrossing(D: Dissection) -> bool:
    return next(_crossing_pairs(D.diagonals), None) is None


def is_diagonally_framed(D: Dissection) -> bool:
    for d1, d2 in _crossing_pairs(D.diagonals):
        a, b, c, d = sorted(d1 + d2)
        if not (edge_present(D, a, b) and edge_present(D, b, c)
                and edge_present(D, c, d) and edge_present(D, a, d)):
            return False
    return True


def has_quadrilateral(D: Dissection) -> bool:
    """Four vertices whose sides are all edges and whose interior no diagonal enters."""
    adj = D.adjacency()
    diags = D.diagonals
    for a in range(1, D.m + 1):
        for b in sorted(x for x in adj[a] if x > a):
            for c in sorted(x for x in adj[b] if x > b):
                if (a, c) in diags:
                    continue
                for d in sorted(x for x in adj[c] if x > c):
                    if a not in adj[d] or (b, d) in diags:
                        continue
                    sides = ((a, b), (b, c), (c, d), (a, d))
                    if not any(crosses(s, e) for s in sides for e in diags):
                        return True
    return False


def has_triangle(D: Dissection) -> bool:
    """Three pairwise-adjacent vertices (presence only)."""
    adj = D.adjacency()
    for a in range(1, D.m + 1):
        for b in adj[a]:
            if b > a and any(c > b for c in adj[a] & adj[b]):
                return True
    return False


@dataclass(frozen=True)
class IntersectionalComponent:
    diagonals: Tuple[Tuple[int, int], ...]
    support: Tuple[int, ...]


def intersectional_components(D: Dissection):
    """Classes of diagonals under the transitive closure of crossing, ordered by first diagonal."""
    diags = sorted(D.diagonals)
    parent = {d: d for d in diags}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in _crossing_pairs(diags):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)
    groups = {}
    for d in diags:
        groups.setdefault(find(d), []).append(d)
    out = []
    for root in sorted(groups):
        members = tuple(sorted(groups[root]))
        support = tuple(sorted({v for d in members for v in d}))
        out.append(IntersectionalComponent(members, support))
    return out


def support_induces_complete(D: Dissection, C: IntersectionalComponent) -> bool:
    return all(edge_present(D, u, v) for u, v in combinations(C.support, 2))


def all_diagonals(m: int):
    """Diagonals of the m-gon in lexicographic order; bit ``k`` of a subset rank selects the k-th."""
    return [(i, j) for i in range(1, m + 1) for j in range(i + 2, m + 1) if (i, j) != (1, m)]


def all_dissections(m: int, filter=None, start: int = 0, stop: int = None, cap: int = SUBSET_SCAN_CAP):
    """Every diagonal subset of the m-gon (rank range ``[start, stop)``) passing ``filter``."""
    if m > cap:
        raise TooLarge(f"subset scan over the {m}-gon exceeds the cap m <= {cap}")
    diags = all_diagonals(m)
    total = 1 << len(diags)
    stop = total if stop is None else min(stop, total)
    for r in range(start, stop):
        D = Dissection(m, [d for k, d in enumerate(diags) if r >> k & 1])
        if filter is None or filter(D):
            yield D


def framed_subset_ranks(m: int, quad_free: bool = True, cap: int = SUBSET_SCAN_CAP):
    """Subset ranks of all diagonally framed (and optionally quadrilateral-free) dissections.

    Vectorized over every subset at once; agrees rank-for-rank with
    ``all_dissections`` filtered by the scalar predicates.
    """
    if m > cap:
        raise TooLarge(f"subset scan over the {m}-gon exceeds the cap m <= {cap}")
    diags = all_diagonals(m)
    bit = {d: 1 << k for k, d in enumerate(diags)}
    ranks = np.arange(1 << len(diags), dtype=np.uint32)
    keep = np.ones(ranks.shape, dtype=bool)

    def mask(edges):
        return sum(bit.get(e, 0) for e in edges)

    for a, b, c, d in combinations(range(1, m + 1), 4):
        frame = mask([(a, b), (b, c), (c, d), (a, d)])
        pair = bit[(a, c)] | bit[(b, d)]
        both = (ranks & pair) == pair
        keep &= ~both | ((ranks & frame) == frame)
        if quad_free:
            sides = ((a, b), (b, c), (c, d), (a, d))
            entering = [e for e in diags if any(crosses(s, e) for s in sides)]
            forbidden = pair | mask(entering)
            keep &= ~(((ranks & frame) == frame) & ((ranks & forbidden) == 0))
    return ranks[keep]


def dissection_from_rank(m: int, r: int) -> Dissection:
    return Dissection(m, [d for k, d in enumerate(all_diagonals(m)) if int(r) >> k & 1])


def _noncrossing_between(a, b, face_sizes):
    # all non-crossing diagonal sets strictly inside the chord (a, b), drawn on vertices a..b;
    # the face on (a, b) is a = v0 < v1 < ... < vk = b
    if b - a == 1:
        yield frozenset()
        return

    def faces_from(u, path):
        for w in range(u + 1, b + 1):
            if u == a and w == b:
                continue
            path.append(w)
            if w == b:
                if face_sizes is None or len(path) in face_sizes:
                    yield list(path)
            else:
                yield from faces_from(w, path)
            path.pop()

    for face in faces_from(a, [a]):
        own = frozenset((u, w) for u, w in zip(face, face[1:]) if w - u >= 2)
        parts = [list(_noncrossing_between(u, w, face_sizes)) for u, w in zip(face, face[1:])]
        yield from _product_union(own, parts)


def _product_union(base, parts):
    if not parts:
        yield base
        return
    head, rest = parts[0], parts[1:]
    for chunk in head:
        yield from _product_union(base | chunk, rest)


def noncrossing_dissections(m: int, filter=None, face_sizes=None):
    """Non-crossing dissections of the m-gon, generated face by face from the root edge ``(1, m)``.

    ``face_sizes`` optionally restricts the vertex count of every face.
    """
    if m < 3:
        if m == 2:
            yield Dissection(2)
        return
    allowed = None if face_sizes is None else frozenset(face_sizes)
    for diags in _noncrossing_between(1, m, allowed):
        D = Dissection(m, diags)
        if filter is None or filter(D):
            yield D


def face_on(adj, a, b):
    """Vertices of the smallest subpolygon on vertices ``a..b`` that contains the edge ``(a, b)``.

    Walks from ``a`` to ``b`` always taking the farthest available neighbor.
    """
    u = a
    path = [a]
    while u != b:
        limit = b - 1 if u == a else b
        u = max(w for w in adj[u] if u < w <= limit)
        path.append(u)
    return path


def faces(D: Dissection):
    """Faces of a non-crossing dissection as sorted vertex lists, in depth-first order from ``(1, m)``."""
    if not is_noncrossing(D):
        raise HasCrossings("faces are only defined without crossing diagonals")
    if D.m < 3:
        return []
    adj = D.adjacency()
    out = []
    stack = [(1, D.m)]
    while stack:
        a, b = stack.pop()
        face = face_on(adj, a, b)
        out.append(face)
        for u, w in reversed(list(zip(face, face[1:]))):
            if w - u >= 2:
                stack.append((u, w))
    return out
