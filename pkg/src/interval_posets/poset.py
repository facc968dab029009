"""Interval posets, their Hasse diagrams, classification, validation and realization.

A poset is identified with its set of intervals: the order is inclusion, so
two posets are equal exactly when their interval sets are.
"""
from dataclasses import dataclass, field
import json
from typing import FrozenSet, Optional

from .errors import InvalidPoset, IntervalPosetError, NotBinary
from .permutation import (Interval, Permutation, _as_perm, _intervals_of_word,
                          inflate, smallest_simple)

__all__ = [
    "IntervalPoset", "DecompositionNode", "Classification", "Validation",
    "build_poset", "hasse_covers", "children_map", "classify",
    "validate_interval_poset", "realize", "argyle_max_elements", "to_dot",
    "trivial_poset", "argyle_poset",
]


@dataclass(frozen=True)
class IntervalPoset:
    n: int
    intervals: FrozenSet[Interval]

    def __init__(self, n, intervals):
        ivs = frozenset(Interval(int(a), int(b)) for a, b in intervals)
        for iv in ivs:
            if not 1 <= iv.lo <= iv.hi <= n:
                raise InvalidPoset(f"interval {iv} outside 1..{n}")
        missing = [Interval(i, i) for i in range(1, n + 1) if (i, i) not in ivs]
        if (1, n) not in ivs:
            missing.append(Interval(1, n))
        if n < 1 or missing:
            raise InvalidPoset(f"MissingTrivial: {', '.join(map(str, missing))}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "intervals", ivs)

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(sorted(self.intervals))

    def __contains__(self, iv):
        return tuple(iv) in self.intervals

    def proper(self):
        """Sorted list of the intervals that are neither singletons nor ``[1,n]``."""
        return [iv for iv in self if iv.lo != iv.hi and iv != (1, self.n)]

    def key(self):
        """Compact integer encoding of the interval set (bit ``(lo-1)*n + hi-1``)."""
        return intervals_key(self.n, self.intervals)

    @classmethod
    def from_key(cls, n, key):
        ivs = []
        for lo in range(1, n + 1):
            for hi in range(lo, n + 1):
                if key >> ((lo - 1) * n + hi - 1) & 1:
                    ivs.append((lo, hi))
        return cls(n, ivs)

    def to_json(self):
        return {"n": self.n, "intervals": [[iv.lo, iv.hi] for iv in self]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), [tuple(x) for x in data["intervals"]])

    def dumps(self):
        return json.dumps(self.to_json(), separators=(", ", ": ")) + "\n"

    def __str__(self):
        return "{" + ", ".join(map(str, self)) + "}"


def intervals_key(n, intervals):
    key = 0
    for lo, hi in intervals:
        key |= 1 << ((lo - 1) * n + hi - 1)
    return key


def trivial_poset(n):
    ivs = [(i, i) for i in range(1, n + 1)] + [(1, n)]
    return IntervalPoset(n, ivs)


def argyle_poset(n):
    return IntervalPoset(n, [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)])


def build_poset(p) -> IntervalPoset:
    p = _as_perm(p)
    return IntervalPoset(p.n, _intervals_of_word(p.word))


def children_map(P):
    """Map each interval to the list of intervals it covers, ordered by ``lo``."""
    ivs = P.intervals if isinstance(P, IntervalPoset) else frozenset(P)
    his = {}
    for lo, hi in ivs:
        his.setdefault(lo, []).append(hi)
    for lo in his:
        his[lo].sort(reverse=True)
    out = {}
    for a, b in ivs:
        kids = []
        best = a - 1
        for s in range(a, b + 1):
            # longest interval starting at s strictly inside [a,b]
            r = next((h for h in his.get(s, ()) if h <= b and (s, h) != (a, b)), None)
            if r is not None and r > best:
                kids.append(Interval(s, r))
                best = r
        out[Interval(a, b)] = kids
    return out


def hasse_covers(P) -> set:
    return {(parent, child) for parent, kids in children_map(P).items() for child in kids}


@dataclass(frozen=True)
class Classification:
    is_tree: bool
    is_binary: bool
    is_dual_claw: bool
    is_argyle: bool


def classify(P: IntervalPoset) -> Classification:
    kids = children_map(P)
    covered_by = dict.fromkeys(kids, 0)
    for parent, cs in kids.items():
        for c in cs:
            covered_by[c] += 1
    top = Interval(1, P.n)
    is_tree = all(cnt == 1 for iv, cnt in covered_by.items() if iv != top)
    is_binary = all(len(cs) <= 2 for cs in kids.values())
    n = P.n
    return Classification(
        is_tree=is_tree,
        is_binary=is_binary,
        is_dual_claw=n >= 4 and len(P) == n + 1,
        is_argyle=len(P) == n * (n + 1) // 2,
    )


@dataclass(frozen=True)
class DecompositionNode:
    """One step of the recursive argyle / dual-claw decomposition.

    ``cuts`` are the polygon vertices bounding the children: child ``i`` is the
    interval ``[cuts[i], cuts[i+1]-1]``.
    """
    interval: Interval
    kind: str  # "singleton", "dual_claw" or "argyle"
    cuts: tuple
    children: tuple = field(default=())

    @property
    def order(self):
        return len(self.children)

    def intervals(self):
        """All intervals produced by this subtree."""
        out = set()
        stack = [self]
        while stack:
            node = stack.pop()
            if node.kind == "argyle":
                c = node.cuts
                for i in range(len(c)):
                    for j in range(i + 1, len(c)):
                        out.add(Interval(c[i], c[j] - 1))
            else:
                out.add(node.interval)
            stack.extend(node.children)
        return out

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()


@dataclass(frozen=True)
class Validation:
    ok: bool
    reason: Optional[str] = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def validate_interval_poset(S, n: int) -> Validation:
    """Is ``S`` the interval set of some permutation of size ``n``?

    The primary test maps ``S`` to its dissection and checks framing and the
    absence of quadrilaterals; the recursive decomposition is run as a second
    opinion and any disagreement is reported as ``BadDecomposition``.
    """
    from .bijection import phi, decompose
    from .dissection import is_diagonally_framed, has_quadrilateral

    try:
        P = S if isinstance(S, IntervalPoset) else IntervalPoset(n, S)
    except InvalidPoset as exc:
        return Validation(False, "MissingTrivial", str(exc))
    if P.n != n:
        return Validation(False, "MissingTrivial", f"poset has n={P.n}, expected {n}")
    if n == 1:
        return Validation(True)
    D = phi(P)
    if not is_diagonally_framed(D):
        return Validation(False, "NotFramed")
    if has_quadrilateral(D):
        return Validation(False, "HasQuadrilateral")
    try:
        tree = decompose(D)
    except IntervalPosetError as exc:
        return Validation(False, "BadDecomposition", f"{exc.code}: {exc}")
    if tree.intervals() != set(P.intervals):
        return Validation(False, "BadDecomposition", "decomposition does not reproduce the set")
    return Validation(True)


def _realize_node(node, parent_increasing):
    if node.kind == "singleton":
        return Permutation((1,))
    k = node.order
    if node.kind == "dual_claw":
        skeleton = smallest_simple(k).word
        increasing = None
    else:
        # a sum block nested directly in a sum block of the same direction would merge with it
        increasing = parent_increasing is not True
        skeleton = tuple(range(1, k + 1)) if increasing else tuple(range(k, 0, -1))
    blocks = [_realize_node(node.children[v - 1], increasing) for v in skeleton]
    return inflate(Permutation(skeleton), blocks)


def realize(P: IntervalPoset) -> Permutation:
    """A canonical permutation whose interval poset is ``P``."""
    from .bijection import phi, decompose

    check = validate_interval_poset(P, P.n)
    if not check:
        raise InvalidPoset(f"{check.reason}: {check.detail}".rstrip(": "))
    if P.n == 1:
        return Permutation((1,))
    return _realize_node(decompose(phi(P)), None)


def argyle_max_elements(P: IntervalPoset) -> set:
    """Tops of the argyles in a binary poset, excluding the global maximum.

    These are the non-singleton intervals other than ``[1,n]`` that do not
    overlap any element of ``P``.
    """
    if not classify(P).is_binary:
        raise NotBinary("argyle maxima are only defined for binary posets")
    ivs = sorted(P.intervals)
    out = set()
    for iv in ivs:
        if iv.lo == iv.hi or iv == (1, P.n):
            continue
        if not any(iv.overlaps(other) for other in ivs):
            out.add(iv)
    return out


def _dot_id(iv):
    return f"i{iv.lo}_{iv.hi}"


def to_dot(P: IntervalPoset) -> str:
    """Hasse diagram as a DOT digraph, edges pointing from an interval to those it covers."""
    lines = ["digraph interval_poset {", "  node [shape=plaintext];"]
    for iv in sorted(P.intervals):
        lines.append(f'  {_dot_id(iv)} [label="{iv}"];')
    kids = children_map(P)
    for parent in sorted(kids):
        for child in kids[parent]:
            lines.append(f"  {_dot_id(parent)} -> {_dot_id(child)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
