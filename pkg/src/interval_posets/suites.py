"""Exhaustive verification suites shared by the ``verify`` command and the test-suite.

Each suite checks one family of claims over every object up to a size bound
and reports how many objects it checked plus the first counterexample.
Bounds are ``min(max_n, cap)`` with per-suite caps chosen so that the full
run stays at desk scale.
"""
from dataclasses import dataclass
from itertools import combinations, permutations
import time
from typing import Optional

from .bijection import b_poset, decompose, phi, phi_inverse, psi
from .dissection import (dissection_from_rank, edge_present, framed_subset_ranks,
                         has_quadrilateral, has_triangle, intersectional_components,
                         is_diagonally_framed, is_noncrossing, noncrossing_dissections,
                         support_induces_complete, crosses)
from .enumeration import FAMILIES, count_table, poset_census
from .permutation import (Interval, Permutation, _intervals_of_word, _is_separable_word,
                          has_two_split)
from .poset import IntervalPoset, build_poset, children_map, classify, intervals_key, realize

__all__ = ["SuiteResult", "SUITES", "run_suites"]


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: int = 0
    counterexample: Optional[str] = None
    seconds: float = 0.0

    @property
    def passed(self):
        return self.failures == 0

    def fail(self, what):
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = what

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: checked {self.checked}, failures {self.failures}"
        if self.counterexample:
            text += f"\n  counterexample: {self.counterexample}"
        return text


def _witness(P):
    """A permutation word with interval set ``P`` (for counterexample dumps)."""
    target = P.key()
    for word in permutations(range(1, P.n + 1)):
        if intervals_key(P.n, _intervals_of_word(word)) == target:
            return str(Permutation(word))
    return str(P)


def _posets(n, workers):
    for key in sorted(poset_census(n, workers)):
        yield IntervalPoset.from_key(n, key)


def interval_algebra(res, max_n, workers):
    for n in range(1, min(max_n, 8) + 1):
        for P in _posets(n, workers):
            res.checked += 1
            ivs = sorted(P.intervals)
            for I, J in combinations(ivs, 2):
                if not I.overlaps(J):
                    continue
                lo, hi = sorted((I, J))
                derived = [Interval(lo.lo, hi.hi), Interval(hi.lo, lo.hi),
                           Interval(lo.lo, hi.lo - 1), Interval(lo.hi + 1, hi.hi)]
                if any(d not in P.intervals for d in derived):
                    res.fail(f"permutation {_witness(P)}: {I} and {J}")
                    break


def no_three_cover(res, max_n, workers):
    for n in range(1, min(max_n, 9) + 1):
        for P in _posets(n, workers):
            res.checked += 1
            if any(len(kids) == 3 for kids in children_map(P).values()):
                res.fail(f"permutation {_witness(P)}")


def framed_image(res, max_n, workers):
    for n in range(2, min(max_n, 9) + 1):
        for P in _posets(n, workers):
            res.checked += 1
            D = phi(P)
            if not is_diagonally_framed(D) or has_quadrilateral(D):
                res.fail(f"permutation {_witness(P)} -> {D.dumps().strip()}")


def _cliques(D):
    verts = range(1, D.m + 1)
    for size in range(2, D.m + 1):
        for K in combinations(verts, size):
            if all(edge_present(D, u, v) for u, v in combinations(K, 2)):
                yield K


def component_completeness(res, max_n, workers):
    for m in range(4, min(max_n + 1, 8) + 1):
        for r in framed_subset_ranks(m, quad_free=False):
            D = dissection_from_rank(m, r)
            res.checked += 1
            for C in intersectional_components(D):
                if not support_induces_complete(D, C):
                    res.fail(f"{D.dumps().strip()} component {C.diagonals}")
            if m > 7:
                continue
            # a diagonal crossing an edge of a complete vertex set extends it
            for K in _cliques(D):
                for e in D.diagonals:
                    if any(crosses(e, (u, v)) for u, v in combinations(K, 2)):
                        ext = sorted(set(K) | set(e))
                        if not all(edge_present(D, u, v) for u, v in combinations(ext, 2)):
                            res.fail(f"{D.dumps().strip()} clique {K} diagonal {e}")


def roundtrip_phi(res, max_n, workers):
    for n in range(1, min(max_n, 8) + 1):
        for P in _posets(n, workers):
            res.checked += 1
            if phi_inverse(phi(P)) != P:
                res.fail(f"permutation {_witness(P)}")
    for m in range(3, min(max_n + 1, 8) + 1):
        for r in framed_subset_ranks(m):
            D = dissection_from_rank(m, r)
            res.checked += 1
            P = phi_inverse(D)
            if phi(P) != D or decompose(D).intervals() != set(P.intervals):
                res.fail(D.dumps().strip())


def roundtrip_psi(res, max_n, workers):
    for n in range(1, min(max_n, 8) + 1):
        for P in _posets(n, workers):
            if not classify(P).is_binary:
                continue
            res.checked += 1
            if b_poset(psi(P)) != P:
                res.fail(f"permutation {_witness(P)}")
    for m in range(2, min(max_n + 1, 9) + 1):
        for D in noncrossing_dissections(m):
            res.checked += 1
            P = b_poset(D)
            if not classify(P).is_binary or psi(P) != D:
                res.fail(D.dumps().strip())


def restrictions(res, max_n, workers):
    for n in range(2, min(max_n, 8) + 1):
        for P in _posets(n, workers):
            res.checked += 1
            c = classify(P)
            D = phi(P)
            nc = is_noncrossing(D)
            blockwise = not has_two_split(P.intervals)
            if c.is_tree != nc:
                res.fail(f"tree restriction: permutation {_witness(P)}")
            if blockwise != (nc and not has_triangle(D) and not has_quadrilateral(D)):
                res.fail(f"block-wise restriction: permutation {_witness(P)}")
            if c.is_binary and not c.is_tree and psi(P) == D:
                res.fail(f"psi equals phi on a non-tree binary poset: {_witness(P)}")


def characterizations(res, max_n, workers):
    """Dual claw iff simple, binary iff separable, tree iff no overlapping intervals."""
    for n in range(1, min(max_n, 8) + 1):
        flags = {}
        for word in permutations(range(1, n + 1)):
            res.checked += 1
            ivs = _intervals_of_word(word)
            key = intervals_key(n, ivs)
            if key not in flags:
                P = IntervalPoset(n, ivs)
                c = classify(P)
                overlap = any(I.overlaps(J) for I, J in combinations(sorted(P.intervals), 2))
                flags[key] = (c, overlap)
            c, overlap = flags[key]
            simple = len(ivs) == n + 1
            if n >= 4 and c.is_dual_claw != simple:
                res.fail(f"dual claw vs simple: {Permutation(word)}")
            if c.is_binary != _is_separable_word(list(word)):
                res.fail(f"binary vs separable: {Permutation(word)}")
            if c.is_tree == overlap:
                res.fail(f"tree vs overlap: {Permutation(word)}")


def realization(res, max_n, workers):
    for n in range(1, min(max_n, 7) + 1):
        for P in _posets(n, workers):
            res.checked += 1
            if build_poset(realize(P)) != P:
                res.fail(f"permutation {_witness(P)}")


def counts(res, max_n, workers):
    for family in FAMILIES:
        table = count_table(family, range(2, min(max_n, 9) + 1), workers=workers)
        res.checked += len(table.rows)
        for n in table.mismatches():
            rows = [f"{r.method}={r.count}" for r in table.rows if r.n == n]
            res.fail(f"{family} n={n}: " + ", ".join(rows))


SUITES = {
    "interval_algebra": interval_algebra,
    "no_three_cover": no_three_cover,
    "characterizations": characterizations,
    "framed_image": framed_image,
    "component_completeness": component_completeness,
    "roundtrip_phi": roundtrip_phi,
    "roundtrip_psi": roundtrip_psi,
    "restrictions": restrictions,
    "realize": realization,
    "counts": counts,
}


def run_suites(max_n, names=None, workers=1):
    names = list(SUITES) if not names else list(names)
    unknown = [x for x in names if x not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites {unknown}; expected some of {list(SUITES)}")
    results = []
    for name in names:
        res = SuiteResult(name)
        t = time.perf_counter()
        SUITES[name](res, max_n, workers)
        res.seconds = time.perf_counter() - t
        results.append(res)
    return results
