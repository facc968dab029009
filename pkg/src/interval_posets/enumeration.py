"""Exact counts: closed formulas, classical sequences, and brute-force counters.

The brute-force counters are the oracles for everything else. Permutation
counts come from a census of interval sets over all of S_n; dissection counts
come from scanning diagonal subsets or from the non-crossing generator.
"""
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
import csv
from dataclasses import dataclass, field
from functools import lru_cache
import io
from itertools import islice, permutations
import json
from math import comb, factorial
import os
from types import MappingProxyType

from .dissection import (SUBSET_SCAN_CAP, framed_subset_ranks, has_quadrilateral,
                         has_triangle, noncrossing_dissections)
from .errors import OutOfDomain, TooLarge
from .permutation import _intervals_of_word, _is_separable_word, has_two_split
from .poset import IntervalPoset, classify

__all__ = [
    "count_interval_posets", "count_blockwise_posets", "catalan",
    "small_schroeder", "large_schroeder", "poset_census", "brute_count",
    "count_separable_permutations", "dissection_count", "count_noncrossing_by_faces",
    "CountTable", "Row", "count_table", "FAMILIES", "METHODS",
    "PERM_CAP", "NONCROSSING_CAP",
]

PERM_CAP = 9
BIG_PERM_CAP = 10
NONCROSSING_CAP = 15
BRUTE_NONCROSSING_CAP = 12

FAMILIES = ("all", "tree", "blockwise", "binary", "binary_tree")
METHODS = ("formula", "brute_perm", "brute_dissection", "structured_dissection")


def _exact_div(num, den):
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def count_interval_posets(n: int) -> int:
    """Number of interval posets with ``n > 1`` minimal elements."""
    if n < 2:
        raise OutOfDomain(f"the formula needs n >= 2, got {n}")
    total = 0
    for i in range(1, n):
        for k in range(min(i, (n - 1 - i) // 2) + 1):
            total += comb(n - 1 + i, i) * comb(i, k) * comb(n - 2 * k - 2, i - 1)
    return _exact_div(total, n)


def count_blockwise_posets(n: int) -> int:
    """Number of interval posets of block-wise simple permutations of size ``n >= 4``."""
    if n < 4:
        raise OutOfDomain(f"the formula needs n >= 4, got {n}")
    total = sum(comb(n + i - 1, i) * comb(n - 2 * i - 2, i - 1)
                for i in range(1, (n - 1) // 3 + 1))
    return _exact_div(total, n)


@lru_cache(maxsize=None)
def catalan(k: int) -> int:
    if k == 0:
        return 1
    return sum(catalan(i) * catalan(k - 1 - i) for i in range(k))


@lru_cache(maxsize=None)
def large_schroeder(k: int) -> int:
    # 1, 2, 6, 22, 90, ...
    if k == 0:
        return 1
    return large_schroeder(k - 1) + sum(large_schroeder(i) * large_schroeder(k - 1 - i)
                                        for i in range(k))


@lru_cache(maxsize=None)
def small_schroeder(k: int) -> int:
    # 1, 1, 3, 11, 45, ...; (k+1) s(k) = 3(2k-1) s(k-1) - (k-2) s(k-2)
    if k <= 1:
        return 1
    return _exact_div(3 * (2 * k - 1) * small_schroeder(k - 1)
                      - (k - 2) * small_schroeder(k - 2), k + 1)


def _census_chunk(n, start, stop):
    bits = Counter()
    for word in islice(permutations(range(1, n + 1)), start, stop):
        key = 0
        for lo, hi in _intervals_of_word(word):
            key |= 1 << ((lo - 1) * n + hi - 1)
        bits[key] += 1
    return bits


def _chunks(total, parts):
    step = -(-total // parts)
    return [(s, min(s + step, total)) for s in range(0, total, step)]


_census_cache = {}


def _run_census(n, workers):
    total = factorial(n)
    if workers <= 1 or total < 5000:
        return Counter(_census_chunk(n, 0, total))
    merged = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_census_chunk, n, s, e) for s, e in _chunks(total, workers * 4)]
        for f in futures:
            merged.update(f.result())
    return merged


def _check_perm_cap(n, big):
    cap = BIG_PERM_CAP if big else PERM_CAP
    if n > cap:
        raise TooLarge(f"n={n} exceeds the permutation scan cap {cap}"
                       + ("" if big else " (pass big=True to allow n=10)"))
    if n < 1:
        raise OutOfDomain(f"n must be >= 1, got {n}")


def poset_census(n: int, workers: int = 1, big: bool = False):
    """Map from interval-set key (see ``IntervalPoset.key``) to the number of permutations with that set.

    S_n is split into rank ranges across ``workers`` processes; the result
    does not depend on the split and is cached per ``n``.
    """
    _check_perm_cap(n, big)
    if n not in _census_cache:
        _census_cache[n] = MappingProxyType(dict(_run_census(n, max(1, workers or 1))))
    return _census_cache[n]


_flags_cache = {}


def _poset_flags(n, workers, big):
    # (multiplicity, is_tree, is_binary, is_blockwise) for each distinct poset of size n
    if n not in _flags_cache:
        rows = []
        for key, mult in sorted(poset_census(n, workers, big).items()):
            P = IntervalPoset.from_key(n, key)
            c = classify(P)
            rows.append((mult, c.is_tree, c.is_binary, not has_two_split(P.intervals)))
        _flags_cache[n] = rows
    return _flags_cache[n]


def _family_test(family):
    tests = {
        "all": lambda tree, binary, bws: True,
        "tree": lambda tree, binary, bws: tree,
        "binary": lambda tree, binary, bws: binary,
        "blockwise": lambda tree, binary, bws: bws,
        "binary_tree": lambda tree, binary, bws: tree and binary,
    }
    if family not in tests:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return tests[family]


def brute_count(family: str, n: int, distinct: bool = True, workers: int = 1, big: bool = False) -> int:
    """Count interval posets (or, with ``distinct=False``, permutations) of size ``n`` in a family.

    Families: ``all``, ``tree``, ``binary``, ``blockwise`` (posets of block-wise
    simple permutations) and ``binary_tree``.
    """
    test = _family_test(family)
    return sum(1 if distinct else mult
               for mult, tree, binary, bws in _poset_flags(n, workers, big)
               if test(tree, binary, bws))


def count_separable_permutations(n: int) -> int:
    """Permutations of size ``n`` passing the recursive sum/skew-sum test."""
    _check_perm_cap(n, False)
    return sum(1 for w in permutations(range(1, n + 1)) if _is_separable_word(list(w)))


DISSECTION_FAMILIES = {
    "all": "framed_quadfree",
    "tree": "noncrossing_quadfree",
    "blockwise": "noncrossing_triangle_quadfree",
    "binary": "noncrossing",
}


def _nc_filter(family):
    if family == "noncrossing":
        return None
    if family == "noncrossing_quadfree":
        return lambda D: not has_quadrilateral(D)
    if family == "noncrossing_triangle_quadfree":
        return lambda D: not has_quadrilateral(D) and not has_triangle(D)
    raise ValueError(f"unknown dissection family {family!r}")


def dissection_count(m: int, family: str) -> int:
    """Count dissections of the m-gon by direct enumeration.

    ``framed_quadfree`` scans every diagonal subset (m <= 8); the
    non-crossing families run the face-by-face generator and test each
    dissection with the scalar predicates (m <= 12).
    """
    if family == "framed_quadfree":
        if m > SUBSET_SCAN_CAP:
            raise TooLarge(f"m={m} exceeds the subset scan cap {SUBSET_SCAN_CAP}")
        if m == 2:
            return 1
        return int(framed_subset_ranks(m).size)
    if m > BRUTE_NONCROSSING_CAP:
        raise TooLarge(f"m={m} exceeds the non-crossing enumeration cap {BRUTE_NONCROSSING_CAP}")
    flt = _nc_filter(family)
    return sum(1 for _ in noncrossing_dissections(m, flt))


_FORBIDDEN_FACES = {
    "noncrossing": (),
    "noncrossing_quadfree": (4,),
    "noncrossing_triangle_quadfree": (3, 4),
}


def count_noncrossing_by_faces(m: int, family: str) -> int:
    """Count non-crossing dissections of the m-gon whose faces avoid the family's forbidden sizes.

    Dynamic programming over the face on the root edge; no enumeration.
    """
    if family not in _FORBIDDEN_FACES:
        raise ValueError(f"unknown dissection family {family!r}")
    if m > NONCROSSING_CAP:
        raise TooLarge(f"m={m} exceeds the non-crossing cap {NONCROSSING_CAP}")
    if m == 2:
        return 1
    forbidden = _FORBIDDEN_FACES[family]
    L = m - 1
    # region[l]: ways to fill the region cut off by a chord spanning l arc edges
    region = [0] * (L + 1)
    region[1] = 1
    for length in range(2, L + 1):
        # ways[k][s]: k faces sides covering s arc edges, each side a filled region
        ways = [[0] * (length + 1) for _ in range(length + 1)]
        ways[0][0] = 1
        for k in range(1, length + 1):
            for s in range(k, length + 1):
                ways[k][s] = sum(ways[k - 1][s - t] * region[t] for t in range(1, s - k + 2)
                                 if t < length)
        region[length] = sum(ways[k][length] for k in range(2, length + 1)
                             if k + 1 not in forbidden)
    return region[L]


@dataclass(frozen=True)
class Row:
    n: int
    count: int
    method: str


@dataclass
class CountTable:
    family: str
    rows: list = field(default_factory=list)

    def sorted_rows(self):
        return sorted(self.rows, key=lambda r: (r.n, r.method))

    def mismatches(self):
        """Sizes ``n`` at which the methods disagree."""
        by_n = {}
        for r in self.rows:
            by_n.setdefault(r.n, set()).add(r.count)
        return sorted(n for n, counts in by_n.items() if len(counts) > 1)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "n", "count", "method"])
        for r in self.sorted_rows():
            w.writerow([self.family, r.n, r.count, r.method])
        return buf.getvalue()

    def to_json(self):
        return {"family": self.family,
                "rows": [{"n": r.n, "count": r.count, "method": r.method}
                         for r in self.sorted_rows()]}


def _formula(family, n):
    if family == "all":
        return count_interval_posets(n) if n >= 2 else None
    if family == "blockwise":
        return count_blockwise_posets(n) if n >= 4 else None
    if family == "binary":
        return small_schroeder(n - 1)
    if family == "binary_tree":
        return catalan(n - 1)
    return None


def count_table(family, ns, methods=METHODS, workers=1, big=False):
    """Evaluate every applicable method for each ``n``; sizes a method cannot reach are skipped."""
    _family_test(family)
    table = CountTable(family)
    for n in ns:
        for method in methods:
            if method == "formula":
                value = _formula(family, n)
            elif method == "brute_perm":
                value = brute_count(family, n, workers=workers, big=big)
            elif method == "brute_dissection":
                dfam = DISSECTION_FAMILIES.get(family)
                m = n + 1
                if dfam is None or m < 3:
                    value = None
                elif dfam == "framed_quadfree" and m > SUBSET_SCAN_CAP:
                    value = None
                elif dfam != "framed_quadfree" and m > BRUTE_NONCROSSING_CAP:
                    value = None
                else:
                    value = dissection_count(m, dfam)
            elif method == "structured_dissection":
                dfam = DISSECTION_FAMILIES.get(family)
                if dfam is None or dfam == "framed_quadfree" or n + 1 < 3:
                    value = None
                else:
                    value = count_noncrossing_by_faces(n + 1, dfam)
            else:
                raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
            if value is not None:
                table.rows.append(Row(n, value, method))
    return table
