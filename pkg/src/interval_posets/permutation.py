"""Permutations in one-line notation, their intervals, and structural predicates."""
from functools import lru_cache
from itertools import islice, permutations
from math import factorial
import re
from typing import Iterable, Iterator, NamedTuple

from .errors import (ArityMismatch, IndexOutOfRange, MalformedInput,
                     NoSimpleOfThatSize, NotAPermutation)

__all__ = [
    "Interval", "Permutation", "parse_permutation", "intervals_of",
    "is_simple", "direct_sum", "skew_sum", "inflate", "is_separable",
    "is_block_wise_simple", "has_two_split", "smallest_simple",
    "permutations_of", "rank", "unrank",
]


class Interval(NamedTuple):
    """The value range ``{lo, ..., hi}`` (inclusive)."""
    lo: int
    hi: int

    def __str__(self):
        if self.lo == self.hi:
            return "{%d}" % self.lo
        return "[%d,%d]" % (self.lo, self.hi)

    def __len__(self):
        return self.hi - self.lo + 1

    def contains(self, other):
        return self.lo <= other.lo and other.hi <= self.hi

    def overlaps(self, other):
        """True when the two ranges intersect and neither contains the other."""
        return (self.lo < other.lo <= self.hi < other.hi
                or other.lo < self.lo <= other.hi < self.hi)


class Permutation:
    """A permutation of ``1..n`` stored as its one-line word.

    Instances are immutable and hashable; equality is equality of words.
    """

    __slots__ = ("_word",)

    def __init__(self, word: Iterable[int]):
        word = tuple(int(x) for x in word)
        if not word:
            raise NotAPermutation("empty word")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise NotAPermutation(f"{word} is not a permutation of 1..{len(word)}")
        object.__setattr__(self, "_word", word)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def word(self):
        return self._word

    @property
    def n(self):
        return len(self._word)

    def __len__(self):
        return len(self._word)

    def __iter__(self):
        return iter(self._word)

    def __getitem__(self, i):
        return self._word[i]

    def __eq__(self, other):
        if isinstance(other, Permutation):
            return self._word == other._word
        return NotImplemented

    def __hash__(self):
        return hash(self._word)

    def __lt__(self, other):
        return self._word < other._word

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self._word))
        return ",".join(map(str, self._word))

    def __repr__(self):
        return f"Permutation({str(self)!r})"

    def positions(self):
        """``pos[v]`` is the 0-based position of value ``v`` (``pos[0]`` unused)."""
        pos = [0] * (self.n + 1)
        for i, v in enumerate(self._word):
            pos[v] = i
        return pos


_SEPARATORS = re.compile(r"[\s,]+")


def parse_permutation(text: str) -> Permutation:
    """Parse ``"314297856"`` (digit shorthand, n <= 9) or ``"2,4,1,3"`` / ``"2 4 1 3"``."""
    text = text.strip()
    if not text:
        raise MalformedInput("empty permutation text")
    if _SEPARATORS.search(text):
        tokens = [t for t in _SEPARATORS.split(text) if t]
        try:
            word = [int(t) for t in tokens]
        except ValueError:
            raise MalformedInput(f"non-integer token in {text!r}") from None
    else:
        if not text.isdigit():
            raise MalformedInput(f"non-integer token in {text!r}")
        if len(text) > 9:
            raise MalformedInput("digit shorthand is only unambiguous for n <= 9; "
                                 "separate entries with commas")
        word = [int(c) for c in text]
    return Permutation(word)


def _as_perm(p):
    if isinstance(p, Permutation):
        return p
    if isinstance(p, str):
        return parse_permutation(p)
    return Permutation(p)


def _intervals_of_word(word):
    # value-window sweep: [a,b] is an interval iff its positions span exactly b-a+1 slots
    n = len(word)
    pos = [0] * (n + 1)
    for i, v in enumerate(word):
        pos[v] = i
    out = []
    for a in range(1, n + 1):
        lo = hi = pos[a]
        out.append((a, a))
        for b in range(a + 1, n + 1):
            q = pos[b]
            if q < lo:
                lo = q
            elif q > hi:
                hi = q
            if hi - lo == b - a:
                out.append((a, b))
    return out


def intervals_of(p) -> set:
    """All intervals of ``p``, including ``[1,n]`` and the singletons."""
    p = _as_perm(p)
    return {Interval(a, b) for a, b in _intervals_of_word(p.word)}


def is_simple(p) -> bool:
    """No proper interval. Sizes 2 and 3 are never simple; size 1 is."""
    p = _as_perm(p)
    n = p.n
    if n == 1:
        return True
    if n <= 3:
        return False
    return len(intervals_of(p)) == n + 1


def direct_sum(p, q) -> Permutation:
    p, q = _as_perm(p), _as_perm(q)
    return Permutation(p.word + tuple(v + p.n for v in q.word))


def skew_sum(p, q) -> Permutation:
    p, q = _as_perm(p), _as_perm(q)
    return Permutation(tuple(v + q.n for v in p.word) + q.word)


def inflate(skeleton, blocks) -> Permutation:
    """Substitute ``blocks[i]`` for the entry at position ``i`` of ``skeleton``."""
    skeleton = _as_perm(skeleton)
    blocks = [_as_perm(b) for b in blocks]
    if len(blocks) != skeleton.n:
        raise ArityMismatch(f"skeleton of size {skeleton.n} needs {skeleton.n} blocks, "
                            f"got {len(blocks)}")
    size_of_value = [0] * (skeleton.n + 1)
    for v, block in zip(skeleton.word, blocks):
        size_of_value[v] = block.n
    offset = [0] * (skeleton.n + 2)
    for v in range(1, skeleton.n + 1):
        offset[v + 1] = offset[v] + size_of_value[v]
    word = []
    for v, block in zip(skeleton.word, blocks):
        word.extend(offset[v] + x for x in block.word)
    return Permutation(word)


def _is_separable_word(word):
    n = len(word)
    if n == 1:
        return True
    lo = hi = word[0]
    for k in range(1, n):
        lo = min(lo, word[k - 1])
        hi = max(hi, word[k - 1])
        if hi - lo + 1 != k:
            continue
        if lo == 1:
            left, right = word[:k], [v - k for v in word[k:]]
        elif hi == n:
            left, right = [v - (n - k) for v in word[:k]], word[k:]
        else:
            continue
        return _is_separable_word(left) and _is_separable_word(right)
    return False


def is_separable(p) -> bool:
    """Built from ``1`` by direct and skew sums (split at the leftmost point)."""
    return _is_separable_word(_as_perm(p).word)


def has_two_split(intervals) -> bool:
    """Does some interval ``[a,b]`` split as ``[a,m]`` and ``[m+1,b]``, both intervals?"""
    ivs = set(intervals)
    ends_at = {}
    for a, b in ivs:
        ends_at.setdefault(a, []).append(b)
    for a, b in ivs:
        if b == a:
            continue
        for m in ends_at[a]:
            if m < b and (m + 1, b) in ivs:
                return True
    return False


def is_block_wise_simple(p) -> bool:
    """No interval of ``p`` is a direct or skew sum of two intervals."""
    return not has_two_split(intervals_of(p))


def _simple_search(k):
    # depth-first in lexicographic order, pruning prefixes that already fix a proper interval
    word = []
    used = [False] * (k + 2)

    def window_closes(t):
        lo = hi = word[t]
        for s in range(t - 1, -1, -1):
            lo = min(lo, word[s])
            hi = max(hi, word[s])
            if hi - lo == t - s and t - s + 1 < k:
                return True
        return False

    def rest_is_block():
        remaining = k - len(word)
        if remaining < 2 or remaining >= k:
            return False
        free = [v for v in range(1, k + 1) if not used[v]]
        return free[-1] - free[0] + 1 == remaining

    def extend():
        if len(word) == k:
            return True
        for v in range(1, k + 1):
            if used[v]:
                continue
            word.append(v)
            used[v] = True
            if not window_closes(len(word) - 1) and not rest_is_block():
                if extend():
                    return True
            used[v] = False
            word.pop()
        return False

    extend()
    return Permutation(word)


@lru_cache(maxsize=None)
def smallest_simple(k: int) -> Permutation:
    """Lexicographically smallest simple permutation of size ``k`` (``k == 1`` or ``k >= 4``)."""
    if k in (2, 3) or k < 1:
        raise NoSimpleOfThatSize(f"there is no simple permutation of size {k}")
    if k == 1:
        return Permutation((1,))
    return _simple_search(k)


def permutations_of(n: int, start: int = 0, stop: int = None) -> Iterator[Permutation]:
    """All of S_n in Lehmer (lexicographic) order, optionally the rank range ``[start, stop)``."""
    if n < 1:
        raise IndexOutOfRange(f"n must be >= 1, got {n}")
    for word in islice(permutations(range(1, n + 1)), start, stop):
        yield Permutation(word)


def rank(p) -> int:
    """Position of ``p`` in lexicographic order (Lehmer code)."""
    word = _as_perm(p).word
    n = len(word)
    r = 0
    for i, v in enumerate(word):
        smaller_after = sum(1 for w in word[i + 1:] if w < v)
        r += smaller_after * factorial(n - 1 - i)
    return r


def unrank(n: int, index: int) -> Permutation:
    if n < 1 or not 0 <= index < factorial(n):
        raise IndexOutOfRange(f"index {index} out of range for S_{n}")
    free = list(range(1, n + 1))
    word = []
    for i in range(n - 1, -1, -1):
        f = factorial(i)
        q, index = divmod(index, f)
        word.append(free.pop(q))
    return Permutation(word)
