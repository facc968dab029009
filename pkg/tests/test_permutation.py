from itertools import combinations, permutations
from math import factorial

from hypothesis import given, strategies as st
import pytest

from interval_posets.errors import (ArityMismatch, IndexOutOfRange, MalformedInput,
                                    NoSimpleOfThatSize, NotAPermutation)
from interval_posets.permutation import (Interval, Permutation, direct_sum, inflate,
                                         intervals_of, is_block_wise_simple, is_separable,
                                         is_simple, parse_permutation, permutations_of, rank,
                                         skew_sum, smallest_simple, unrank)


def brute_intervals(word):
    # definition: value range [a,b] occupies a contiguous block of positions
    n = len(word)
    pos = {v: i for i, v in enumerate(word)}
    out = set()
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            ps = sorted(pos[v] for v in range(a, b + 1))
            if ps == list(range(ps[0], ps[0] + len(ps))):
                out.add((a, b))
    return out


def contains_pattern(word, *patterns):
    k = len(patterns[0])
    for idx in combinations(range(len(word)), k):
        sub = [word[i] for i in idx]
        s = sorted(sub)
        if tuple(s.index(x) + 1 for x in sub) in patterns:
            return True
    return False


def trivial(n):
    return {(i, i) for i in range(1, n + 1)} | {(1, n)}


perm_words = st.integers(1, 9).flatmap(lambda n: st.permutations(range(1, n + 1)))


def test_parse_digit_string():
    assert parse_permutation("314297856").word == (3, 1, 4, 2, 9, 7, 8, 5, 6)
    assert parse_permutation("1").word == (1,)


def test_parse_separated():
    assert parse_permutation("2,4,1,3").word == (2, 4, 1, 3)
    assert parse_permutation("2 4 1 3").word == (2, 4, 1, 3)
    assert parse_permutation("10,1,2,3,4,5,6,7,8,9").n == 10


@pytest.mark.parametrize("text", ["2,x,1", "12a", "", "1234567891"])
def test_parse_malformed(text):
    with pytest.raises(MalformedInput):
        parse_permutation(text)


@pytest.mark.parametrize("text", ["1,1,2", "2,3", "0"])
def test_parse_not_permutation(text):
    with pytest.raises(NotAPermutation):
        parse_permutation(text)


def test_str_round_trip():
    assert str(parse_permutation("2413")) == "2413"
    p = Permutation(range(12, 0, -1))
    assert parse_permutation(str(p)) == p


def test_intervals_worked_example():
    ivs = intervals_of("314297856")
    proper = {iv for iv in ivs if iv not in trivial(9)}
    assert proper == {(5, 9), (1, 4), (5, 6), (7, 8), (7, 9), (5, 8)}
    assert trivial(9) <= ivs


def test_intervals_simple_and_singleton():
    assert intervals_of("3517246") == trivial(7)
    assert intervals_of("1") == {Interval(1, 1)}


@given(perm_words)
def test_intervals_match_definition(word):
    assert intervals_of(Permutation(word)) == brute_intervals(word)


def test_interval_algebra_exhaustive():
    for n in range(1, 8):
        for word in permutations(range(1, n + 1)):
            ivs = intervals_of(Permutation(word))
            for I, J in combinations(ivs, 2):
                if not I.overlaps(J):
                    continue
                I, J = sorted((I, J))
                assert {(I.lo, J.hi), (J.lo, I.hi), (I.lo, J.lo - 1), (I.hi + 1, J.hi)} <= ivs


def test_is_simple():
    assert is_simple("3517246")
    assert is_simple("2413")
    assert is_simple("3142")
    assert is_simple("1")
    assert not is_simple("12")
    assert not is_simple("21")
    assert not any(is_simple(w) for w in permutations(range(1, 4)))
    assert not is_simple("314297856")


def test_sums():
    assert str(direct_sum("45213", "312")) == "45213867"
    assert str(direct_sum("1", "1")) == "12"
    assert str(skew_sum("1", "12")) == "312"
    assert str(skew_sum("12", "213")) == "45213"


def test_inflate():
    assert str(inflate("21", ["1", "12"])) == "312"
    assert str(inflate("12", ["21", "1"])) == "213"
    assert str(inflate("2413", ["1"] * 4)) == "2413"
    with pytest.raises(ArityMismatch):
        inflate("21", ["1"])


@given(perm_words, st.data())
def test_inflate_sizes_and_identity(skel, data):
    blocks = [data.draw(st.integers(1, 3).flatmap(lambda k: st.permutations(range(1, k + 1))))
              for _ in skel]
    out = inflate(Permutation(skel), [Permutation(b) for b in blocks])
    assert out.n == sum(len(b) for b in blocks)
    assert inflate(Permutation(skel), [Permutation((1,))] * len(skel)) == Permutation(skel)


def test_inflate_matches_sums():
    p, q = Permutation("2413"), Permutation("132")
    assert inflate("12", [p, q]) == direct_sum(p, q)
    assert inflate("21", [p, q]) == skew_sum(p, q)


def test_is_separable_examples():
    assert is_separable("45213867")
    assert not is_separable("2413")
    assert not is_separable("3142")
    assert is_separable("1")


def test_separable_iff_avoids_2413_3142():
    for n in range(1, 9):
        for word in permutations(range(1, n + 1)):
            avoids = not contains_pattern(word, (2, 4, 1, 3), (3, 1, 4, 2))
            assert is_separable(Permutation(word)) == avoids, word


def test_block_wise_simple():
    assert is_block_wise_simple("4253716")
    assert not is_simple("4253716")
    assert is_block_wise_simple("2413")
    for n in (2, 3):
        assert not any(is_block_wise_simple(Permutation(w)) for w in permutations(range(1, n + 1)))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_block_wise_simple_iff_simple_small(n):
    for word in permutations(range(1, n + 1)):
        p = Permutation(word)
        assert is_block_wise_simple(p) == is_simple(p)


def brute_smallest_simple(k):
    for word in permutations(range(1, k + 1)):
        if is_simple(Permutation(word)):
            return Permutation(word)


@pytest.mark.parametrize("k", [1, 4, 5, 6, 7])
def test_smallest_simple_matches_scan(k):
    assert smallest_simple(k) == brute_smallest_simple(k)


def test_smallest_simple_values():
    assert str(smallest_simple(4)) == "2413"
    assert str(smallest_simple(7)) == "2415736"
    for k in range(8, 13):
        assert is_simple(smallest_simple(k))
    with pytest.raises(NoSimpleOfThatSize):
        smallest_simple(2)
    with pytest.raises(NoSimpleOfThatSize):
        smallest_simple(3)


def test_permutations_of_and_rank():
    perms = list(permutations_of(3))
    assert len(perms) == 6
    assert str(unrank(3, 0)) == "123"
    assert rank(unrank(9, 12345)) == 12345
    assert [rank(p) for p in permutations_of(4)] == list(range(24))
    assert list(permutations_of(4, 5, 9)) == [unrank(4, i) for i in range(5, 9)]
    with pytest.raises(IndexOutOfRange):
        unrank(3, 6)


@given(st.integers(1, 10).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, factorial(n) - 1))))
def test_rank_unrank_inverse(args):
    n, i = args
    assert rank(unrank(n, i)) == i
