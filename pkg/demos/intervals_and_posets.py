"""
Intervals and interval posets
=============================

Every permutation has intervals: value ranges that sit in consecutive
positions. Ordered by inclusion they form the interval poset.
"""

from interval_posets import (build_poset, classify, intervals_of, is_simple, parse_permutation,
                             realize, to_dot)

# the proper intervals of 314297856
p = parse_permutation("314297856")
proper = sorted(iv for iv in intervals_of(p) if iv.lo != iv.hi and iv != (1, p.n))
print("proper intervals of", p, ":", " ".join(map(str, proper)))

# simple permutations have none; all of them share the dual claw poset
for w in ("3517246", "2413", "3142"):
    print(w, "simple:", is_simple(w), "dual claw:", classify(build_poset(w)).is_dual_claw)

# several permutations can share one poset; realize() picks a canonical one
P = build_poset("5123647")
print("poset of 5123647:", P)
print("canonical witness:", realize(P))
print(to_dot(P))
