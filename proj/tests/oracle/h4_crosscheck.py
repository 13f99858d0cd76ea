#!/usr/bin/env python3
"""Cross-check of the H4 class count with no canonicalization during BFS.

Enumerates the mutation class as raw matrices (exact arithmetic, equality
only), then quotients by simultaneous permutation at the end.  Also checks
involution and a few alternative identifications, to pin down the orbit
count independently of the canonical-key machinery.
"""

from mutation_reference import (G, A, gmat, mutate, canonical, transpose, neg,
                                H3_SEED, H4_SEED)
from itertools import permutations
from collections import deque


def raw_class(seed, limit=500000):
    seen = {seed}
    q = deque([seed])
    n = len(seed)
    while q:
        cur = q.popleft()
        for k in range(n):
            nb = mutate(cur, k)
            if nb not in seen:
                seen.add(nb)
                if len(seen) > limit:
                    raise RuntimeError("limit")
                q.append(nb)
    return seen


def orbits(mats):
    reps = set()
    for m in mats:
        reps.add(canonical(m))
    return reps


def main():
    for name, seed in (("H3", H3_SEED), ("H4", H4_SEED)):
        raw = raw_class(seed)
        orb = orbits(raw)
        n = len(seed)
        # sanity: involution on a few members
        some = list(raw)[:50]
        assert all(mutate(mutate(m, k), k) == m for m in some for k in range(n))
        # closure under negation / transposition?
        negs = {canonical(neg(tuple(tuple(r[i * n + j] for j in range(n)) for i in range(n))))
                for r in [f for f in orb]}
        # orb elements are flat tuples; rebuild
        def unflat(f):
            return tuple(tuple(f[i * n + j] for j in range(n)) for i in range(n))
        neg_keys = {canonical(neg(unflat(f))) for f in orb}
        t_keys = {canonical(transpose(unflat(f))) for f in orb}
        print(f"{name}: raw matrices {len(raw)}, orbits {len(orb)}, "
              f"negation-closed {neg_keys == orb}, transpose-closed {t_keys == orb}, "
              f"orbits(class ∪ class^T) {len(orb | t_keys)}")


if __name__ == "__main__":
    main()
