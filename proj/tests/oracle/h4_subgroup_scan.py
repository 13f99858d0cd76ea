#!/usr/bin/env python3
"""Orbit counts of the raw H4 class under every subgroup of S4, to see which
identification (if any) yields 82."""

from mutation_reference import H4_SEED
from h4_crosscheck import raw_class
from itertools import permutations


def orbit_count_under(mats, index, group):
    parent = list(range(len(mats)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    n = 4
    for mi, m in enumerate(mats):
        for p in group:
            pm = tuple(tuple(m[p[i]][p[j]] for j in range(n)) for i in range(n))
            if pm in index:
                union(mi, index[pm])
    return len({find(i) for i in range(len(mats))})


def compose(p, q):
    return tuple(p[q[i]] for i in range(4))


def subgroups_of_s4():
    perms = list(permutations(range(4)))
    pset = set(perms)
    found = {}
    # generate all subgroups from all subsets of size <= 2 generators (enough
    # for S4: every subgroup of S4 is 2-generated)
    for g1 in perms:
        for g2 in perms:
            elems = {tuple(range(4))}
            frontier = [g1, g2]
            while frontier:
                x = frontier.pop()
                if x in elems:
                    continue
                elems.add(x)
                for y in list(elems):
                    for z in (compose(x, y), compose(y, x)):
                        if z not in elems:
                            frontier.append(z)
            found[tuple(sorted(elems))] = elems
    return list(found.values())


def main():
    raw = raw_class(H4_SEED)
    mats = list(raw)
    index = {m: i for i, m in enumerate(mats)}
    subs = subgroups_of_s4()
    print(f"subgroups found: {len(subs)}")
    results = {}
    for g in subs:
        cnt = orbit_count_under(mats, index, g)
        results.setdefault((len(g), cnt), 0)
        results[(len(g), cnt)] += 1
    for (sz, cnt), times in sorted(results.items()):
        mark = "  <== 82!" if cnt == 82 else ""
        print(f"|G|={sz:2d}  orbits={cnt:3d}  ({times} subgroup(s)){mark}")


if __name__ == "__main__":
    main()
