"""Dissect a permutation's jump structure, then compare greedy vs exact R(n).

A permutation is *incompatible* with the identity when no element is
two-separated from it -- every value's next step stays close.  The counting
argument that bounds how many such permutations exist hinges on "runs of
big jumps": maximal stretches launched by a large difference.  Positions
fall into a small *free* set (run heads and a few special slots) and a
*constrained* rest, where a closeness law pins each value to a handful of
choices.
"""

import itertools

from sepham import (
    GreedyConfig,
    count_incompatible,
    greedy_family,
    incompatible_with_identity,
    oracle_quantity,
    property_uno_holds,
    run_structure,
)

p = (2, 6, 4, 1, 3, 5)
print(f"Anatomy of {p}:")
holds, bad = property_uno_holds(p)
print(f"  closeness property holds: {holds}" + ("" if holds else f" (fails at {bad})"))
rs = run_structure(p)
print(f"  runs of big jumps (head, length): {list(rs.runs)}")
print(f"  free positions:        {sorted(rs.free_positions)}")
print(f"  constrained positions: {sorted(rs.constrained_positions)}")
print(f"  incompatible with identity: {incompatible_with_identity(p)}")

print("\nHow rare is incompatibility?")
from math import factorial
for n in range(4, 8):
    c = count_incompatible(n)
    print(f"  n={n}: {c:5d} of {factorial(n):5d} permutations "
          f"({100 * c / factorial(n):5.1f}%)")

print("\nGreedy two-separated families vs the exact optimum:")
for n in (5, 6):
    lex = greedy_family(GreedyConfig(universe="permutations",
                                     relation="two-separated", n=n))
    best_shuffle = max(
        len(greedy_family(GreedyConfig(universe="permutations",
                                       relation="two-separated",
                                       n=n, order="shuffle", seed=s)))
        for s in range(8)
    )
    res = oracle_quantity("R", n, time_limit=20)
    tag = "exact" if res.status == "exact" else "best found"
    print(f"  n={n}: lex greedy {len(lex)}, best of 8 shuffles {best_shuffle}, "
          f"oracle {res.value} ({tag})")
