"""Hamilton cycles that pairwise share an edge, from two angles.

Angle 1 (abundance): fix one edge and take every Hamilton cycle through it.
That is (n-2)! cycles, any two of which trivially share the fixed edge --
and for cycles, sharing an edge is *equivalent* to the union having a
degree-3 vertex, which we check exhaustively at n=6.

Angle 2 (scarcity): Walecki's decomposition splits the edges of K_n (odd n)
into (n-1)/2 Hamilton cycles that pairwise share *nothing*.  It is the
classical certificate that edge-sharing families cannot contain everything.
"""

import itertools
from math import factorial

from sepham import (
    cycle_edges,
    cycles_degree3_equiv,
    kernel_cycle_family,
    oracle_quantity,
    walecki_decomposition,
)

print("Kernel of the edge {1,2} in K_6:")
fam = kernel_cycle_family(6, (1, 2))
print(f"  {len(fam)} cycles (= 4! = {factorial(4)})")
for c, d in itertools.combinations(fam.members, 2):
    shares, deg3, w = cycles_degree3_equiv(c, d)
    assert shares and deg3
print("  all pairs share an edge, and every union has a degree-3 vertex")
print("  (the two conditions coincide for cycles -- checked on "
      f"{len(fam) * (len(fam) - 1) // 2} pairs)")

print("\nIs the kernel best possible at small n?  Ask the exact oracle:")
for n in (4, 5):
    res = oracle_quantity("Mcy", n)
    print(f"  Mcy({n}) = {res.value} ({res.status}); "
          f"kernel gives {factorial(n - 2)}")

print("\nWalecki decomposition of K_9:")
cycles = walecki_decomposition(9)
covered = set()
for c in cycles:
    print(f"  {c.seq}")
    edges = cycle_edges(c.seq)
    assert not covered & edges
    covered |= edges
assert len(covered) == 9 * 8 // 2
print(f"  {len(cycles)} cycles, {len(covered)} edges: a perfect partition "
      "of K_9, no two cycles share an edge")
