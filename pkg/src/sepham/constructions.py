"""Explicit families: the bipartite crossing construction, the value-separated
permutation family feeding it, the fixed-edge cycle kernel, and the Walecki
decomposition of K_n for odd n.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import factorial
from typing import Dict, Optional, Tuple

from .core import (
    HamiltonCycle,
    HamiltonPath,
    Permutation,
    as_seq,
    canonical_cycle,
    cycle_edges,
    inverse,
)
from .errors import BadEdge, CapExceeded, EvenN, SizeMismatch
from .oracle import STATUS_EXACT, build_compatibility_graph, max_clique_exact
from .relations import RELATIONS

DEFAULT_EXACT_CAP = 6
DEFAULT_FAMILY_CAP = 50_000


@dataclass(frozen=True)
class Family:
    """An ordered, duplicate-free family of canonical objects."""

    n: int
    kind: str  # "paths" | "cycles" | "permutations"
    members: Tuple
    meta: Dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        seqs = [as_seq(m) for m in self.members]
        if len(set(seqs)) != len(seqs):
            raise ValueError("family members are not pairwise distinct")

    def __len__(self) -> int:
        return len(self.members)

    def seqs(self):
        return [as_seq(m) for m in self.members]


def bipartite_path(n: int, alpha) -> HamiltonPath:
    """Alternating Hamilton path of K_{floor(n/2),ceil(n/2)}.

    B = [n] \\ [floor(n/2)] occupies the odd positions in increasing order;
    the A-elements follow the linear order alpha.
    """
    m = n // 2
    aseq = as_seq(alpha)
    if sorted(aseq) != list(range(1, m + 1)):
        raise SizeMismatch(f"alpha must be a permutation of [{m}]")
    b_side = list(range(m + 1, n + 1))
    out = []
    for i, b in enumerate(b_side):
        out.append(b)
        if i < m:
            out.append(aseq[i])
    return HamiltonPath(tuple(out))


def two_diff_family(
    m: int,
    mode: str = "exact",
    seed: Optional[int] = None,
    exact_cap: int = DEFAULT_EXACT_CAP,
    time_limit: Optional[float] = None,
) -> Family:
    """A family of permutations of [m] that is pairwise value-separated.

    mode="exact" runs the clique oracle and returns a maximum family
    (only up to the configured cap); mode="greedy" runs a maximal greedy
    pass, optionally over a seed-shuffled order, at any m.
    """
    meta = {"construction": "two-diff", "mode": mode, "seed": seed}
    relation = RELATIONS["value-separated"]
    if mode == "exact":
        if m > exact_cap:
            raise CapExceeded(f"exact mode capped at m={exact_cap}, got {m}")
        perms = list(itertools.permutations(range(1, m + 1)))
        g = build_compatibility_graph(perms, relation, cap=factorial(exact_cap))
        value, idx, status = max_clique_exact(g, time_limit=time_limit)
        meta["status"] = status
        members = sorted(g.objects[i] for i in idx)
        if status == STATUS_EXACT and value != factorial(m) // 2 ** (m // 2):
            raise AssertionError(
                f"exact maximum {value} != m!/2^(m/2) = {factorial(m) // 2 ** (m // 2)}"
            )
    else:
        perms = list(itertools.permutations(range(1, m + 1)))
        if seed is not None:
            random.Random(seed).shuffle(perms)
        members = []
        for p in perms:
            if all(relation(p, q) for q in members):
                members.append(p)
        members.sort()
    return Family(
        n=m,
        kind="permutations",
        members=tuple(Permutation(s) for s in members),
        meta=meta,
    )


def bipartite_crossing_family(
    n: int,
    mode: str = "exact",
    seed: Optional[int] = None,
    exact_cap: int = DEFAULT_EXACT_CAP,
) -> Family:
    """The explicit pairwise-crossing family of alternating Hamilton paths.

    Pipeline: build a value-separated family over [floor(n/2)], invert its
    members, keep the largest subfamily sharing a common last element
    (ties to the smallest value), and realize each survivor as an
    alternating path.
    """
    if n < 4:
        raise SizeMismatch(f"need n >= 4, got {n}")
    m = n // 2
    base = two_diff_family(m, mode=mode, seed=seed, exact_cap=exact_cap)
    inverses = [inverse(p) for p in base.members]
    by_last: Dict[int, list] = {}
    for p in inverses:
        by_last.setdefault(p.seq[-1], []).append(p)
    last = min(by_last, key=lambda v: (-len(by_last[v]), v))
    chosen = by_last[last]
    paths = sorted(
        (bipartite_path(n, p) for p in chosen), key=lambda h: h.seq
    )
    return Family(
        n=n,
        kind="paths",
        members=tuple(paths),
        meta={
            "construction": "bipartite-crossing",
            "mode": mode,
            "seed": seed,
            "common_last": last,
            "base_size": len(base),
        },
    )


def kernel_cycle_family(
    n: int, e: Tuple[int, int], cap: int = DEFAULT_FAMILY_CAP
) -> Family:
    """All (n-2)! Hamilton cycles of K_n through the fixed edge e."""
    u, v = e
    if u == v or not (1 <= u <= n) or not (1 <= v <= n):
        raise BadEdge(f"bad edge {e!r} for n={n}")
    if n < 3:
        raise BadEdge(f"need n >= 3, got {n}")
    if factorial(n - 2) > cap:
        raise CapExceeded(f"(n-2)! = {factorial(n - 2)} exceeds cap {cap}")
    rest = [w for w in range(1, n + 1) if w not in (u, v)]
    cycles = {canonical_cycle((u, v) + interior) for interior in itertools.permutations(rest)}
    members = tuple(sorted(cycles, key=lambda c: c.seq))
    return Family(
        n=n,
        kind="cycles",
        members=members,
        meta={"construction": "kernel-cycles", "edge": tuple(sorted((u, v)))},
    )


def walecki_decomposition(n: int):
    """Partition of the edges of K_n (n odd) into (n-1)/2 Hamilton cycles.

    Rotational zigzag: vertices 1..n-1 on a circle plus hub n; the base
    zigzag 1, 2, n-1, 3, n-2, ... is rotated (n-1)/2 times.
    """
    if n % 2 == 0:
        raise EvenN(f"Walecki decomposition needs odd n, got {n}")
    if n < 3:
        raise EvenN(f"need n >= 3, got {n}")
    m = n - 1  # circle size, even
    half = m // 2

    def zigzag(shift: int):
        # zigzag over Z_m (0-based) then relabel to 1..m, hub = n
        lo_, hi_ = 0, m - 1
        seq = []
        take_lo = True
        while lo_ <= hi_:
            seq.append(lo_ if take_lo else hi_)
            if take_lo:
                lo_ += 1
            else:
                hi_ -= 1
            take_lo = not take_lo
        return [n] + [(x + shift) % m + 1 for x in seq]

    cycles = [canonical_cycle(zigzag(s)) for s in range(half)]
    covered = set()
    for c in cycles:
        edges = cycle_edges(c.seq)
        if covered & edges:
            raise AssertionError("Walecki cycles are not edge-disjoint")
        covered |= edges
    if len(covered) != n * (n - 1) // 2:
        raise AssertionError("Walecki cycles do not cover all edges of K_n")
    return cycles
