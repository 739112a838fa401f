"""The greedy elimination algorithm as a reusable engine over any
separation relation and any enumerable universe.

A single filtered pass in the configured visit order (admit a candidate iff
it is related to every admitted member) is observationally equivalent to
choose-and-eliminate, without materializing the universe as a mutable set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import factorial
from typing import Optional

from .constructions import Family
from .core import HamiltonCycle, HamiltonPath, Permutation
from .errors import CapExceeded, UnknownRelation
from .relations import RELATIONS
from .universes import get_universe, universe_size

DEFAULT_UNIVERSE_CAP = factorial(10)
DEFAULT_SHUFFLE_CAP = factorial(8)

_KIND_TO_CLS = {
    "permutations": Permutation,
    "paths": HamiltonPath,
    "cycles": HamiltonCycle,
}


@dataclass(frozen=True)
class GreedyConfig:
    universe: str  # "permutations" | "paths" | "bipartite-paths" | "cycles"
    relation: str  # key into relations.RELATIONS
    n: int
    order: str = "lex"  # "lex" | "shuffle"
    seed: Optional[int] = None


def greedy_family(
    cfg: GreedyConfig,
    universe_cap: int = DEFAULT_UNIVERSE_CAP,
    shuffle_cap: int = DEFAULT_SHUFFLE_CAP,
) -> Family:
    """Maximal pairwise-related family built by a single greedy pass.

    Identical config yields an identical family.  The shuffle order
    materializes the universe and therefore has a tighter cap than
    lexicographic streaming.
    """
    try:
        relation = RELATIONS[cfg.relation]
    except KeyError:
        raise UnknownRelation(cfg.relation) from None
    enum, kind = get_universe(cfg.universe)
    size = universe_size(cfg.universe, cfg.n)
    if size > universe_cap:
        raise CapExceeded(f"universe size {size} exceeds cap {universe_cap}")
    if cfg.order == "shuffle":
        if cfg.seed is None:
            raise ValueError("shuffle order requires a seed")
        if size > shuffle_cap:
            raise CapExceeded(
                f"shuffle order materializes the universe; size {size} exceeds "
                f"cap {shuffle_cap}"
            )
        candidates = list(enum(cfg.n))
        random.Random(cfg.seed).shuffle(candidates)
    elif cfg.order == "lex":
        candidates = enum(cfg.n)
    else:
        raise ValueError(f"unknown order {cfg.order!r}")
    admitted = []
    for c in candidates:
        if all(relation(c, q) for q in admitted):
            admitted.append(c)
    cls = _KIND_TO_CLS[kind]
    members = sorted((cls(s) for s in admitted), key=lambda o: o.seq)
    return Family(
        n=cfg.n,
        kind=kind,
        members=tuple(members),
        meta={
            "construction": "greedy",
            "universe": cfg.universe,
            "relation": cfg.relation,
            "order": cfg.order,
            "seed": cfg.seed,
        },
    )
