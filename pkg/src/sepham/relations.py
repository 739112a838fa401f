"""Pairwise separation predicates, each returning a re-verifiable witness.

Witness tie-breaking is deterministic: the smallest qualifying vertex,
position, or edge under natural ordering is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .core import as_seq, cycle_edges, positions, same_n, union_degree_profile
from .errors import SameCycle

CROSSING_VERTEX = "CrossingVertex"
TWO_DIFFERENT_ELEMENT = "TwoDifferentElement"
VALUE_SEPARATED_POSITION = "ValueSeparatedPosition"
TWO_SEPARATED_VERTEX = "TwoSeparatedVertex"
SHARED_EDGE = "SharedEdge"


@dataclass(frozen=True)
class Witness:
    kind: str
    payload: object


def _neighbors(seq):
    n = len(seq)
    nb = {v: set() for v in seq}
    for i, v in enumerate(seq):
        if i > 0:
            nb[v].add(seq[i - 1])
        if i < n - 1:
            nb[v].add(seq[i + 1])
    return nb


def is_crossing(p, q) -> Optional[Witness]:
    """Smallest vertex of union degree 4, i.e. internal in both paths with
    disjoint neighbor pairs; None if the paths are not crossing."""
    a, b = as_seq(p), as_seq(q)
    n = same_n(a, b)
    na, nb = _neighbors(a), _neighbors(b)
    for v in range(1, n + 1):
        sa, sb = na[v], nb[v]
        if len(sa) == 2 and len(sb) == 2 and not (sa & sb):
            return Witness(CROSSING_VERTEX, v)
    return None


def is_two_different(a, b) -> Optional[Witness]:
    """Smallest element whose positions differ by >= 2 with neither position last."""
    x, y = as_seq(a), as_seq(b)
    n = same_n(x, y)
    px, py = positions(x), positions(y)
    for e in range(1, n + 1):
        i, j = px[e], py[e]
        if abs(i - j) >= 2 and i != n and j != n:
            return Witness(TWO_DIFFERENT_ELEMENT, e)
    return None


def is_value_separated(a, b) -> Optional[Witness]:
    """Smallest position at which the two permutations' values differ by >= 2."""
    x, y = as_seq(a), as_seq(b)
    same_n(x, y)
    for i, (u, v) in enumerate(zip(x, y), start=1):
        if abs(u - v) >= 2:
            return Witness(VALUE_SEPARATED_POSITION, i)
    return None


def is_two_separated(a, b) -> Optional[Witness]:
    """Smallest vertex whose two immediate successors in the two linear orders
    are four distinct elements."""
    x, y = as_seq(a), as_seq(b)
    n = same_n(x, y)
    px, py = positions(x), positions(y)
    for e in range(1, n + 1):
        i, j = px[e], py[e]
        if i <= n - 2 and j <= n - 2:
            if len({x[i], x[i + 1], y[j], y[j + 1]}) == 4:
                return Witness(TWO_SEPARATED_VERTEX, e)
    return None


def cycles_degree3_equiv(c, d) -> Tuple[bool, bool, Optional[Witness]]:
    """Evaluate both sides of the shared-edge / degree-3 equivalence independently.

    Returns (shares_edge, has_degree3_vertex, witness) where the witness is the
    smallest shared edge if one exists.  Raises SameCycle on identical cycles:
    the relation is irreflexive and a duplicate signals a caller bug.
    """
    x, y = as_seq(c), as_seq(d)
    same_n(x, y)
    if x == y:
        raise SameCycle(f"identical cycles {x!r}")
    shared = cycle_edges(x) & cycle_edges(y)
    shares_edge = bool(shared)
    deg = _cycle_union_degrees(x, y)
    has_degree3 = any(v == 3 for v in deg.values())
    witness = Witness(SHARED_EDGE, min(shared)) if shared else None
    return shares_edge, has_degree3, witness


def _cycle_union_degrees(x, y):
    deg = {v: 0 for v in x}
    for u, v in cycle_edges(x) | cycle_edges(y):
        deg[u] += 1
        deg[v] += 1
    return deg


def verify_witness(a, b, w: Witness) -> bool:
    """Re-verify a witness against the raw definition computed from scratch."""
    x, y = as_seq(a), as_seq(b)
    n = len(x)
    if w.kind == CROSSING_VERTEX:
        return union_degree_profile(x, y).deg[w.payload] == 4
    if w.kind == TWO_DIFFERENT_ELEMENT:
        i, j = positions(x)[w.payload], positions(y)[w.payload]
        return abs(i - j) >= 2 and i != n and j != n
    if w.kind == VALUE_SEPARATED_POSITION:
        i = w.payload
        return abs(x[i - 1] - y[i - 1]) >= 2
    if w.kind == TWO_SEPARATED_VERTEX:
        i, j = positions(x)[w.payload], positions(y)[w.payload]
        return (
            i <= n - 2
            and j <= n - 2
            and len({x[i], x[i + 1], y[j], y[j + 1]}) == 4
        )
    if w.kind == SHARED_EDGE:
        return w.payload in (cycle_edges(x) & cycle_edges(y))
    raise ValueError(f"unknown witness kind {w.kind!r}")


def shared_edge_bool(c, d) -> bool:
    """Pair relation used when building cycle families: distinct cycles sharing an edge."""
    x, y = as_seq(c), as_seq(d)
    if x == y:
        return False
    return bool(cycle_edges(x) & cycle_edges(y))


#: Name -> boolean pair predicate, as used by the greedy engine and the oracle.
RELATIONS = {
    "crossing": lambda a, b: is_crossing(a, b) is not None,
    "two-different": lambda a, b: is_two_different(a, b) is not None,
    "value-separated": lambda a, b: is_value_separated(a, b) is not None,
    "two-separated": lambda a, b: is_two_separated(a, b) is not None,
    "shared-edge": shared_edge_bool,
}
