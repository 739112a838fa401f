"""Domain types: permutations, Hamilton paths and cycles, couple orders, degree profiles.

All public values are 1-based: the ground set is [n] = {1, ..., n} and
positions run from 1 to n.  Everything here is an immutable value type;
operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Sequence, Tuple, Union

from .errors import CapExceeded, NotAPermutation, SizeMismatch

#: Hard ceiling on the ground-set size.  Every universe in this library is
#: factorial-sized, so a silent n=50 request would never finish.
MAX_N = 20

Seq = Tuple[int, ...]


def check_perm_seq(raw: Iterable[int], min_n: int = 1) -> Seq:
    """Validate that *raw* is a bijection onto [n] and return it as a tuple."""
    seq = tuple(raw)
    n = len(seq)
    if n < min_n:
        raise NotAPermutation(f"need at least {min_n} elements, got {n}")
    if n > MAX_N:
        raise CapExceeded(f"n={n} exceeds the configured maximum {MAX_N}")
    if sorted(seq) != list(range(1, n + 1)):
        raise NotAPermutation(f"{seq!r} is not a permutation of [{n}]")
    return seq


def as_seq(obj: Union["Permutation", "HamiltonPath", "HamiltonCycle", Sequence[int]]) -> Seq:
    """Accept a domain object or a bare vertex sequence, return the tuple."""
    seq = getattr(obj, "seq", None)
    if seq is not None:
        return seq
    return tuple(obj)


def same_n(a: Seq, b: Seq) -> int:
    if len(a) != len(b):
        raise SizeMismatch(f"objects over [{len(a)}] and [{len(b)}]")
    return len(a)


@dataclass(frozen=True)
class Permutation:
    """A linear order of [n]; doubles as a consecutively oriented Hamilton path."""

    seq: Seq

    def __post_init__(self) -> None:
        object.__setattr__(self, "seq", check_perm_seq(self.seq))

    @property
    def n(self) -> int:
        return len(self.seq)


@dataclass(frozen=True)
class HamiltonPath:
    """An undirected Hamilton path of K_n, stored with its smaller endpoint first."""

    seq: Seq

    def __post_init__(self) -> None:
        seq = check_perm_seq(self.seq, min_n=2)
        if seq[0] > seq[-1]:
            seq = seq[::-1]
        object.__setattr__(self, "seq", seq)

    @property
    def n(self) -> int:
        return len(self.seq)


@dataclass(frozen=True)
class HamiltonCycle:
    """A Hamilton cycle of K_n, rotated to start at 1 and oriented so seq[2] < seq[n]."""

    seq: Seq

    def __post_init__(self) -> None:
        seq = check_perm_seq(self.seq, min_n=3)
        i = seq.index(1)
        seq = seq[i:] + seq[:i]
        if seq[1] > seq[-1]:
            seq = (seq[0],) + seq[1:][::-1]
        object.__setattr__(self, "seq", seq)

    @property
    def n(self) -> int:
        return len(self.seq)


@dataclass(frozen=True)
class CoupleOrder:
    """The sequence of floor(n/2) unordered consecutive pairs of a permutation."""

    n: int
    couples: Tuple[frozenset, ...]


@dataclass
class DegreeProfile:
    """Vertex degrees of the edge-set union of two paths/cycles on [n]."""

    n: int
    deg: Dict[int, int] = field(default_factory=dict)

    def max_degree(self) -> int:
        return max(self.deg.values())


def canonical_path(raw: Iterable[int]) -> HamiltonPath:
    """Canonical representative of an undirected path: a path equals its reverse."""
    return HamiltonPath(tuple(raw))


def canonical_cycle(raw: Iterable[int]) -> HamiltonCycle:
    """Canonical representative of a cycle up to rotation and reflection."""
    return HamiltonCycle(tuple(raw))


def path_edges(seq: Seq) -> frozenset:
    """Edge set of a vertex sequence read as an undirected path."""
    return frozenset(
        (a, b) if a < b else (b, a) for a, b in zip(seq, seq[1:])
    )


def cycle_edges(seq: Seq) -> frozenset:
    """Edge set of a vertex sequence read as a cycle (closing edge included)."""
    closing = (seq[-1], seq[0]) if seq[-1] < seq[0] else (seq[0], seq[-1])
    return path_edges(seq) | {closing}


def union_degree_profile(p, q) -> DegreeProfile:
    """Degrees in the union of the edge sets of two paths over the same [n]."""
    a, b = as_seq(p), as_seq(q)
    n = same_n(a, b)
    deg = {v: 0 for v in range(1, n + 1)}
    for u, v in path_edges(a) | path_edges(b):
        deg[u] += 1
        deg[v] += 1
    return DegreeProfile(n=n, deg=deg)


def inverse(p: Permutation) -> Permutation:
    """The inverse linear order: q[p[i]] = i."""
    seq = as_seq(p)
    out = [0] * len(seq)
    for i, v in enumerate(seq, start=1):
        out[v - 1] = i
    return Permutation(tuple(out))


def couple_order(p) -> CoupleOrder:
    """Pairs {p[1],p[2]}, {p[3],p[4]}, ...; for odd n the last element is dropped."""
    seq = as_seq(p)
    n = len(seq)
    if n < 2:
        raise NotAPermutation("couple order needs n >= 2")
    couples = tuple(
        frozenset((seq[2 * i], seq[2 * i + 1])) for i in range(n // 2)
    )
    return CoupleOrder(n=n, couples=couples)


def positions(seq: Seq) -> Dict[int, int]:
    """Map each value to its 1-based position."""
    return {v: i for i, v in enumerate(seq, start=1)}
