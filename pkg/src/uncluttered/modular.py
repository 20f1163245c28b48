"""Homogeneous sets, twins, and (anti)simplicial vertices.

A homogeneous set is a vertex set X such that every outside vertex is either
complete or anticomplete to X; the decomposition theory branches on whether a
nontrivial one exists.  Twins are a two-element special case and get their
own finders because two of the theorem's cases quantify over them directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, _mask_to_tuple


@dataclass(frozen=True)
class HomogeneousSet:
    """A nontrivial homogeneous set plus the forced outside split."""
    members: tuple[int, ...]
    complete_side: tuple[int, ...]
    anticomplete_side: tuple[int, ...]


@dataclass(frozen=True)
class TwinPair:
    u: int
    v: int
    adjacent: bool
    simplicial: bool


def _closure_mask(g: Graph, seed: int) -> int:
    """Smallest homogeneous set containing the seed mask, by saturation."""
    x = seed
    changed = True
    while changed:
        changed = False
        outside = g.full_mask & ~x
        grab = 0
        while outside:
            low = outside & -outside
            row = g.adj[low.bit_length() - 1]
            if row & x and x & ~row:
                grab |= low
            outside ^= low
        if grab:
            x |= grab
            changed = True
    return x


def smallest_module_containing(g: Graph, u: int, v: int) -> tuple[int, ...]:
    """Inclusion-minimal homogeneous set containing the pair {u, v}."""
    if u == v:
        raise InputError("module closure needs two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise InputError(f"vertex out of range for n={g.n}")
    return _mask_to_tuple(_closure_mask(g, 1 << u | 1 << v))


def find_nontrivial_homogeneous_set(g: Graph) -> HomogeneousSet | None:
    """First nontrivial homogeneous set in pair-lexicographic order, or None.

    Every nontrivial homogeneous set contains some pair's closure, and the
    closure of any pair inside it stays inside it, so scanning all pair
    closures is a complete search.  Graphs with n <= 2 have no room for one.
    """
    if g.n <= 2:
        return None
    full = g.full_mask
    for u in range(g.n):
        for v in range(u + 1, g.n):
            x = _closure_mask(g, 1 << u | 1 << v)
            if x != full:
                comp = 0
                anti = 0
                outside = full & ~x
                while outside:
                    low = outside & -outside
                    if g.adj[low.bit_length() - 1] & x:
                        comp |= low
                    else:
                        anti |= low
                    outside ^= low
                return HomogeneousSet(_mask_to_tuple(x), _mask_to_tuple(comp),
                                      _mask_to_tuple(anti))
    return None


def is_simplicial(g: Graph, v: int) -> bool:
    """True iff the neighborhood of v is a clique (isolated vertices count)."""
    nb = g.adj[v]
    m = nb
    while m:
        low = m & -m
        if nb & ~g.adj[low.bit_length() - 1] & ~low:
            return False
        m ^= low
    return True


def is_antisimplicial(g: Graph, v: int) -> bool:
    """True iff the non-neighbors of v form a stable set (universal counts)."""
    non = g.full_mask & ~g.adj[v] & ~(1 << v)
    m = non
    while m:
        low = m & -m
        if g.adj[low.bit_length() - 1] & non:
            return False
        m ^= low
    return True


def are_twins(g: Graph, u: int, v: int) -> bool:
    """True iff u and v agree on all neighbors outside the pair itself."""
    if u == v:
        raise InputError("twin check needs two distinct vertices")
    strip = ~(1 << u | 1 << v)
    return g.adj[u] & strip == g.adj[v] & strip


def find_adjacent_simplicial_twins(g: Graph) -> TwinPair | None:
    """Least pair of adjacent twins that are simplicial, or None.

    Adjacent twins share their closed neighborhood, so if one is simplicial
    the other is too; checking u alone suffices.
    """
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v) and are_twins(g, u, v) and is_simplicial(g, u):
                return TwinPair(u, v, adjacent=True, simplicial=True)
    return None


def find_nonadjacent_twins(g: Graph) -> TwinPair | None:
    """Least pair of nonadjacent twins, or None."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v) and are_twins(g, u, v):
                return TwinPair(u, v, adjacent=False,
                                simplicial=is_simplicial(g, u))
    return None


def find_simplicial_vertex(g: Graph) -> int | None:
    """Least simplicial vertex, or None."""
    for v in range(g.n):
        if is_simplicial(g, v):
            return v
    return None
