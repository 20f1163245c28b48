"""Exhaustive enumeration of small graphs up to isomorphism.

Graphs on n vertices are generated by extending each (n-1)-vertex
representative with a new last vertex attached along every possible
neighborhood mask, then deduplicating.  Deduplication buckets candidates by a
cheap invariant key and settles collisions with an exact isomorphism check,
so no canonical labeling is needed.  Results are cached per n and returned
sorted by their graph6 string, which makes downstream reports reproducible.
"""

from __future__ import annotations

from .errors import InputError
from .graph import Graph, are_isomorphic, invariant_key
from .graphio import to_graph6

# Known counts of graphs up to isomorphism for n = 0..8, used as a self-check
# (and by tests).  The enumeration refuses to go past MAX_CENSUS_N: the next
# step would mean millions of isomorphism buckets and is never needed here.
GRAPH_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346)
MAX_CENSUS_N = 9

_cache: dict[int, tuple[Graph, ...]] = {}


def enumerate_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on exactly n vertices, one per isomorphism class."""
    if n < 0:
        raise InputError("vertex count must be nonnegative")
    if n > MAX_CENSUS_N:
        raise InputError(f"census capped at n <= {MAX_CENSUS_N}, got {n}")
    if n in _cache:
        return _cache[n]
    if n == 0:
        reps: list[Graph] = [Graph(0)]
    else:
        buckets: dict[tuple, list[Graph]] = {}
        reps = []
        for parent in enumerate_graphs(n - 1):
            rows = parent.adj
            for mask in range(1 << (n - 1)):
                cand_rows = tuple(
                    rows[u] | ((mask >> u & 1) << (n - 1)) for u in range(n - 1)
                ) + (mask,)
                cand = Graph.from_rows(cand_rows)
                key = invariant_key(cand)
                bucket = buckets.setdefault(key, [])
                if not any(are_isomorphic(cand, seen) for seen in bucket):
                    bucket.append(cand)
                    reps.append(cand)
    reps.sort(key=to_graph6)
    out = tuple(reps)
    if n < len(GRAPH_COUNTS) and len(out) != GRAPH_COUNTS[n]:
        raise AssertionError(
            f"enumeration produced {len(out)} classes for n={n}, "
            f"expected {GRAPH_COUNTS[n]}"
        )
    _cache[n] = out
    return out
