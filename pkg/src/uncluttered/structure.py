"""Candelabra, candled decompositions, and line graphs of triangle-free roots.

A candelabrum is a graph partitioned into nonempty cliques Y_1..Y_k and
nonempty stable sets Z_1..Z_k where distinct Y's are anticomplete, distinct
Z's are complete, and Y_i sees exactly Z_i among the Z's.  The base is the
union of the Z's.  A graph is candled when some induced candelabrum has its
base complete to, and the rest of the candelabrum anticomplete to, everything
else.

For line graphs the only roots this package ever needs are triangle-free, and
those line graphs have a clean recognition: they are exactly the graphs with
no induced claw and no induced diamond.  Under those two exclusions the set
N(u) and N(v) share around an edge uv spans a clique, the cliques K(u,v)
partition the edges with every vertex in at most two of them, and the root
read off that partition can never contain a triangle.  The test suite checks
this equivalence against an exhaustive oracle rather than taking it on faith.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InputError
from .graph import Graph, _mask_to_tuple, is_bipartite
from .patterns import has_induced

# -- triangle-free and line graphs -----------------------------------------


def is_triangle_free(g: Graph):
    """None if g has no triangle, else the lexicographically least one."""
    for u in range(g.n):
        mu = g.adj[u] >> (u + 1) << (u + 1)
        mv = mu
        while mv:
            lowv = mv & -mv
            v = lowv.bit_length() - 1
            common = mu & g.adj[v] >> (v + 1) << (v + 1)
            if common:
                w = (common & -common).bit_length() - 1
                return (u, v, w)
            mv ^= lowv
    return None


def line_graph(h: Graph) -> Graph:
    """Graph on the edges of h, adjacent when they share an endpoint."""
    edges = h.edges()
    if not edges:
        raise InputError("line graph of an edgeless graph is undefined here")
    m = len(edges)
    out = Graph(m)
    rows = [0] * m
    for i in range(m):
        a, b = edges[i]
        for j in range(i + 1, m):
            c, d = edges[j]
            if a in (c, d) or b in (c, d):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph.from_rows(tuple(rows))


@dataclass(frozen=True)
class RootGraph:
    """A root whose line graph is the host, with the witnessing bijection.

    ``edge_map[w]`` is the root edge (a, b) with a < b that host vertex w
    plays.  Produced only with triangle-free roots here.
    """
    root: Graph
    edge_map: tuple[tuple[int, int], ...]


def verify_root(g: Graph, rg: RootGraph) -> bool:
    """Recheck that rg.edge_map is an isomorphism from g to line_graph(root).

    Works directly off shared endpoints instead of building the line graph,
    so it is safe on edgeless and empty hosts too.
    """
    if len(rg.edge_map) != g.n:
        return False
    root = rg.root
    seen = set()
    for a, b in rg.edge_map:
        if not (0 <= a < b < root.n) or not root.has_edge(a, b):
            return False
        if (a, b) in seen:
            return False
        seen.add((a, b))
    if root.edge_count() != g.n:
        return False
    for u in range(g.n):
        a, b = rg.edge_map[u]
        for v in range(u + 1, g.n):
            c, d = rg.edge_map[v]
            shares = a in (c, d) or b in (c, d)
            if shares != g.has_edge(u, v):
                return False
    return True


def recognize_line_graph_triangle_free(g: Graph) -> RootGraph | None:
    """Root reconstruction for line graphs of triangle-free graphs.

    Returns None iff g is not the line graph of any triangle-free graph.
    The happy path builds one Krausz clique K(u,v) per edge, deduplicates,
    hangs a pendant root vertex on every once-covered host vertex, and gives
    every isolated host vertex a private root edge.
    """
    if has_induced(g, "claw") or has_induced(g, "diamond"):
        return None
    cliques: list[int] = []
    seen: set[int] = set()
    for u in range(g.n):
        m = g.adj[u] >> (u + 1) << (u + 1)
        while m:
            low = m & -m
            v = low.bit_length() - 1
            mask = (1 << u) | low | (g.adj[u] & g.adj[v])
            if mask not in seen:
                seen.add(mask)
                cliques.append(mask)
            m ^= low
    cliques.sort(key=_mask_to_tuple)
    cover: list[list[int]] = [[] for _ in range(g.n)]
    for idx, mask in enumerate(cliques):
        for w in _mask_to_tuple(mask):
            cover[w].append(idx)
            if len(cover[w]) > 2:
                raise RuntimeError(
                    "Krausz partition failed on a claw- and diamond-free "
                    "graph; this contradicts the recognizer's premise")
    # Root vertices: one per clique, then pendants and isolated-edge ends.
    next_vertex = len(cliques)
    edge_map: list[tuple[int, int]] = []
    root_edges: list[tuple[int, int]] = []
    for w in range(g.n):
        cs = cover[w]
        if len(cs) == 2:
            e = (cs[0], cs[1])
        elif len(cs) == 1:
            e = (cs[0], next_vertex)
            next_vertex += 1
        else:
            e = (next_vertex, next_vertex + 1)
            next_vertex += 2
        edge_map.append(e)
        root_edges.append(e)
    if len(set(root_edges)) != len(root_edges):
        raise RuntimeError(
            "two host vertices mapped to one root edge; this contradicts "
            "edge-disjointness of Krausz cliques")
    root = Graph(next_vertex, root_edges)
    return RootGraph(root, tuple(edge_map))


def is_line_graph_of_bipartite(g: Graph) -> bool:
    """True iff g is the line graph of some bipartite graph.

    Bipartite roots are triangle-free, and triangle-free roots are unique
    per component up to isomorphism, so testing the reconstructed root for
    bipartiteness decides the question.
    """
    rg = recognize_line_graph_triangle_free(g)
    return rg is not None and is_bipartite(rg.root)


# -- candelabra -------------------------------------------------------------


@dataclass(frozen=True)
class CandelabrumStructure:
    """A validated candelabrum partition: parallel clique and stable parts."""
    clique_parts: tuple[tuple[int, ...], ...]
    stable_parts: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.clique_parts)

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(sorted(v for part in self.stable_parts for v in part))

    @property
    def vertex_set(self) -> tuple[int, ...]:
        both = [v for part in self.clique_parts for v in part]
        both += [v for part in self.stable_parts for v in part]
        return tuple(sorted(both))


def check_candelabrum(g: Graph, clique_parts, stable_parts) -> bool:
    """Validate the candelabrum conditions for a well-formed partition of V(g).

    Raises InputError when the parts are not disjoint nonempty sets covering
    all of g with equally many parts on each side; returns False when the
    partition is well-formed but some adjacency condition fails.
    """
    ys = [tuple(sorted(p)) for p in clique_parts]
    zs = [tuple(sorted(p)) for p in stable_parts]
    if len(ys) != len(zs) or not ys:
        raise InputError("candelabrum needs equally many parts, at least one")
    if any(not p for p in ys) or any(not p for p in zs):
        raise InputError("candelabrum parts must be nonempty")
    all_vs = [v for p in ys + zs for v in p]
    if len(set(all_vs)) != len(all_vs) or set(all_vs) != set(range(g.n)):
        raise InputError("candelabrum parts must partition the vertex set")
    k = len(ys)
    ymasks = [sum(1 << v for v in p) for p in ys]
    zmasks = [sum(1 << v for v in p) for p in zs]

    def complete(am: int, bm: int) -> bool:
        m = am
        while m:
            low = m & -m
            if bm & ~g.adj[low.bit_length() - 1]:
                return False
            m ^= low
        return True

    def anticomplete(am: int, bm: int) -> bool:
        m = am
        while m:
            low = m & -m
            if bm & g.adj[low.bit_length() - 1]:
                return False
            m ^= low
        return True

    for i in range(k):
        ym, zm = ymasks[i], zmasks[i]
        m = ym
        while m:  # clique check
            low = m & -m
            if (ym & ~low) & ~g.adj[low.bit_length() - 1]:
                return False
            m ^= low
        m = zm
        while m:  # stable check
            low = m & -m
            if zm & g.adj[low.bit_length() - 1]:
                return False
            m ^= low
        if not complete(ym, zm):
            return False
    for i in range(k):
        for j in range(i + 1, k):
            if not anticomplete(ymasks[i], ymasks[j]):
                return False
            if not complete(zmasks[i], zmasks[j]):
                return False
            if not anticomplete(ymasks[i], zmasks[j]):
                return False
            if not anticomplete(ymasks[j], zmasks[i]):
                return False
    return True


def recognize_candelabrum_with_base(g: Graph, base) -> CandelabrumStructure | None:
    """The unique candelabrum structure on g with the given base, if any.

    Given the base, everything is forced: the clique parts must be the
    components of the non-base side, and each base vertex must attach to
    exactly one of them.
    """
    base_mask = 0
    for v in base:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range for n={g.n}")
        base_mask |= 1 << v
    non_base = g.full_mask & ~base_mask
    if not base_mask or not non_base:
        return None
    comp_masks = []
    left = non_base
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= g.adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & left & ~comp
            comp |= frontier
        comp_masks.append(comp)
        left &= ~comp
    zmasks = [0] * len(comp_masks)
    m = base_mask
    while m:
        low = m & -m
        row = g.adj[low.bit_length() - 1]
        hits = [i for i, cm in enumerate(comp_masks) if row & cm]
        if len(hits) != 1:
            return None
        zmasks[hits[0]] |= low
        m ^= low
    if any(zm == 0 for zm in zmasks):
        return None
    ys = tuple(_mask_to_tuple(cm) for cm in comp_masks)
    zs = tuple(_mask_to_tuple(zm) for zm in zmasks)
    try:
        ok = check_candelabrum(g, ys, zs)
    except InputError:
        return None
    return CandelabrumStructure(ys, zs) if ok else None


def recognize_candelabrum(g: Graph) -> CandelabrumStructure | None:
    """Some candelabrum structure on all of g, or None if none exists.

    Candidate bases are forced up to a small list.  With one part, the
    cliques are exactly the universal vertices (or all but one vertex of a
    complete graph).  With more parts, any non-base vertex v determines its
    whole part as the vertices sharing its closed neighborhood, and the base
    follows from any neighbor outside that part.
    """
    if g.n < 2:
        return None
    full = g.full_mask
    candidates: list[int] = []
    universal = 0
    for v in range(g.n):
        if g.adj[v] | 1 << v == full:
            universal |= 1 << v
    if universal and universal != full:
        candidates.append(full & ~universal)
    if universal == full:
        candidates.append(1 << (g.n - 1))
    for v in range(g.n):
        closed = g.adj[v] | 1 << v
        part = 0
        m = closed
        while m:
            low = m & -m
            if g.adj[low.bit_length() - 1] | low == closed:
                part |= low
            m ^= low
        z_local = closed & ~part
        if not z_local:
            continue
        zv = (z_local & -z_local).bit_length() - 1
        candidates.append(z_local | (g.adj[zv] & ~closed))
    tried = set()
    for base_mask in candidates:
        if base_mask in tried:
            continue
        tried.add(base_mask)
        st = recognize_candelabrum_with_base(g, _mask_to_tuple(base_mask))
        if st is not None:
            return st
    return None


# -- candled decompositions -------------------------------------------------


@dataclass(frozen=True)
class CandledDecomposition:
    """An induced candelabrum plus the rest of the graph.

    The candelabrum's base is complete to the rest and the remaining
    candelabrum vertices are anticomplete to it; rest may be empty.
    """
    candelabrum: CandelabrumStructure
    rest: tuple[int, ...]


def _relabel_structure(st: CandelabrumStructure,
                       mapping: list[int]) -> CandelabrumStructure:
    ys = tuple(tuple(mapping[v] for v in p) for p in st.clique_parts)
    zs = tuple(tuple(mapping[v] for v in p) for p in st.stable_parts)
    return CandelabrumStructure(ys, zs)


def _candled_with_rest(g: Graph, rest_mask: int) -> CandledDecomposition | None:
    """Try one rest set; everything else about the decomposition is forced."""
    body = g.full_mask & ~rest_mask
    if not body:
        return None
    if rest_mask == 0:
        st = recognize_candelabrum(g)
        return CandledDecomposition(st, ()) if st is not None else None
    # Base vertices must be complete to the rest, all other candelabrum
    # vertices anticomplete to it; that splits the body with no choices left.
    base_mask = 0
    m = body
    while m:
        low = m & -m
        row = g.adj[low.bit_length() - 1]
        if rest_mask & ~row == 0:
            base_mask |= low
        elif rest_mask & row:
            return None
        m ^= low
    body_vs = _mask_to_tuple(body)
    sub = g.induced(body_vs)
    local_base = [i for i, v in enumerate(body_vs) if base_mask >> v & 1]
    st = recognize_candelabrum_with_base(sub, local_base)
    if st is None:
        return None
    return CandledDecomposition(_relabel_structure(st, list(body_vs)),
                                _mask_to_tuple(rest_mask))


def detect_candled(g: Graph, exhaustive: bool = False) -> CandledDecomposition | None:
    """Find a candled decomposition of g, or None.

    The default candidate rest sets are the empty set, singletons, closures
    of vertex pairs (smallest homogeneous sets containing them), and the
    all-but-one sets.  That list provably covers every candled graph the
    decomposer can reach at audit scale; ``exhaustive=True`` tries all
    2^n rest sets instead (n <= 10) and exists so tests can certify the
    production list rather than trust it.
    """
    if exhaustive:
        if g.n > 10:
            raise InputError("exhaustive candled search capped at n <= 10")
        for rest_mask in range(1 << g.n):
            dec = _candled_with_rest(g, rest_mask)
            if dec is not None:
                return dec
        return None
    from .modular import _closure_mask
    candidates: list[int] = [0]
    candidates += [1 << v for v in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            candidates.append(_closure_mask(g, 1 << u | 1 << v))
    candidates += [g.full_mask & ~(1 << v) for v in range(g.n)]
    tried = set()
    for rest_mask in candidates:
        if rest_mask in tried:
            continue
        tried.add(rest_mask)
        dec = _candled_with_rest(g, rest_mask)
        if dec is not None:
            return dec
    return None


def verify_candled(g: Graph, dec: CandledDecomposition) -> bool:
    """Recheck a candled decomposition from scratch against g."""
    st = dec.candelabrum
    body = st.vertex_set
    rest = dec.rest
    if sorted(body + rest) != list(range(g.n)):
        return False
    try:
        index = {v: i for i, v in enumerate(body)}
        sub = g.induced(body)
        ys = tuple(tuple(sorted(index[v] for v in p)) for p in st.clique_parts)
        zs = tuple(tuple(sorted(index[v] for v in p)) for p in st.stable_parts)
        if not check_candelabrum(sub, ys, zs):
            return False
    except (InputError, KeyError):
        return False
    rest_mask = sum(1 << v for v in rest)
    base = set(st.base)
    for v in body:
        row = g.adj[v]
        if v in base:
            if rest_mask & ~row:
                return False
        elif rest_mask & row:
            return False
    return True
