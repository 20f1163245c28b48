"""Coloring: exact small-graph oracles and the constructive bounded colorer.

The constructive path colors any uncluttered graph with at most twice its
clique number of colors by structural recursion: palettes merge across
components, stack across anticomponents, extend over a simplicial vertex,
copy across nonadjacent twins, and bottom out in one of two base cases.  A
line graph of a triangle-free root inherits a fan-rotation edge coloring of
the root (at most max degree + 1 colors); the complement of one is colored
through a greedy maximal matching, whose matched endpoints cover every root
edge and hand each one the color of its smallest covering endpoint.

The exact clique and chromatic oracles exist to audit that construction, not
to replace it; both are branch-and-bound over bitmasks and meant for n well
under twenty.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, NotUnclutteredError, TheoremViolationError
from .graph import Graph, _mask_to_tuple
from .graphio import to_graph6
from .modular import find_nonadjacent_twins, find_simplicial_vertex
from .patterns import is_uncluttered
from .structure import is_triangle_free, line_graph, recognize_line_graph_triangle_free


@dataclass(frozen=True)
class Coloring:
    """A proper vertex coloring with its contiguous palette size and the
    clique number it was measured against."""
    colors: tuple[int, ...]
    num_colors: int
    omega_used: int

    def to_json_dict(self) -> dict:
        return {"colors": list(self.colors),
                "num_colors": self.num_colors,
                "omega": self.omega_used}


@dataclass(frozen=True)
class EdgeColoring:
    """A proper edge coloring; assignment maps (a, b) with a < b to a color."""
    assignment: dict
    num_colors: int


def is_proper_coloring(g: Graph, colors) -> bool:
    if len(colors) != g.n:
        return False
    for u, v in g.edges():
        if colors[u] == colors[v]:
            return False
    return True


def is_proper_edge_coloring(h: Graph, assignment: dict) -> bool:
    edges = h.edges()
    if sorted(assignment.keys()) != edges:
        return False
    for v in range(h.n):
        seen = set()
        for u in h.neighbors(v):
            c = assignment[(min(u, v), max(u, v))]
            if c in seen:
                return False
            seen.add(c)
    return True


# -- exact oracles ----------------------------------------------------------


def max_clique(g: Graph) -> tuple[int, ...]:
    """One maximum clique, via branch and bound with a greedy coloring bound."""
    adj = g.adj
    best = 0

    def expand(r: int, r_size: int, p: int) -> None:
        nonlocal best
        if not p:
            if r_size > best.bit_count():
                best = r
            return
        # Order p by greedy coloring; color index bounds the clique extension.
        order: list[tuple[int, int]] = []
        q = p
        color = 0
        while q:
            color += 1
            avail = q
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append((v, color))
                avail &= ~adj[v] & ~low
                q &= ~low
        for v, color in reversed(order):
            if r_size + color <= best.bit_count():
                return
            expand(r | 1 << v, r_size + 1, p & adj[v])
            p &= ~(1 << v)

    expand(0, 0, g.full_mask)
    return _mask_to_tuple(best)


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def _greedy_color_count(g: Graph) -> int:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    colors = [-1] * g.n
    top = 0
    for v in order:
        taken = {colors[w] for w in g.neighbors(v) if colors[w] >= 0}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
        top = max(top, c + 1)
    return top


def _colorable(g: Graph, k: int, seed: tuple[int, ...]) -> bool:
    """Exact k-colorability, symmetry-broken by precoloring a maximum clique."""
    if len(seed) > k:
        return False
    colors = [-1] * g.n
    for i, v in enumerate(seed):
        colors[v] = i
    rest = sorted((v for v in range(g.n) if colors[v] < 0),
                  key=lambda v: (-g.degree(v), v))

    def dfs(i: int, used: int) -> bool:
        if i == len(rest):
            return True
        v = rest[i]
        taken = 0
        for w in g.neighbors(v):
            if colors[w] >= 0:
                taken |= 1 << colors[w]
        # New color classes are opened in ascending order only.
        limit = min(used + 1, k)
        for c in range(limit):
            if taken >> c & 1:
                continue
            colors[v] = c
            if dfs(i + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return dfs(0, len(seed))


def chromatic_number_exact(g: Graph) -> int:
    """Exact chromatic number by trying palette sizes up from the clique bound."""
    if g.n > 16:
        raise InputError("exact chromatic oracle capped at n <= 16")
    if g.n == 0:
        return 0
    seed = max_clique(g)
    lb = len(seed)
    ub = _greedy_color_count(g)
    for k in range(lb, ub):
        if _colorable(g, k, seed):
            return k
    return ub


# -- edge coloring ----------------------------------------------------------


def vizing_edge_color(h: Graph) -> EdgeColoring:
    """Proper edge coloring with at most max-degree + 1 colors.

    Classic fan construction: insert edges one at a time; grow a maximal fan
    at one endpoint, flip a two-colored alternating path if the needed color
    is busy, then rotate a fan prefix and finish it with that color.
    """
    edges = h.edges()
    if not edges:
        return EdgeColoring({}, 0)
    delta = max(h.degree(v) for v in range(h.n))
    palette = delta + 1
    full = (1 << palette) - 1
    at: list[dict[int, int]] = [dict() for _ in range(h.n)]
    used = [0] * h.n
    color_of: dict[tuple[int, int], int] = {}

    def set_color(a: int, b: int, c: int) -> None:
        color_of[(a, b) if a < b else (b, a)] = c
        at[a][c] = b
        at[b][c] = a
        used[a] |= 1 << c
        used[b] |= 1 << c

    def unset_color(a: int, b: int) -> int:
        c = color_of.pop((a, b) if a < b else (b, a))
        del at[a][c]
        del at[b][c]
        used[a] &= ~(1 << c)
        used[b] &= ~(1 << c)
        return c

    def least_free(v: int) -> int:
        m = full & ~used[v]
        return (m & -m).bit_length() - 1

    for u, v in edges:
        fan = [v]
        in_fan = {v}
        while True:
            free_last = full & ~used[fan[-1]]
            m = free_last & used[u]
            nxt = None
            while m:
                c0 = (m & -m).bit_length() - 1
                w = at[u][c0]
                if w not in in_fan:
                    nxt = w
                    break
                m &= m - 1
            if nxt is None:
                break
            fan.append(nxt)
            in_fan.add(nxt)
        c = least_free(u)
        d = least_free(fan[-1])
        if d != c and not ((full & ~used[u]) >> d & 1):
            # Flip the alternating path of colors d, c starting at u.  u has
            # no c edge, so the walk is a path and never returns to u.
            path = []
            cur, want = u, d
            while want in at[cur]:
                nxt_v = at[cur][want]
                path.append((cur, nxt_v))
                cur = nxt_v
                want = c if want == d else d
            old = [unset_color(a, b) for a, b in path]
            for (a, b), cc in zip(path, old):
                set_color(a, b, d if cc == c else c)
        # Least fan prefix that is still a fan and ends where d is free.
        w_idx = None
        for j in range(len(fan)):
            if not ((full & ~used[fan[j]]) >> d & 1):
                continue
            valid = True
            for i in range(1, j + 1):
                key = (u, fan[i]) if u < fan[i] else (fan[i], u)
                ci = color_of.get(key)
                if ci is None or not ((full & ~used[fan[i - 1]]) >> ci & 1):
                    valid = False
                    break
            if valid:
                w_idx = j
                break
        if w_idx is None:
            raise RuntimeError("edge coloring fan rotation found no landing spot")
        shifted = []
        for i in range(w_idx):
            key = (u, fan[i + 1]) if u < fan[i + 1] else (fan[i + 1], u)
            shifted.append(color_of[key])
        for i in range(1, w_idx + 1):
            unset_color(u, fan[i])
        for i in range(w_idx):
            set_color(u, fan[i], shifted[i])
        set_color(u, fan[w_idx], d)
    return EdgeColoring(color_of, len(set(color_of.values())))


# -- matching cover coloring -------------------------------------------------


def _cover_colors(root: Graph, edge_map) -> list[int]:
    """Raw cover colors for host vertices mapped onto root edges.

    A greedy maximal matching's endpoints cover every root edge; each mapped
    edge takes the index of its smallest covered endpoint.
    """
    matched = 0
    for a, b in root.edges():
        if not (matched >> a & 1 or matched >> b & 1):
            matched |= 1 << a | 1 << b
    cover = _mask_to_tuple(matched)
    index = {v: i for i, v in enumerate(cover)}
    out = []
    for a, b in edge_map:
        if matched >> a & 1:
            out.append(index[a])
        elif matched >> b & 1:
            out.append(index[b])
        else:
            raise RuntimeError("maximal matching left a root edge uncovered")
    return out


def _compress(raw: list[int]) -> list[int]:
    remap = {c: i for i, c in enumerate(sorted(set(raw)))}
    return [remap[c] for c in raw]


def cover_color_complement_line(h: Graph) -> Coloring:
    """Color complement(line_graph(h)) through a maximal matching of h.

    Vertices of the target are the edges of h in lexicographic order.  Colors
    sharing an h-endpoint are stable in the target, and the palette size is
    at most twice the matching size, hence at most twice the target's clique
    number.
    """
    if h.edge_count() == 0:
        raise InputError("cover coloring needs a root with at least one edge")
    tri = is_triangle_free(h)
    if tri is not None:
        raise InputError(f"cover coloring needs a triangle-free root; found {tri}")
    edges = h.edges()
    raw = _cover_colors(h, edges)
    cols = _compress(raw)
    target = line_graph(h).complement()
    return Coloring(tuple(cols), max(cols) + 1, clique_number(target))


# -- the constructive theorem colorer ----------------------------------------


def _color(g: Graph) -> list[int]:
    """Recursive coloring of an uncluttered graph; contiguous palette 0..k-1."""
    n = g.n
    if n == 0:
        return []
    if n == 1:
        return [0]
    comps = g.components()
    if len(comps) > 1:
        cols = [0] * n
        for part in comps:
            sub = _color(g.induced(part))
            for i, v in enumerate(part):
                cols[v] = sub[i]
        return cols
    gc = g.complement()
    anti = gc.components()
    if len(anti) > 1:
        cols = [0] * n
        offset = 0
        for part in anti:
            sub = _color(g.induced(part))
            for i, v in enumerate(part):
                cols[v] = offset + sub[i]
            offset += max(sub) + 1
        return cols
    v = find_simplicial_vertex(g)
    if v is not None:
        rest = [w for w in range(n) if w != v]
        sub = _color(g.induced(rest))
        cols = [0] * n
        for i, w in enumerate(rest):
            cols[w] = sub[i]
        taken = {sub[i] for i, w in enumerate(rest) if g.has_edge(v, w)}
        c = 0
        while c in taken:
            c += 1
        cols[v] = c
        return cols
    pair = find_nonadjacent_twins(g)
    if pair is not None:
        rest = [w for w in range(n) if w != pair.u]
        sub = _color(g.induced(rest))
        cols = [0] * n
        for i, w in enumerate(rest):
            cols[w] = sub[i]
        cols[pair.u] = cols[pair.v]
        return cols
    rg = recognize_line_graph_triangle_free(g)
    if rg is not None:
        ec = vizing_edge_color(rg.root)
        return _compress([ec.assignment[e] for e in rg.edge_map])
    rg = recognize_line_graph_triangle_free(gc)
    if rg is not None:
        return _compress(_cover_colors(rg.root, rg.edge_map))
    raise TheoremViolationError(
        f"uncluttered graph {to_graph6(g)!r} fell through the coloring recursion")


def color_uncluttered(g: Graph) -> Coloring:
    """Proper coloring of an uncluttered graph with at most 2*omega colors."""
    witness = is_uncluttered(g)
    if witness is not None:
        raise NotUnclutteredError(witness)
    cols = _color(g)
    num = max(cols) + 1 if cols else 0
    return Coloring(tuple(cols), num, clique_number(g))
