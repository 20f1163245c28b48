import pytest

import uncluttered as U
from uncluttered import Graph, InputError
from uncluttered.graph import invariant_key
from uncluttered.modular import find_adjacent_simplicial_twins
from uncluttered.structure import RootGraph, is_line_graph_of_bipartite

from oracles import (
    oracle_candelabrum_with_base,
    oracle_is_candelabrum,
    random_candelabrum,
    random_connected_triangle_free,
    triangle_free_rootless_by_edges,
)


def test_triangle_witnesses():
    assert U.is_triangle_free(U.complete_graph(3)) == (0, 1, 2)
    assert U.is_triangle_free(U.pattern("diamond")) == (0, 1, 2)
    assert U.is_triangle_free(U.cycle_graph(5)) is None
    assert U.is_triangle_free(Graph(0)) is None


def test_line_graph_shapes():
    assert U.line_graph(U.path_graph(4)) == U.path_graph(3)
    assert U.line_graph(U.pattern("claw")) == U.complete_graph(3)
    assert U.are_isomorphic(U.line_graph(U.cycle_graph(5)), U.cycle_graph(5))
    assert U.line_graph(U.complete_graph(2)) == Graph(1)
    # vertices with no edge contribute nothing
    assert U.line_graph(Graph(3, [(0, 2)])) == Graph(1)
    with pytest.raises(InputError):
        U.line_graph(U.edgeless_graph(3))


def test_recognizer_on_known_hosts():
    rg = U.recognize_line_graph_triangle_free(U.path_graph(3))
    assert U.are_isomorphic(rg.root, U.path_graph(4))
    assert U.verify_root(U.path_graph(3), rg)

    # a triangle host forces the star root, never the triangle root
    rg = U.recognize_line_graph_triangle_free(U.complete_graph(3))
    assert U.are_isomorphic(rg.root, U.pattern("claw"))
    assert U.is_triangle_free(rg.root) is None

    rg = U.recognize_line_graph_triangle_free(U.cycle_graph(5))
    assert U.are_isomorphic(rg.root, U.cycle_graph(5))

    # isolated host vertices become disjoint root edges
    rg = U.recognize_line_graph_triangle_free(U.edgeless_graph(2))
    assert rg.root.n == 4 and rg.root.edges() == [(0, 1), (2, 3)]

    rg = U.recognize_line_graph_triangle_free(Graph(0))
    assert rg.root == Graph(0) and rg.edge_map == ()
    assert U.verify_root(Graph(0), rg)

    assert U.recognize_line_graph_triangle_free(U.pattern("claw")) is None
    assert U.recognize_line_graph_triangle_free(U.pattern("diamond")) is None


def test_verify_root_rejects_corruption():
    host = U.cycle_graph(5)
    rg = U.recognize_line_graph_triangle_free(host)
    assert U.verify_root(host, rg)
    em = list(rg.edge_map)
    em[0], em[1] = em[1], em[0]
    assert not U.verify_root(host, RootGraph(rg.root, tuple(em)))
    assert not U.verify_root(host, RootGraph(rg.root, rg.edge_map[:-1]))
    assert not U.verify_root(U.path_graph(5), rg)


def test_recognizer_round_trips_random_roots(rng):
    for _ in range(25):
        root = random_connected_triangle_free(rng, rng.randint(2, 10))
        host = U.line_graph(root)
        rg = U.recognize_line_graph_triangle_free(host)
        assert rg is not None
        assert U.verify_root(host, rg)
        assert U.is_triangle_free(rg.root) is None
        assert U.are_isomorphic(U.line_graph(rg.root), host)


def test_recognizer_matches_exhaustive_root_enumeration():
    """Decision agreement with brute-force root search, all hosts up to n=8.

    A host on n vertices is a line graph of a triangle-free root exactly when
    some triangle-free graph with n edges and no isolated vertices produces
    it; those roots are enumerable by edge count.
    """
    levels = triangle_free_rootless_by_edges(8)
    assert {m: len(v) for m, v in levels.items()} == {
        1: 1, 2: 2, 3: 4, 4: 9, 5: 19, 6: 45, 7: 105, 8: 267}
    for n in range(1, 9):
        buckets = {}
        for root in levels[n]:
            lg = U.line_graph(root)
            buckets.setdefault(invariant_key(lg), []).append(lg)
        for host in U.enumerate_graphs(n):
            got = U.recognize_line_graph_triangle_free(host) is not None
            want = any(U.are_isomorphic(host, lg)
                       for lg in buckets.get(invariant_key(host), ()))
            assert got == want, U.to_graph6(host)


def test_bipartite_root_refinement():
    assert is_line_graph_of_bipartite(U.complete_graph(3))
    assert is_line_graph_of_bipartite(U.cycle_graph(6))
    assert not is_line_graph_of_bipartite(U.cycle_graph(5))
    assert not is_line_graph_of_bipartite(U.pattern("diamond"))


def test_check_candelabrum_accepts_and_rejects():
    k2 = U.complete_graph(2)
    assert U.check_candelabrum(k2, ((0,),), ((1,),))
    assert not U.check_candelabrum(k2.complement(), ((0,),), ((1,),))
    p3 = U.path_graph(3)
    assert U.check_candelabrum(p3, ((1,),), ((0, 2),))
    assert not U.check_candelabrum(p3, ((0, 2),), ((1,),))
    two_pairs = Graph(6, [(0, 1), (2, 3), (1, 3), (1, 4), (3, 5), (4, 5)])
    assert U.check_candelabrum(two_pairs, ((0, 1), (2, 3)), ((4,), (5,))) is False
    with pytest.raises(InputError):
        U.check_candelabrum(k2, (), ())
    with pytest.raises(InputError):
        U.check_candelabrum(k2, ((0,), (1,)), ((1,),))
    with pytest.raises(InputError):
        U.check_candelabrum(k2, ((0,),), ((),))
    with pytest.raises(InputError):
        U.check_candelabrum(U.path_graph(3), ((0,),), ((1,),))


def test_recognize_candelabrum_examples():
    cs = U.recognize_candelabrum(U.complete_graph(2))
    assert cs.clique_parts == ((0,),) and cs.stable_parts == ((1,),)
    cs = U.recognize_candelabrum(U.path_graph(3))
    assert cs.clique_parts == ((1,),) and cs.stable_parts == ((0, 2),)
    cs = U.recognize_candelabrum(U.complete_graph(3))
    assert cs.k == 1 and cs.base == (2,)
    assert U.recognize_candelabrum(U.cycle_graph(4)) is None
    assert U.recognize_candelabrum(U.cycle_graph(5)) is None
    assert U.recognize_candelabrum(Graph(1)) is None

    # a clique with one pendant leaf per vertex: each leaf is a one-vertex
    # candle over its own clique vertex
    edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    edges += [(i, 5 + i) for i in range(5)]
    spiky = Graph(10, edges)
    cs = U.recognize_candelabrum(spiky)
    assert cs.k == 5 and cs.base == (0, 1, 2, 3, 4)
    assert U.check_candelabrum(spiky, cs.clique_parts, cs.stable_parts)


def test_recognize_candelabrum_matches_base_scan(census):
    """Exhaustive comparison against trying every base subset, n <= 6."""
    for n in range(2, 7):
        for g in census[n]:
            got = U.recognize_candelabrum(g)
            want = oracle_is_candelabrum(g)
            assert (got is not None) == want, U.to_graph6(g)
            if got is not None:
                assert U.check_candelabrum(g, got.clique_parts, got.stable_parts)


def test_recognize_with_base_agrees_with_definition(census, rng):
    for _ in range(250):
        n = rng.randint(2, 6)
        g = census[n][rng.randrange(len(census[n]))]
        mask = rng.randrange(1, 1 << n)
        base = [v for v in range(n) if mask >> v & 1]
        got = U.recognize_candelabrum_with_base(g, base)
        want = oracle_candelabrum_with_base(g, base)
        assert (got is not None) == want, (U.to_graph6(g), base)
        if got is not None:
            assert got.base == tuple(sorted(base))
            assert U.check_candelabrum(g, got.clique_parts, got.stable_parts)


def test_random_candelabra_are_recognized_and_uncluttered(rng):
    for _ in range(120):
        g, ys, zs = random_candelabrum(rng)
        assert U.check_candelabrum(g, ys, zs)
        cs = U.recognize_candelabrum(g)
        assert cs is not None
        assert U.check_candelabrum(g, cs.clique_parts, cs.stable_parts)
        assert U.is_uncluttered(g) is None


def test_candelabra_in_the_census_are_uncluttered(census):
    for n in range(2, 8):
        for g in census[n]:
            if U.recognize_candelabrum(g) is not None:
                assert U.is_uncluttered(g) is None


def test_detect_candled_full_graph_case():
    g = U.from_graph6("GCXnf_")
    dec = U.detect_candled(g)
    assert dec is not None and dec.rest == ()
    assert dec.candelabrum.k == 2
    assert U.verify_candled(g, dec)


def test_detect_candled_with_proper_rest():
    g = U.from_graph6("G?bF]{")
    dec = U.detect_candled(g)
    assert dec is not None
    assert dec.rest == (0, 1, 4, 5)
    assert dec.candelabrum.base == (6, 7)
    assert dec.candelabrum.clique_parts == ((2,), (3,))
    assert U.verify_candled(g, dec)
    # the base must see all of the rest, the candles none of it
    assert U.is_complete_between(g, dec.candelabrum.base, dec.rest)
    nonbase = [v for p in dec.candelabrum.clique_parts for v in p]
    assert U.is_anticomplete_between(g, nonbase, dec.rest)


def test_verify_candled_rejects_corruption():
    g = U.from_graph6("G?bF]{")
    dec = U.detect_candled(g)
    cs = dec.candelabrum
    swapped = U.CandledDecomposition(
        U.CandelabrumStructure(cs.stable_parts, cs.clique_parts), dec.rest)
    assert not U.verify_candled(g, swapped)
    moved = U.CandledDecomposition(
        U.CandelabrumStructure(cs.clique_parts + ((dec.rest[0],),),
                               cs.stable_parts + ((dec.rest[1],),)),
        dec.rest[2:])
    assert not U.verify_candled(g, moved)
    assert not U.verify_candled(U.complete_graph(8), dec)


def test_exhaustive_mode_finds_planted_compositions(census, rng):
    """Small random candled plants are always found in exhaustive mode."""
    from oracles import compose_candled
    pool = [g for n in range(3) for g in census[n]]
    for _ in range(60):
        cand, ys, zs = random_candelabrum(rng, max_k=2, max_part=2)
        rest = pool[rng.randrange(len(pool))]
        if cand.n + rest.n > 10:
            continue
        g = compose_candled(rest, cand, [v for z in zs for v in z])
        dec = U.detect_candled(g, exhaustive=True)
        assert dec is not None
        assert U.verify_candled(g, dec)


def test_exhaustive_mode_is_capped():
    with pytest.raises(InputError):
        U.detect_candled(U.edgeless_graph(11), exhaustive=True)


def test_production_detector_known_misses():
    """Five census graphs carry a candled structure the fast candidate list
    misses; all of them are unreachable for the classifier (each has twin or
    line-graph exits that fire first)."""
    for s, side in (("E?bg", "co"), ("E?bw", "g"), ("EEvW", "co"),
                    ("EEvw", "g"), ("F?AFg", "co")):
        g = U.from_graph6(s)
        h = g.complement() if side == "co" else g
        assert U.detect_candled(h) is None
        assert U.detect_candled(h, exhaustive=True) is not None
        cert = U.classify(g)
        assert cert.case not in ("CANDLED", "ANTI_CANDLED", "NOT_UNCLUTTERED")
        assert U.verify_certificate(g, cert)


def test_production_detector_is_exact_where_the_classifier_needs_it():
    """On every graph that reaches the candled test (connected both ways, no
    twin exits, no line-graph exits), the fast detector agrees with the
    exhaustive one.  Below eight vertices no graph reaches it at all."""
    reachable = {n: [] for n in range(2, 9)}
    for n in range(2, 9):
        for g in U.enumerate_graphs(n):
            if U.is_uncluttered(g) is not None:
                continue
            gc = g.complement()
            if not (g.is_connected() and gc.is_connected()):
                continue
            if find_adjacent_simplicial_twins(g) or find_adjacent_simplicial_twins(gc):
                continue
            if (U.recognize_line_graph_triangle_free(g)
                    or U.recognize_line_graph_triangle_free(gc)):
                continue
            reachable[n].append(g)
    assert {n: len(v) for n, v in reachable.items()} == {
        2: 0, 3: 0, 4: 0, 5: 0, 6: 0, 7: 0, 8: 2}
    assert sorted(U.to_graph6(g) for g in reachable[8]) == ["G?bF]{", "GCXnf_"]
    for g in reachable[8]:
        for h in (g, g.complement()):
            fast = U.detect_candled(h)
            full = U.detect_candled(h, exhaustive=True)
            assert (fast is None) == (full is None)
            if fast is not None:
                assert U.verify_candled(h, fast)
