import random

import pytest

from reoptlab.enumeration import random_graph
from reoptlab.errors import InvalidHintError
from reoptlab.graphs import (
    Graph,
    GraphTooLargeError,
    UnknownNodeError,
    add_edges,
    decide_cover,
    decide_cover_stats,
    edge,
    graph,
    is_cover,
    min_cover_brute,
    parse_edge_list,
    remove_edges,
    serialize_edge_list,
    warm_start_cover,
    warm_start_cover_stats,
)

from oracles import brute_min_cover_size

TRIANGLE = graph(edges=[("a", "b"), ("b", "c"), ("a", "c")])


def test_edge_canonical_and_self_loop():
    assert edge("b", "a") == ("a", "b")
    with pytest.raises(ValueError):
        edge("a", "a")


def test_graph_factory_absorbs_endpoints():
    g = graph(["x"], [("b", "a")])
    assert g.nodes == frozenset({"x", "a", "b"})
    assert g.edges == frozenset({("a", "b")})


def test_graph_rejects_unknown_endpoint():
    with pytest.raises(UnknownNodeError):
        Graph(frozenset({"a"}), frozenset({("a", "b")}))


def test_is_cover():
    assert is_cover(graph(), set())
    assert not is_cover(TRIANGLE, {"a"})
    assert is_cover(TRIANGLE, {"a", "b"})
    with pytest.raises(UnknownNodeError):
        is_cover(TRIANGLE, {"z"})


def test_min_cover_empty_graph():
    assert min_cover_brute(graph()) == (0, frozenset())


def test_min_cover_single_edge_prefers_lex_least():
    size, cover = min_cover_brute(graph(edges=[("u", "v")]))
    assert (size, cover) == (1, frozenset({"u"}))


def test_min_cover_limit():
    wide = graph([f"n{i}" for i in range(25)])
    with pytest.raises(GraphTooLargeError):
        min_cover_brute(wide)
    assert min_cover_brute(wide, limit=25).size == 0


def test_decide_cover_triangle():
    assert decide_cover(TRIANGLE, 2) is not None
    assert decide_cover(TRIANGLE, 1) is None
    cover = decide_cover(TRIANGLE, 2)
    assert is_cover(TRIANGLE, cover) and len(cover) <= 2


def test_decide_cover_rejects_negative_budget():
    with pytest.raises(ValueError):
        decide_cover(TRIANGLE, -1)


def test_decide_cover_agrees_with_brute_oracle():
    rng = random.Random(11)
    for _ in range(500):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.randint(0, n * (n - 1) // 2))
        best = brute_min_cover_size(g.nodes, g.edges)
        assert min_cover_brute(g).size == best
        for budget in (max(best - 1, 0), best, best + 1):
            got = decide_cover(g, budget)
            assert (got is not None) == (best <= budget)
            if got is not None:
                assert is_cover(g, got) and len(got) <= budget


def test_min_cover_monotone_under_edge_addition():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(2, 9)
        g = random_graph(rng, n, rng.randint(0, n * (n - 1) // 2 - 1))
        candidates = sorted(
            (u, v) for u in sorted(g.nodes) for v in sorted(g.nodes)
            if u < v and (u, v) not in g.edges
        )
        if not candidates:
            continue
        grown = add_edges(g, [rng.choice(candidates)])
        assert min_cover_brute(grown).size >= min_cover_brute(g).size


def test_warm_start_fast_path_returns_old_cover():
    g = graph(edges=[("a", "b"), ("b", "c")])
    grown = add_edges(g, [("a", "c")])
    old = frozenset({"a", "b"})
    assert warm_start_cover(grown, old, [("a", "c")], 2) == old
    _, hint_used, work = warm_start_cover_stats(grown, old, [("a", "c")], 2)
    assert hint_used and work == 1


def test_warm_start_falls_back_when_edge_uncovered():
    g = graph(edges=[("a", "b"), ("c", "d")])
    grown = add_edges(g, [("c", "d")])  # old cover {a} misses it
    base = remove_edges(grown, [("c", "d")])
    assert is_cover(base, {"a"})
    got = warm_start_cover(grown, {"a"}, [("c", "d")], 2)
    assert got is not None and is_cover(grown, got) and len(got) <= 2
    assert warm_start_cover(grown, {"a"}, [("c", "d")], 1) is None


def test_warm_start_rejects_invalid_hint():
    g = graph(edges=[("a", "b"), ("b", "c")])
    with pytest.raises(InvalidHintError):
        warm_start_cover(g, set(), [("b", "c")], 2)


def test_warm_start_agrees_with_fresh_decision():
    rng = random.Random(23)
    for _ in range(200):
        n = rng.randint(2, 10)
        g = random_graph(rng, n, rng.randint(0, n * (n - 1) // 2 - 1))
        candidates = sorted(
            (u, v) for u in sorted(g.nodes) for v in sorted(g.nodes)
            if u < v and (u, v) not in g.edges
        )
        if not candidates:
            continue
        new_edge = rng.choice(candidates)
        old = min_cover_brute(g).cover
        grown = add_edges(g, [new_edge])
        for budget in (len(old), len(old) + 1):
            hinted = warm_start_cover(grown, old, [new_edge], budget)
            fresh = decide_cover(grown, budget)
            assert (hinted is None) == (fresh is None)
            if hinted is not None:
                assert is_cover(grown, hinted) and len(hinted) <= budget


def test_decide_cover_stats_counts_nodes():
    _, explored = decide_cover_stats(TRIANGLE, 2)
    assert explored >= 1


def test_edge_list_round_trip_with_isolated_nodes():
    g = graph(["lonely", "a", "b", "c"], [("a", "b"), ("b", "c")])
    text = serialize_edge_list(g)
    assert text == "lonely\na b\nb c\n"
    assert parse_edge_list(text) == g


def test_edge_list_empty_graph():
    assert serialize_edge_list(graph()) == ""
    assert parse_edge_list("") == graph()


def test_edge_list_rejects_malformed():
    with pytest.raises(ValueError):
        parse_edge_list("a b c\n")
    with pytest.raises(ValueError):
        parse_edge_list("a a\n")
