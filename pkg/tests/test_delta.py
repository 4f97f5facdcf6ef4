from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings

from deltarep import graph6
from deltarep.census import doubly_connected_graphs
from deltarep.delta import (DeltaCertificate, DeltaViolation, budget, check_delta_ordering,
                            classify, delta_bound, find_delta_ordering)
from deltarep.errors import ParameterError, PreconditionError
from deltarep.graph import Graph, complement, generate, induced_subgraph, stats
from deltarep.worked_example import ORDER, target_graph

from strategies import graphs


def brute_force_has_ordering(g: Graph) -> bool:
    for order in permutations(g.vertices):
        if isinstance(check_delta_ordering(g, order), DeltaCertificate):
            return True
    return False


def test_budget_values():
    assert [budget(m) for m in range(4, 13)] == [1, 1, 2, 2, 3, 3, 4, 4, 5]
    assert all(budget(m) <= budget(m + 1) for m in range(1, 100))


def test_worked_example_ordering():
    cert = check_delta_ordering(target_graph(), ORDER)
    assert isinstance(cert, DeltaCertificate)
    assert cert.first_three_kind == "K2plusK1"
    assert cert.missed == (1, 1, 2, 2, 2, 2, 3, 3, 3)


def test_c6_clockwise_order():
    c6 = generate("cycle", 6)
    res = check_delta_ordering(c6, range(1, 7))
    assert isinstance(res, DeltaViolation)
    assert (6, 3, 2) in res.failures
    # the seed already fails: 1, 2, 3 induce a path with two edges
    assert res.position == 3
    assert isinstance(check_delta_ordering(complement(c6), range(1, 7)), DeltaCertificate)


def test_k4_precondition():
    with pytest.raises(PreconditionError):
        check_delta_ordering(generate("complete", 4), range(1, 5))
    with pytest.raises(PreconditionError):
        find_delta_ordering(generate("path", 3))
    with pytest.raises(PreconditionError):
        classify(Graph.from_edges(4, [(1, 2), (3, 4)]))


def test_find_examples():
    assert find_delta_ordering(generate("prism", 3)) is not None
    assert find_delta_ordering(generate("cycle", 6)) is None
    cert = find_delta_ordering(generate("path", 4))
    assert cert.first_three_kind == "K2plusK1" and cert.missed == (1,)


def test_classify_examples():
    assert classify(generate("cycle", 6)).kind == "c_delta"
    assert classify(generate("prism", 3)).kind == "delta"
    assert classify(generate("cycle", 5)).kind == "neither"
    assert not brute_force_has_ordering(generate("cycle", 5))


@pytest.mark.parametrize("n", [6, 7, 8])
def test_cycles_are_c_delta(n):
    cls = classify(generate("cycle", n))
    assert cls.kind == "c_delta"
    assert isinstance(check_delta_ordering(complement(generate("cycle", n)),
                                           cls.complement_certificate.order), DeltaCertificate)


def test_delta_bound_examples():
    h = target_graph()
    assert delta_bound(h, check_delta_ordering(h, ORDER)) == 5
    prism = generate("prism", 3)
    assert delta_bound(prism, find_delta_ordering(prism)) == 3
    p4 = generate("path", 4)
    assert delta_bound(p4, find_delta_ordering(p4)) == 3


def test_delta_bound_rejects_foreign_certificate():
    prism = generate("prism", 3)
    cert = find_delta_ordering(prism)
    with pytest.raises(ParameterError):
        delta_bound(generate("cycle", 6), cert)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_search_agrees_with_brute_force_and_duality(n):
    for g in doubly_connected_graphs(n):
        cert = find_delta_ordering(g)
        assert (cert is not None) == brute_force_has_ordering(g), graph6.encode(g)
        if cert is not None:
            assert isinstance(check_delta_ordering(g, cert.order), DeltaCertificate)
        own, comp = classify(g), classify(complement(g))
        assert (own.kind == "delta") == (comp.kind == "c_delta")
        assert (own.kind == "both") == (comp.kind == "both")


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_prefix_orderings_stay_valid(n):
    # every prefix of length >= 4 is a valid ordering of the induced subgraph
    # whenever that subgraph still meets the connectivity preconditions
    for g in doubly_connected_graphs(n):
        cert = find_delta_ordering(g)
        if cert is None:
            continue
        for k in range(4, n):
            sub = induced_subgraph(g, cert.order[:k])
            st = stats(sub)
            if not (st.connected and st.complement_connected):
                continue
            rank_of = {v: i + 1 for i, v in enumerate(sorted(cert.order[:k]))}
            res = check_delta_ordering(sub, [rank_of[v] for v in cert.order[:k]])
            assert isinstance(res, DeltaCertificate)


@given(graphs(min_n=1, max_n=10))
@settings(max_examples=100)
def test_degree_identity(g):
    assert stats(complement(g)).max_degree + 1 == g.n - stats(g).min_degree
