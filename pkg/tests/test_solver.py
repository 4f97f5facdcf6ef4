from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from deltarep import graph6
from deltarep.errors import FormatError, ParameterError
from deltarep.graph import Graph, complement, generate
from deltarep.linalg import dot
from deltarep.oracles import msr_known, reduce_pendant
from deltarep.solver import (OrthogonalRepresentation, SolverConfig, build_constraint_system,
                             build_representation, candidates, extend_vertex,
                             verify_representation)
from deltarep.worked_example import (DIMENSION, ORDER, V5_SYSTEM, VECTORS, product_graph,
                                     target_graph)

E = [tuple(int(i == k) for i in range(5)) for k in range(5)]


def adjacency_row(h: Graph, m: int) -> list[bool]:
    return [h.has_edge(j, m) for j in range(1, m)]


# -- constraint systems ------------------------------------------------------------

def test_v2_system_forces_first_coordinate():
    h = target_graph()
    system = build_constraint_system([E[0]], adjacency_row(h, 2), 5)
    assert system.aux_count == 0
    assert system.matrix.to_rows() == [[1, 0, 0, 0, 0]]


def test_v5_system_matches_published_display():
    h = target_graph()
    system = build_constraint_system(VECTORS[:4], adjacency_row(h, 5), DIMENSION)
    assert system.matrix.to_rows() == [list(r) for r in V5_SYSTEM]
    assert system.aux_map == {1: 5, 2: 6, 3: 7}


def test_empty_system():
    system = build_constraint_system([], [], 5)
    assert system.matrix.rows == 0
    assert extend_vertex(system).vector == E[0]


def test_system_dimension_mismatch():
    with pytest.raises(ParameterError):
        build_constraint_system([(1, 0)], [True], 3)
    with pytest.raises(ParameterError):
        build_constraint_system([(1, 0, 0)], [True, False], 3)


# -- single extensions ------------------------------------------------------------

def test_v3_extension_is_e1_plus_e3():
    h = target_graph()
    ext = extend_vertex(build_constraint_system([E[0], E[1]], adjacency_row(h, 3), 5))
    assert ext.vector == (1, 0, 1, 0, 0)
    assert ext.aux_values == (1,)


def test_v4_after_e1_is_feasible():
    # v4 is adjacent to v1, v2 and orthogonal to v3; with v1 = e1 the vector
    # e1 + e2 - e3 meets every condition, so this step has a solution
    h = target_graph()
    prev = [E[0], E[1], (1, 0, 1, 0, 0)]
    ext = extend_vertex(build_constraint_system(prev, adjacency_row(h, 4), 5))
    assert ext is not None
    assert [dot(ext.vector, p) for p in prev] == [1, 1, 0]
    assert ext.vector == (1, 1, -1, 0, 0)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4),
                                   min_size=1, max_size=4),
       st.lists(st.booleans(), min_size=4, max_size=4))
@settings(max_examples=80, deadline=None)
def test_extensions_resubstitute(prev, adj):
    adj = adj[:len(prev)]
    system = build_constraint_system(prev, adj, 4)
    config = SolverConfig(max_assignments=300)
    for ext in list(candidates(system, config))[:4]:
        products = [dot(ext.vector, p) for p in prev]
        for j, flag in enumerate(adj):
            assert (products[j] != 0) == flag
        assert ext.aux_values == tuple(products[j] for j in range(len(prev)) if adj[j])
        assert any(ext.vector)


def test_config_validation():
    with pytest.raises(ParameterError):
        SolverConfig(value_pool=(1, 0))
    with pytest.raises(ParameterError):
        SolverConfig(value_pool=())
    with pytest.raises(ParameterError):
        SolverConfig(value_pool=(1, 1))
    with pytest.raises(ParameterError):
        SolverConfig(seed_vector_policy="random")


# -- full builds ------------------------------------------------------------------------

def test_worked_example_build_verifies():
    h = target_graph()
    res = build_representation(h, ORDER, 5)
    assert res.success
    report = verify_representation(h, res.representation)
    assert report.ok and report.rank <= 5
    assert res.representation.vectors[0] == E[0]


def test_build_is_deterministic():
    h = target_graph()
    a = build_representation(h, ORDER, 5).representation.to_json()
    b = build_representation(h, ORDER, 5).representation.to_json()
    assert a == b


def test_k2_needs_two_dimensions():
    k2 = generate("complete", 2)
    assert not build_representation(k2, None, 1).success
    res = build_representation(k2, None, 2)
    assert res.success
    assert res.representation.vectors == ((1, 0), (1, 1))


def test_complement_of_p3_fails_in_dimension_one():
    res = build_representation(complement(generate("path", 3)), None, 1)
    assert not res.success
    assert res.events("abort")


def test_genuine_backtracking():
    g = graph6.decode("E{Sw")
    config = SolverConfig(fallback_policy=None)
    res = build_representation(g, (1, 2, 6, 4, 3, 5), 3, config)
    assert res.success and res.backtracks == 5
    assert res.events("revise") and res.events("infeasible")
    assert verify_representation(g, res.representation).ok


def test_fallback_policy_restarts():
    g = graph6.decode("EENg")
    order = (1, 2, 3, 4, 6, 5)
    alone = build_representation(g, order, 4, SolverConfig(fallback_policy=None))
    assert not alone.success
    res = build_representation(g, order, 4)
    assert res.success and len(res.events("restart")) == 1
    assert verify_representation(g, res.representation).ok


def test_bad_build_arguments():
    with pytest.raises(ParameterError):
        build_representation(generate("cycle", 4), [1, 2, 3], 2)
    with pytest.raises(ParameterError):
        build_representation(generate("cycle", 4), None, 0)


@pytest.mark.parametrize("k", [4, 5, 6, 7])
def test_unicyclic_core_dimension_matches_oracle(k):
    g = Graph.from_edges(k + 2, list(generate("cycle", k).edges) + [(1, k + 1), (k + 1, k + 2)])
    red = reduce_pendant(g)
    res = build_representation(red.core, None, k - 2)
    assert res.success and verify_representation(red.core, res.representation).ok
    assert res.representation.dimension + red.count == msr_known(g).value


# -- verification ----------------------------------------------------------------------

def published() -> OrthogonalRepresentation:
    return OrthogonalRepresentation(target_graph(), ORDER, 5, VECTORS)


def test_verify_published_vectors():
    report = verify_representation(target_graph(), published())
    assert report.pattern_ok and report.pairwise_ok and report.psd_ok
    assert report.rank == 4 and report.bound == 5 and not report.failures


def test_verify_against_product_fails():
    rep = published()
    rep = OrthogonalRepresentation(product_graph(), ORDER, 5, rep.vectors)
    report = verify_representation(product_graph(), rep)
    assert not report.pattern_ok and not report.ok
    assert len(report.failures) == 66


def test_verify_zeroed_vector():
    vecs = list(VECTORS)
    vecs[6] = (0, 0, 0, 0, 0)
    rep = OrthogonalRepresentation(target_graph(), ORDER, 5, tuple(vecs))
    report = verify_representation(target_graph(), rep)
    assert not report.pattern_ok and not report.pairwise_ok
    assert report.dependent_pair == (7, 7)
    assert all(7 in (i, j) for i, j, _, _ in report.failures)


def test_verify_size_mismatch():
    rep = published()
    with pytest.raises(ParameterError):
        verify_representation(product_graph(), rep)


@given(st.integers(0, 11), st.fractions().filter(lambda q: q != 0))
@settings(max_examples=50)
def test_scaling_invariance(index, q):
    h = target_graph()
    base = verify_representation(h, published())
    vecs = [tuple(Fraction(x) for x in v) for v in VECTORS]
    vecs[index] = tuple(q * x for x in vecs[index])
    rep = OrthogonalRepresentation(h, ORDER, 5, tuple(vecs))
    scaled = verify_representation(h, rep)
    assert (scaled.pattern_ok, scaled.pairwise_ok, scaled.rank, scaled.psd_ok) == \
        (base.pattern_ok, base.pairwise_ok, base.rank, base.psd_ok)


# -- JSON -------------------------------------------------------------------------------

def test_json_round_trip():
    rep = published()
    text = rep.to_json()
    data = json.loads(text)
    assert data["vectors"][11] == ["4275", "2288", "-7803", "-14366", "0"]
    assert OrthogonalRepresentation.from_json(text) == rep


@pytest.mark.parametrize("text", ["{", "{}", '{"graph6": "Bw", "order": [1, 2, 3], "dimension": 2, '
                                  '"vectors": [["1", "0"], ["0", "1"]]}',
                                  '{"graph6": "Bw", "order": [1, 1, 3], "dimension": 1, '
                                  '"vectors": [["1"], ["1"], ["1"]]}',
                                  '{"graph6": "Bw", "order": [1, 2, 3], "dimension": 1, '
                                  '"vectors": [["x"], ["1"], ["1"]]}'])
def test_json_malformed(text):
    with pytest.raises(FormatError):
        OrthogonalRepresentation.from_json(text)
