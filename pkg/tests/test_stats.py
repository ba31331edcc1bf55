from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings

from graphbench import (
    EmptyGraph,
    assortativity,
    build_graph,
    connected_components,
    degrees,
    global_clustering,
    remaining_degree_stats,
)
from graphbench.stats.assortativity import assortativity_distribution_form, assortativity_edge_form
from conftest import graphs, permute_graph, random_graph


# --- independent oracles -------------------------------------------------


def brute_force_triples(g):
    """Count triangles and connected triples by full triple enumeration."""
    adj = {tuple(sorted(e)) for e in g.edges.tolist()}
    triangles = 0
    triples = 0
    for trio in combinations(range(g.node_count), 3):
        present = sum(
            1 for pair in combinations(trio, 2) if tuple(sorted(pair)) in adj
        )
        if present == 3:
            triangles += 1
            triples += 3
        elif present == 2:
            triples += 1
    return triangles, triples


def brute_force_components(g):
    """Component count by DFS, independent of union-find and the spectrum."""
    seen = [False] * g.node_count
    count = 0
    for start in range(g.node_count):
        if seen[start]:
            continue
        count += 1
        stack = [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(int(w))
    return count


def exact_assortativity(g):
    """Remaining-degree correlation in exact rational arithmetic."""
    d = degrees(g)
    stubs = []
    for u, v in g.edges.tolist():
        stubs.append((int(d[u]) - 1, int(d[v]) - 1))
        stubs.append((int(d[v]) - 1, int(d[u]) - 1))
    count = len(stubs)
    joint = Fraction(sum(j * k for j, k in stubs), count)
    mean = Fraction(sum(j for j, _ in stubs), count)
    meansq = Fraction(sum(j * j for j, _ in stubs), count)
    den = meansq - mean**2
    if den == 0:
        return None
    return (joint - mean**2) / den


# --- connected components -------------------------------------------------


def test_two_disjoint_edges():
    g = build_graph(4, [(0, 1), (2, 3)])
    result = connected_components(g)
    assert result.count == 2
    assert result.component_labels.tolist() == [0, 0, 2, 2]


def test_triangle_plus_isolated(triangle):
    g = build_graph(4, [(0, 1), (1, 2), (0, 2)])
    assert connected_components(g).count == 2


def test_labels_are_smallest_member():
    g = build_graph(6, [(5, 3), (1, 4)])
    labels = connected_components(g).component_labels
    assert labels.tolist() == [0, 1, 2, 3, 1, 3]


@given(graphs(max_nodes=14))
def test_components_match_dfs_oracle(g):
    assert connected_components(g).count == brute_force_components(g)


# --- clustering ------------------------------------------------------------


def test_clustering_triangle(triangle):
    stat = global_clustering(triangle)
    assert stat.triangles == 1
    assert stat.connected_triples == 3
    assert stat.coefficient == 1.0


def test_clustering_path3():
    stat = global_clustering(build_graph(3, [(0, 1), (1, 2)]))
    assert stat.triangles == 0
    assert stat.connected_triples == 1
    assert stat.coefficient == 0.0


def test_clustering_k4_minus_edge(k4_minus_edge):
    oracle_triangles, oracle_triples = brute_force_triples(k4_minus_edge)
    assert (oracle_triangles, oracle_triples) == (2, 8)
    stat = global_clustering(k4_minus_edge)
    assert stat.triangles == oracle_triangles
    assert stat.connected_triples == oracle_triples
    assert stat.coefficient == pytest.approx(0.75, abs=1e-12)


def test_clustering_undefined_without_triples():
    assert global_clustering(build_graph(4, [(0, 1)])).coefficient is None
    assert global_clustering(build_graph(3, [])).coefficient is None


@given(graphs(max_nodes=12))
def test_clustering_matches_enumeration_oracle(g):
    stat = global_clustering(g)
    triangles, triples = brute_force_triples(g)
    assert stat.triangles == triangles
    assert stat.connected_triples == triples


@given(graphs(max_nodes=10, min_edges=2))
@settings(max_examples=60)
def test_clustering_relabel_invariant(g):
    rng = np.random.default_rng(0)
    before = global_clustering(g).coefficient
    after = global_clustering(permute_graph(g, rng)).coefficient
    if before is None:
        assert after is None
    else:
        assert 0.0 <= before <= 1.0
        assert after == pytest.approx(before, abs=1e-12)


# --- remaining degrees and assortativity -----------------------------------


def test_remaining_degrees_single_edge():
    stats = remaining_degree_stats(build_graph(2, [(0, 1)]))
    assert stats.q.tolist() == [1.0]
    assert stats.sigma_q == 0.0


def test_remaining_degrees_star(star4):
    stats = remaining_degree_stats(star4)
    # six directed stubs: three (2, 0) and three (0, 2)
    assert stats.q.tolist() == [0.5, 0.0, 0.5]
    assert stats.e[0, 2] == pytest.approx(0.5, abs=1e-15)
    assert stats.e[2, 0] == pytest.approx(0.5, abs=1e-15)
    assert stats.sigma_q == pytest.approx(1.0, abs=1e-15)


def test_remaining_degrees_cycle(cycle4):
    stats = remaining_degree_stats(cycle4)
    assert stats.q.tolist() == [0.0, 1.0]
    assert stats.sigma_q == 0.0


def test_assortativity_star(star4):
    assert exact_assortativity(star4) == Fraction(-1)
    assert assortativity(star4).value == pytest.approx(-1.0, abs=1e-12)


def test_assortativity_path4(path4):
    assert exact_assortativity(path4) == Fraction(-1, 2)
    assert assortativity(path4).value == pytest.approx(-0.5, abs=1e-12)


def test_assortativity_cycle_undefined(cycle4):
    stat = assortativity(cycle4)
    assert not stat.defined
    assert stat.value is None


def test_assortativity_empty_graph_raises():
    with pytest.raises(EmptyGraph):
        assortativity(build_graph(3, []))
    with pytest.raises(EmptyGraph):
        remaining_degree_stats(build_graph(3, []))


@given(graphs(max_nodes=12, min_edges=1))
@settings(max_examples=80)
def test_assortativity_matches_exact_oracle(g):
    exact = exact_assortativity(g)
    stat = assortativity(g)
    if exact is None:
        assert stat.value is None
    else:
        assert stat.value == pytest.approx(float(exact), abs=1e-9)
        assert -1.0 - 1e-9 <= stat.value <= 1.0 + 1e-9


@given(graphs(max_nodes=12, min_edges=1))
@settings(max_examples=60)
def test_assortativity_two_routes_agree(g):
    r_dist = assortativity_distribution_form(g)
    r_edge = assortativity_edge_form(g)
    assert (r_dist is None) == (r_edge is None)
    if r_dist is not None:
        assert abs(r_dist - r_edge) <= 1e-12 * max(1.0, abs(r_dist), abs(r_edge))


@given(graphs(max_nodes=10, min_edges=1))
@settings(max_examples=60)
def test_assortativity_relabel_invariant(g):
    rng = np.random.default_rng(1)
    before = assortativity(g).value
    after = assortativity(permute_graph(g, rng)).value
    if before is None:
        assert after is None
    else:
        assert after == pytest.approx(before, abs=1e-12)


@given(graphs(max_nodes=12, min_edges=1))
@settings(max_examples=60)
def test_joint_distribution_invariants(g):
    stats = remaining_degree_stats(g)
    assert stats.q.sum() == pytest.approx(1.0, abs=1e-12)
    assert stats.e.sum() == pytest.approx(1.0, abs=1e-12)
    assert np.abs(stats.e - stats.e.T).max() <= 1e-12
    assert np.abs(stats.e.sum(axis=0) - stats.q).max() <= 1e-12


def test_statistics_are_pure(star4):
    first = (
        connected_components(star4).count,
        global_clustering(star4).coefficient,
        assortativity(star4).value,
    )
    second = (
        connected_components(star4).count,
        global_clustering(star4).coefficient,
        assortativity(star4).value,
    )
    assert first == second


def test_larger_random_graph_against_oracles():
    rng = np.random.default_rng(7)
    g = random_graph(60, 0.1, rng)
    triangles, triples = brute_force_triples(g)
    stat = global_clustering(g)
    assert (stat.triangles, stat.connected_triples) == (triangles, triples)
    assert connected_components(g).count == brute_force_components(g)
    exact = exact_assortativity(g)
    assert assortativity(g).value == pytest.approx(float(exact), rel=1e-10)
