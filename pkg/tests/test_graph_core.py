import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphbench import (
    DuplicateEdge,
    InvalidEdgeListFormat,
    NodeOutOfRange,
    SelfLoop,
    build_graph,
    degrees,
    from_text,
    laplacian,
    read_edge_list,
    to_text,
    write_edge_list,
)
from conftest import adjacency_matrix, graphs


def test_single_edge():
    g = build_graph(2, [(0, 1)])
    assert g.edge_count == 1
    assert degrees(g).tolist() == [1, 1]


def test_triangle_degrees(triangle):
    assert degrees(triangle).tolist() == [2, 2, 2]


def test_star_degrees(star4):
    assert degrees(star4).tolist() == [3, 1, 1, 1]


def test_empty_graph_degrees():
    assert degrees(build_graph(4, [])).tolist() == [0, 0, 0, 0]


def test_self_loop_rejected():
    with pytest.raises(SelfLoop):
        build_graph(3, [(0, 0)])


def test_duplicate_rejected_both_orientations():
    with pytest.raises(DuplicateEdge):
        build_graph(3, [(0, 1), (1, 0)])


def test_out_of_range_rejected():
    with pytest.raises(NodeOutOfRange):
        build_graph(3, [(0, 3)])
    with pytest.raises(NodeOutOfRange):
        build_graph(3, [(-1, 2)])


def test_laplacian_single_edge():
    lap = laplacian(build_graph(2, [(0, 1)]))
    assert lap.tolist() == [[1.0, -1.0], [-1.0, 1.0]]


def test_laplacian_empty():
    assert laplacian(build_graph(3, [])).tolist() == [[0.0] * 3] * 3


def test_laplacian_triangle(triangle):
    expected = [[2.0, -1.0, -1.0], [-1.0, 2.0, -1.0], [-1.0, -1.0, 2.0]]
    assert laplacian(triangle).tolist() == expected


@given(graphs(max_nodes=12))
def test_laplacian_rows_sum_to_zero(g):
    lap = laplacian(g)
    assert np.array_equal(lap, lap.T)
    assert (lap.sum(axis=1) == 0.0).all()  # exact: assembled from integers


@given(graphs(max_nodes=12))
def test_degrees_match_adjacency_scan(g):
    assert degrees(g).tolist() == adjacency_matrix(g).sum(axis=1).tolist()


@given(graphs(max_nodes=10), st.randoms(use_true_random=False))
def test_build_graph_order_insensitive(g, rnd):
    edge_list = [tuple(e) for e in g.edges.tolist()]
    shuffled = list(edge_list)
    rnd.shuffle(shuffled)
    flipped = [(v, u) if rnd.random() < 0.5 else (u, v) for u, v in shuffled]
    assert build_graph(g.node_count, flipped) == g


@given(graphs(max_nodes=12))
@settings(max_examples=50)
def test_edge_list_text_round_trip(g):
    text = to_text(g)
    back = from_text(text)
    assert back == g
    assert to_text(back) == text  # bit-exact both ways


def test_edge_list_file_round_trip(tmp_path, star4):
    path = tmp_path / "star.txt"
    write_edge_list(star4, path)
    assert read_edge_list(path) == star4
    data = path.read_bytes()
    write_edge_list(read_edge_list(path), path)
    assert path.read_bytes() == data


def test_edge_list_format():
    assert to_text(build_graph(2, [(1, 0)])) == "2 1\n0 1\n"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2\n",
        "2 1\n0 1",  # missing trailing newline
        "2 2\n0 1\n",  # wrong count
        "2 1\n1 0\n",  # u >= v
        "3 2\n1 2\n0 1\n",  # out of canonical order
        "2 1\n0 x\n",
        "a b\n",
    ],
)
def test_edge_list_rejects_malformed(text):
    with pytest.raises(InvalidEdgeListFormat):
        from_text(text)


def test_graph_is_immutable(star4):
    with pytest.raises(ValueError):
        star4.edges[0, 0] = 5
