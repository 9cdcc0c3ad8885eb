"""
Tests for planar networks: validation, path matrices, glued powers, path
enumeration, the brute-force oracle and the JSON network format.
"""
import itertools
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.append('.')

from pathrecip.core.errors import CapacityError, DimensionError, NetworkFileError, NetworkValidationError
from pathrecip.core.exact import ExactMatrix, SubsetIndex, det_bareiss, mat_pow, submatrix
from pathrecip.data.network import PlanarNetwork, oracle_nonintersecting_sum
from pathrecip.data.network_file import (
    load_network_file,
    network_from_document,
    network_to_document,
    parse_network_file,
)
from pathrecip.apps.catalog import built_in_networks, diamond, single_edge
from pathrecip.apps.dyck import build_dyck_network
from pathrecip.apps.partitions import Partition
from pathrecip.apps.schur import EvalPoint, build_schur_network

NETWORKS = Path(__file__).parent / "networks"


def small_subset_pairs(m: int, max_size: int = 2):
    for size in range(0, min(m, max_size) + 1):
        for i in SubsetIndex.all_of_size(m, size):
            for j in SubsetIndex.all_of_size(m, size):
                yield i, j


def test_validate_examples():
    assert single_edge().validate().valid

    cyclic = PlanarNetwork.build(["a", "b"], [("a", "b", 1), ("b", "a", 1)], ["a"], ["b"])
    kinds = {v.kind for v in cyclic.validate().violations}
    assert "cycle" in kinds

    bad_degree = PlanarNetwork.build(["x", "s", "t"], [("x", "s", 1), ("s", "t", 1)], ["s"], ["t"])
    assert [v.kind for v in bad_degree.validate().violations] == ["degree"]

    unknown = PlanarNetwork.build(["s", "t"], [("s", "q", 1)], ["s"], ["t"])
    assert "unknown_vertex" in {v.kind for v in unknown.validate().violations}

    overlap = PlanarNetwork.build(["s"], [], ["s"], ["s"])
    assert "overlap" in {v.kind for v in overlap.validate().violations}

    with pytest.raises(NetworkValidationError) as excinfo:
        cyclic.require_valid()
    assert not excinfo.value.report.valid


def test_topological_order():
    chain = PlanarNetwork.build(["c", "b", "a"], [("a", "b", 1), ("b", "c", 1)], [], [])
    assert chain.topological_order() == ["a", "b", "c"]

    isolated = PlanarNetwork.build(["x", "a"], [], [], [])
    assert isolated.topological_order() == ["a", "x"]

    square = PlanarNetwork.build(
        ["d", "c", "b", "a"], [("a", "b", 1), ("a", "c", 1), ("b", "d", 1), ("c", "d", 1)], [], []
    )
    assert square.topological_order() == ["a", "b", "c", "d"]

    cyclic = PlanarNetwork.build(["a", "b"], [("a", "b", 1), ("b", "a", 1)], [], [])
    with pytest.raises(NetworkValidationError, match="cycle"):
        cyclic.topological_order()


def test_path_matrix_examples():
    assert single_edge().path_matrix() == ExactMatrix.from_rows([[2]])
    assert build_dyck_network(1, 1).path_matrix() == ExactMatrix.from_rows([[1, 1], [1, 2]])
    assert build_dyck_network(1, 0).path_matrix() == ExactMatrix.from_rows([[1]])
    assert diamond().path_matrix() == ExactMatrix.from_rows([[3, 3], [1, "3/2"]])
    g0 = build_dyck_network(2, 1).glue_power(0)
    assert g0.degenerate and g0.validate().valid
    assert g0.path_matrix() == ExactMatrix.identity(3)


def test_glue_power():
    g = build_dyck_network(1, 1)
    assert g.glue_power(1).path_matrix() == g.path_matrix()

    chain = single_edge().glue_power(3)
    assert chain.sources == ("b0_1",) and chain.sinks == ("b3_1",)
    assert len(chain.edges) == 3
    assert chain.path_matrix() == ExactMatrix.from_rows([[8]])

    glued = build_dyck_network(1, 1).glue_power(2)
    assert "c1_u1" in glued.vertices and "c2_u2" in glued.vertices
    with pytest.raises(DimensionError):
        g.glue_power(-1)


@pytest.mark.parametrize("name", sorted(built_in_networks()))
def test_gluing_law(name):
    net = built_in_networks()[name]
    p = net.path_matrix()
    for n in range(6):
        assert net.glue_power(n).path_matrix() == mat_pow(p, n)


def test_enumerate_paths():
    net = diamond()
    [empty] = net.enumerate_paths("a", "a")
    assert empty.length == 0 and empty.weight == 1
    square = PlanarNetwork.build(
        ["a", "b", "c", "d"], [("a", "b", 1), ("a", "c", 1), ("b", "d", 1), ("c", "d", 1)], ["a"], ["d"]
    )
    assert len(square.enumerate_paths("a", "d")) == 2
    assert net.enumerate_paths("s2", "a") == []
    with pytest.raises(NetworkValidationError):
        net.enumerate_paths("s1", "nowhere")


@pytest.mark.parametrize("name", sorted(built_in_networks()))
def test_paths_no_longer_than_longest_chain(name):
    net = built_in_networks()[name].glue_power(2)
    longest = net.longest_chain()
    for start, end in itertools.product(net.sources, net.sinks):
        assert all(path.length <= longest for path in net.enumerate_paths(start, end))


def test_oracle_examples():
    net = build_dyck_network(1, 1)
    empty = SubsetIndex.of([], 2)
    assert oracle_nonintersecting_sum(net, empty, empty) == 1
    first = SubsetIndex.of([1], 2)
    assert oracle_nonintersecting_sum(net.glue_power(2), first, first) == 2
    full = SubsetIndex.full(3)
    assert oracle_nonintersecting_sum(build_dyck_network(2, 1), full, full) == 1
    with pytest.raises(DimensionError):
        oracle_nonintersecting_sum(net, first, SubsetIndex.full(2))


def test_oracle_capacity_guard():
    net = build_dyck_network(2, 2).glue_power(3)
    full = SubsetIndex.full(4)
    with pytest.raises(CapacityError, match="exceeds capacity"):
        oracle_nonintersecting_sum(net, full, full, capacity=10)


@pytest.mark.parametrize("name", sorted(built_in_networks()))
def test_lgv_determinant_matches_oracle(name):
    net = built_in_networks()[name]
    for n in range(4):
        glued = net.glue_power(n)
        p = glued.path_matrix()
        for i, j in small_subset_pairs(net.m):
            assert det_bareiss(submatrix(p, i, j)) == oracle_nonintersecting_sum(glued, i, j)


SCHUR_SHAPES = [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1), (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("parts", SCHUR_SHAPES)
@pytest.mark.parametrize("z", [EvalPoint.of(1), EvalPoint.of(1, "1/2")])
def test_lgv_on_schur_networks(parts, z):
    net = build_schur_network(Partition(parts), z.k).instantiate(z)
    for n in range(4):
        glued = net.glue_power(n)
        p = glued.path_matrix()
        for i, j in small_subset_pairs(net.m):
            assert det_bareiss(submatrix(p, i, j)) == oracle_nonintersecting_sum(glued, i, j)


def test_parse_network_file():
    text = '{"vertices": ["s", "t"], "edges": [{"from": "s", "to": "t", "weight": "2"}], "sources": ["s"], "sinks": ["t"]}'
    net = parse_network_file(text)
    assert net.edges[0].weight == Fraction(2)
    assert parse_network_file(text.replace('"2"', '"3/6"')).edges[0].weight == Fraction(1, 2)

    with pytest.raises(NetworkFileError, match="zero denominator"):
        parse_network_file(text.replace('"2"', '"1/0"'))
    with pytest.raises(NetworkFileError, match="edges.0.weight"):
        parse_network_file(text.replace('"2"', '"two"'))
    with pytest.raises(NetworkFileError, match="line 1"):
        parse_network_file(text[:-1])
    with pytest.raises(NetworkFileError, match="sinks"):
        parse_network_file('{"vertices": [], "edges": [], "sources": []}')
    with pytest.raises(NetworkValidationError):
        parse_network_file(text.replace('"to": "t"', '"to": "q"'))


def test_bundled_files_and_document_round_trip():
    net = load_network_file(NETWORKS / "dyck_1_1.json")
    assert net.name == "dyck_1_1"
    assert net.path_matrix() == ExactMatrix.from_rows([[1, 1], [1, 2]])
    again = network_from_document(network_to_document(diamond()))
    assert again.path_matrix() == diamond().path_matrix()
    assert load_network_file(NETWORKS / "singular.json").path_matrix() == ExactMatrix.from_rows([[1, 1], [1, 1]])
    with pytest.raises(NetworkFileError, match="cannot read"):
        load_network_file(NETWORKS / "missing.json")
