import math
from collections import deque

import pytest

from stabmis import (
    GenSpec,
    GeneratorError,
    default_p,
    default_r,
    gen_bipartite,
    gen_connected,
    gen_tree,
    gen_unit_disk,
    generate,
)
from stabmis.generators import _disk_edges


def two_colorable(g):
    color = {}
    for start in g.nodes:
        if start in color:
            continue
        color[start] = 0
        queue = deque((start,))
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


# -- trees --------------------------------------------------------------


def test_tree_n1_is_single_node():
    g = gen_tree(1, 0)
    assert g.n == 1 and g.edges == ()


def test_tree_n2_is_k2():
    assert gen_tree(2, 123).edges == ((0, 1),)


@pytest.mark.parametrize("n", [3, 7, 25, 80])
@pytest.mark.parametrize("seed", [0, 1, 99])
def test_tree_is_spanning_and_acyclic(n, seed):
    g = gen_tree(n, seed)
    assert len(g.edges) == n - 1
    assert g.is_connected()


def test_tree_rejects_n0():
    with pytest.raises(GeneratorError):
        gen_tree(0, 0)


def test_tree_seed_reproducible():
    assert gen_tree(40, 7) == gen_tree(40, 7)
    assert gen_tree(40, 7) != gen_tree(40, 8)


# -- bipartite ----------------------------------------------------------


@pytest.mark.parametrize("seed", range(8))
def test_bipartite_connected_and_two_colorable(seed):
    g = gen_bipartite(21, 0.15, seed)
    assert g.is_connected()
    assert two_colorable(g)


def test_bipartite_n2_is_k2_for_any_p():
    for p in (0.001, 0.5, 1.0):
        assert gen_bipartite(2, p, 3).edges == ((0, 1),)


def test_bipartite_rejects_small_n_and_bad_p():
    with pytest.raises(GeneratorError):
        gen_bipartite(1, 0.5, 0)
    with pytest.raises(GeneratorError):
        gen_bipartite(5, 0.0, 0)
    with pytest.raises(GeneratorError):
        gen_bipartite(5, 1.5, 0)


def test_bipartite_seed_reproducible():
    assert gen_bipartite(30, 0.2, 5) == gen_bipartite(30, 0.2, 5)


# -- unit disk ----------------------------------------------------------


def test_unit_disk_max_radius_gives_complete_graph():
    g = gen_unit_disk(8, math.sqrt(2.0), 4)
    assert len(g.edges) == 8 * 7 // 2


def test_disk_edge_at_exact_distance_is_present():
    assert _disk_edges([(0.0, 0.0), (0.0, 0.5)], 0.5) == [(0, 1)]
    assert _disk_edges([(0.0, 0.0), (0.0, 0.5)], 0.49) == []


def test_unit_disk_single_node():
    assert gen_unit_disk(1, 0.1, 0).n == 1


@pytest.mark.parametrize("seed", range(5))
def test_unit_disk_connected(seed):
    g = gen_unit_disk(40, default_r(40), seed)
    assert g.is_connected()


def test_unit_disk_rejects_bad_radius():
    with pytest.raises(GeneratorError):
        gen_unit_disk(5, 0.0, 0)
    with pytest.raises(GeneratorError):
        gen_unit_disk(5, 1.5, 0)
    with pytest.raises(GeneratorError):
        gen_unit_disk(5, -0.2, 0)


def test_unit_disk_seed_reproducible():
    assert gen_unit_disk(25, 0.4, 11) == gen_unit_disk(25, 0.4, 11)


def test_unit_disk_resample_cap_errors_out():
    # Radius far below the connectivity threshold at this order.
    with pytest.raises(GeneratorError):
        gen_unit_disk(60, 0.01, 0)


# -- connected ----------------------------------------------------------


def test_connected_p1_is_complete():
    g = gen_connected(6, 1.0, 9)
    assert len(g.edges) == 15


def test_connected_single_node():
    assert gen_connected(1, 0.5, 0).n == 1


@pytest.mark.parametrize("seed", range(8))
def test_connected_always_connected(seed):
    g = gen_connected(35, 0.05, seed)
    assert g.is_connected()


def test_connected_rejects_bad_params():
    with pytest.raises(GeneratorError):
        gen_connected(0, 0.5, 0)
    with pytest.raises(GeneratorError):
        gen_connected(5, 0.0, 0)


def test_connected_seed_reproducible():
    assert gen_connected(50, 0.1, 3) == gen_connected(50, 0.1, 3)


# -- spec dispatch ------------------------------------------------------


def test_generate_dispatch_matches_direct_calls():
    assert generate(GenSpec("tree", 12, seed=5)) == gen_tree(12, 5)
    assert generate(GenSpec("bipartite", 12, p=0.3, seed=5)) == gen_bipartite(12, 0.3, 5)
    assert generate(GenSpec("unitdisk", 12, r=0.5, seed=5)) == gen_unit_disk(12, 0.5, 5)
    assert generate(GenSpec("connected", 12, p=0.3, seed=5)) == gen_connected(12, 0.3, 5)


def test_genspec_rejects_unknown_class():
    with pytest.raises(GeneratorError):
        GenSpec("smallworld", 10)


def test_genspec_round_trips_to_dict():
    spec = GenSpec("unitdisk", 20, r=0.25, seed=9)
    assert GenSpec(**spec.to_dict()) == spec


def test_default_parameters_are_legal():
    for n in (2, 10, 100, 500):
        assert 0 < default_p(n) <= 1
        assert 0 < default_r(n) <= math.sqrt(2.0)
