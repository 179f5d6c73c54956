import random

import pytest

from stabmis import (
    ALGORITHMS,
    ALGORITHM_ORDER,
    Graph,
    WAIT,
    color,
    eligible_rules,
    gen_connected,
    get_algorithm,
    random_initial,
    swn,
)
from toygraphs import complete_graph, path_graph, star_graph

K2 = Graph(2, [(0, 1)])


def names(algo_name, g, config, v):
    return tuple(r.name for r in eligible_rules(get_algorithm(algo_name), g, config, v))


# -- registry shape -----------------------------------------------------


def test_registry_has_all_sixteen_rows():
    assert len(ALGORITHM_ORDER) == 16
    assert ALGORITHM_ORDER[0] == "C1" and ALGORITHM_ORDER[-1] == "D5"


def test_variant_only_on_degree_comparing_families():
    for name, algo in ALGORITHMS.items():
        if algo.family in ("C1", "C5", "D1", "D5"):
            assert algo.variant is None
        else:
            assert algo.variant in ("b0", "i")


def test_state_domains():
    assert get_algorithm("C1").states == (0, 1)
    assert get_algorithm("C5").states == (1, 2, 3)
    assert get_algorithm("D1").states == (0, 1, WAIT)
    assert get_algorithm("D5").states == (1, 2, 3, WAIT)


def test_schedulers_match_family_letter():
    for name, algo in ALGORITHMS.items():
        assert algo.scheduler == ("central" if name[0] == "C" else "distributed")


def test_get_algorithm_rejects_unknown():
    with pytest.raises(ValueError):
        get_algorithm("C9")


# -- basic family (C1/D1) -----------------------------------------------


def test_c1_k2_both_in_set_both_rout():
    assert names("C1", K2, [1, 1], 0) == ("ROut",)
    assert names("C1", K2, [1, 1], 1) == ("ROut",)


def test_c1_k2_stable_configuration():
    assert names("C1", K2, [1, 0], 0) == ()
    assert names("C1", K2, [1, 0], 1) == ()


def test_d1_k2_both_waiting_only_smaller_id_enters():
    assert names("D1", K2, [WAIT, WAIT], 0) == ("RIn",)
    assert names("D1", K2, [WAIT, WAIT], 1) == ()


def test_d1_wait_and_back():
    assert names("D1", K2, [0, 0], 0) == ("RWait",)
    assert names("D1", K2, [WAIT, 1], 0) == ("RBack",)


# -- degree family (C2/D2) ----------------------------------------------


def test_c2b0_p3_higher_degree_member_leaves():
    p3 = path_graph(3)
    config = [0, 1, 1]
    assert names("C2b0", p3, config, 0) == ()
    assert names("C2b0", p3, config, 1) == ("ROut",)
    assert names("C2b0", p3, config, 2) == ()


def test_c2i_p3_lower_degree_member_leaves():
    p3 = path_graph(3)
    config = [0, 1, 1]
    assert names("C2i", p3, config, 1) == ()
    assert names("C2i", p3, config, 2) == ("ROut",)


@pytest.mark.parametrize("variant", ["C2b0", "C2i"])
def test_c2_all_zero_everyone_can_enter(variant):
    p3 = path_graph(3)
    for v in range(3):
        assert names(variant, p3, [0, 0, 0], v) == ("RIn",)


def test_d2_rout_uses_degree_comparison():
    p3 = path_graph(3)
    config = [0, 1, 1]
    assert names("D2b0", p3, config, 1) == ("ROut",)
    assert names("D2b0", p3, config, 2) == ()
    assert names("D2i", p3, config, 2) == ("ROut",)


# -- very weak family (C3/D3) -------------------------------------------


def test_c3b0_star_leaf_gets_both_entry_rules():
    star = star_graph(4)
    zero = [0] * 5
    assert names("C3b0", star, zero, 1) == ("RIn", "RInVW")


def test_c3b0_star_center_is_not_very_weak():
    star = star_graph(4)
    assert names("C3b0", star, [0] * 5, 0) == ("RIn",)


def test_c3b0_k2_equal_degrees_no_rinvw():
    assert names("C3b0", K2, [0, 0], 0) == ("RIn",)
    assert names("C3b0", K2, [0, 0], 1) == ("RIn",)


def test_c3i_star_center_is_relatively_strong():
    # flipped comparisons: the max-degree center satisfies the entry rule
    star = star_graph(4)
    assert names("C3i", star, [0] * 5, 0) == ("RIn", "RInVW")
    assert names("C3i", star, [0] * 5, 1) == ("RIn",)


def test_c3b0_very_weak_node_enters_past_occupied_neighbor():
    star = star_graph(4)
    config = [1, 0, 0, 0, 0]  # center in the set
    assert names("C3b0", star, config, 1) == ("RInVW",)


def test_d3b0_wait_entry_disjuncts():
    star = star_graph(4)
    # leaf with the center in the set: very weak, so wait entry stays open
    assert names("D3b0", star, [1, 0, 0, 0, 0], 1) == ("RWait",)
    # center with a leaf in the set: neither disjunct holds
    assert names("D3b0", star, [0, 1, 0, 0, 0], 0) == ()


def test_d3b0_waiting_very_weak_node_fires_rinvw_not_rback():
    star = star_graph(4)
    assert names("D3b0", star, [1, WAIT, 0, 0, 0], 1) == ("RInVW",)


# -- relatively very weak family (C4/D4) ---------------------------------


def test_c4b0_p3_leaf_enters_despite_bigger_member_neighbor():
    p3 = path_graph(3)
    assert names("C4b0", p3, [0, 1, 0], 0) == ("RIn",)


def test_c4b0_k2_both_members_equal_degree_both_rout():
    assert names("C4b0", K2, [1, 1], 0) == ("ROut",)
    assert names("C4b0", K2, [1, 1], 1) == ("ROut",)


def test_c4b0_star_center_enters_when_set_empty():
    star = star_graph(4)
    assert names("C4b0", star, [0] * 5, 0) == ("RIn",)


def test_c4i_p3_leaf_blocked_by_bigger_member_neighbor():
    p3 = path_graph(3)
    assert names("C4i", p3, [0, 1, 0], 0) == ()


def test_d4_rin_has_no_id_tiebreak():
    p3 = path_graph(3)
    config = [WAIT, WAIT, WAIT]
    # both leaves see only the bigger-degree middle; middle sees no members
    assert names("D4b0", p3, config, 0) == ("RIn",)
    assert names("D4b0", p3, config, 1) == ("RIn",)
    assert names("D4b0", p3, config, 2) == ("RIn",)


# -- coloring family (C5/D5) --------------------------------------------


def test_color_formula_cases():
    p3 = path_graph(3)
    assert color(p3.adj, [1, 0, 2], 1) == 3
    assert color(p3.adj, [2, 0, 3], 1) == 1
    assert color(p3.adj, [1, 0, WAIT], 1) == 2


def test_c5_isolated_node_recolors_to_one():
    g = Graph(1)
    assert names("C5", g, [2], 0) == ("Re-color",)
    assert color(g.adj, [2], 0) == 1


def test_c5_k2_proper_two_coloring_is_stable():
    assert names("C5", K2, [1, 2], 0) == ()
    assert names("C5", K2, [1, 2], 1) == ()


def test_d5_wrongly_colored_three_waits():
    assert names("D5", K2, [3, 2], 0) == ("RWait",)  # color(0) = 1


def test_d5_rback_when_no_color_available():
    p3 = path_graph(3)
    assert names("D5", p3, [1, WAIT, 2], 1) == ("RBack",)


def test_d5_rin_blocked_by_smaller_waiting_neighbor():
    assert names("D5", K2, [WAIT, WAIT], 0) == ("RIn",)
    assert names("D5", K2, [WAIT, WAIT], 1) == ()


def test_swn_cases():
    star = star_graph(2)  # center 0, leaves 1 2
    assert swn(star.adj, [WAIT, 0, WAIT], 2)  # leaf 2 sees waiting center 0? no edge 1-2
    assert not swn(star.adj, [0, WAIT, WAIT], 1)  # waiting neighbor 0? x(0)=0
    assert not swn(star.adj, [WAIT, WAIT, 0], 0)  # waiting neighbor has bigger id


def test_eligible_rules_rejects_unknown_node():
    with pytest.raises(ValueError):
        eligible_rules(get_algorithm("C1"), K2, [0, 0], 7)


# -- locality: guards read only the closed neighborhood ------------------


@pytest.mark.parametrize("algo_name", ALGORITHM_ORDER)
def test_guard_locality(algo_name):
    algo = get_algorithm(algo_name)
    rng = random.Random(hash(algo_name) % 10_000)
    for trial in range(5):
        g = gen_connected(12, 0.25, trial)
        config = list(random_initial(algo, g, trial + 50))
        for v in g.nodes:
            before = names(algo_name, g, config, v)
            outside = [u for u in g.nodes if u != v and u not in g.adj[v]]
            mutated = list(config)
            for u in outside:
                mutated[u] = rng.choice(algo.states)
            assert names(algo_name, g, mutated, v) == before
