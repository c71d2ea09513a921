import random

import pytest

from cubical import axioms, core, gsystem
from cubical.errors import (
    DisconnectedError,
    NotAWalkError,
    NotCubeEdgeError,
    NotStepwiseEffectiveError,
)


def example_4_1():
    family = gsystem.make_family(["x", "y"], [[], ["x"], ["y"], ["x", "y"]])
    empty, x, y, xy = (frozenset(m) for m in ([], ["x"], ["y"], ["x", "y"]))
    edges = (
        frozenset((empty, x)),
        frozenset((x, xy)),
        frozenset((y, xy)),
    )
    return gsystem.build_gsystem(gsystem.CubeGraph(family, edges))


def test_example_4_1_is_isomorphic_to_cub4(cub4):
    g = example_4_1()
    alpha = {"S": "{}", "T": "{x}", "Q": "{x,y}", "P": "{y}"}
    beta = {"tau": "g:x", "tau~": "g~:x", "mu": "g:y", "mu~": "g~:y"}
    assert core.check_isomorphism(cub4, g.system, alpha, beta)
    swapped = {"tau": "g:y", "tau~": "g~:x", "mu": "g:x", "mu~": "g~:y"}
    assert not core.check_isomorphism(cub4, g.system, alpha, swapped)
    assert axioms.classify(g.system).kind == axioms.CUBICAL_NOT_MEDIUM


def test_single_edge_gsystem():
    family = gsystem.make_family(["x"], [[], ["x"]])
    g = gsystem.family_gsystem(family)
    assert g.system.states == ("{}", "{x}")
    assert g.system.token_names == ("g:x", "g~:x")
    assert core.reverse_of(g.system, "g:x") == "g~:x"
    assert axioms.classify(g.system).kind == axioms.MEDIUM


def test_full_four_cycle_is_medium():
    family = gsystem.make_family(["x", "y"], [[], ["x"], ["y"], ["x", "y"]])
    g = gsystem.family_gsystem(family)
    assert len(g.graph.edges) == 4
    assert axioms.classify(g.system).kind == axioms.MEDIUM


def test_edges_must_be_cube_edges():
    family = gsystem.make_family(["x", "y"], [[], ["x", "y"]])
    with pytest.raises(NotCubeEdgeError):
        gsystem.CubeGraph(family, (frozenset((frozenset(), frozenset(("x", "y")))),))


def test_graph_must_be_connected():
    family = gsystem.make_family(["x", "y"], [[], ["x"], ["y"], ["x", "y"]])
    empty, x = frozenset(), frozenset(("x",))
    with pytest.raises(DisconnectedError):
        gsystem.CubeGraph(family, (frozenset((empty, x)),))


def test_walk_to_message():
    g = example_4_1()
    empty, x, xy = frozenset(), frozenset(("x",)), frozenset(("x", "y"))
    assert gsystem.walk_to_message(g, [empty, x, xy]) == ("g:x", "g:y")
    assert gsystem.walk_to_message(g, [empty]) == ()
    assert gsystem.walk_to_message(g, [empty, x, empty]) == ("g:x", "g~:x")
    with pytest.raises(NotAWalkError):
        gsystem.walk_to_message(g, [empty, xy])


def test_message_to_walk_inverts():
    g = example_4_1()
    empty, x, xy = frozenset(), frozenset(("x",)), frozenset(("x", "y"))
    for walk in ([empty, x, xy], [empty], [empty, x, empty]):
        message = gsystem.walk_to_message(g, walk)
        assert gsystem.message_to_walk(g, walk[0], message) == tuple(walk)
    # the edge {}|{y} is absent, so g:y fixes the empty set
    with pytest.raises(NotStepwiseEffectiveError):
        gsystem.message_to_walk(g, frozenset(), ("g:y",))


@pytest.mark.parametrize("seed", range(30))
def test_random_gsystems_are_cubical(seed):
    rng = random.Random(seed)
    graph = gsystem.random_connected_cube_graph(rng, max_ground=5, max_members=20)
    g = gsystem.build_gsystem(graph)
    kind = axioms.classify(g.system).kind
    assert kind != axioms.NOT_CUBICAL
    active = sorted(g.graph.family.union - g.graph.family.intersection)
    for x in active:
        assert core.reverse_of(g.system, f"g:{x}") == f"g~:{x}"


@pytest.mark.parametrize("seed", range(10))
def test_random_walk_message_round_trip(seed):
    rng = random.Random(seed + 1000)
    graph = gsystem.random_connected_cube_graph(rng, max_ground=5, max_members=16)
    g = gsystem.build_gsystem(graph)
    members = list(g.graph.family.members)
    adjacency = {m: [] for m in members}
    for e in g.graph.edges:
        a, b = tuple(e)
        adjacency[a].append(b)
        adjacency[b].append(a)
    walk = [rng.choice(members)]
    for _ in range(rng.randrange(0, 12)):
        nbrs = adjacency[walk[-1]]
        if not nbrs:
            break
        walk.append(rng.choice(nbrs))
    message = gsystem.walk_to_message(g, walk)
    assert gsystem.message_to_walk(g, walk[0], message) == tuple(walk)
    assert core.is_stepwise_effective(g.system, g.state_of[walk[0]], message)
