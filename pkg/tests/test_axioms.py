import pytest

from cubical import axioms, core, fixtures
from cubical.axioms import MessageWitness, PairWitness, TokenWitness
from cubical.errors import BudgetExceededError, NotCubicalError
from cubical.gsystem import family_gsystem, make_family


def test_c1(cub4, one_way, swap):
    assert axioms.check_c1(cub4).holds
    verdict = axioms.check_c1(one_way)
    assert not verdict.holds and verdict.witness == TokenWitness("tau")
    verdict = axioms.check_c1(swap)
    assert not verdict.holds and verdict.witness == TokenWitness("sigma")


def test_c2(cub4, one_way):
    assert axioms.check_c2(cub4).holds
    verdict = axioms.check_c2(fixtures.double_cub4())
    assert not verdict.holds
    source, target = verdict.witness.source, verdict.witness.target
    assert source.endswith("1") != target.endswith("1")
    verdict = axioms.check_c2(one_way)
    assert not verdict.holds and verdict.witness == PairWitness("T", "S")


def test_c3_cub4_exact(cub4):
    verdict = axioms.check_c3(cub4)
    assert verdict.holds and verdict.method == "exact"


def test_c3_four_cycle():
    family = make_family(["x", "y"], [[], ["x"], ["y"], ["x", "y"]])
    system = family_gsystem(family).system
    verdict = axioms.check_c3(system)
    assert verdict.holds and verdict.method == "exact"


def test_c3_triangle_fails_with_replaying_witness(triangle):
    verdict = axioms.check_c3(triangle)
    assert not verdict.holds and verdict.method == "exact"
    witness = verdict.witness
    assert isinstance(witness, MessageWitness)
    assert core.is_closed(triangle, witness.state, witness.message)
    assert not core.is_vacuous(triangle, witness.message)


def test_c3_vacuous_not_closed_witness():
    system = fixtures.repeated_class_path()
    verdict = axioms.check_c3(system)
    assert not verdict.holds
    witness = verdict.witness
    assert core.is_vacuous(system, witness.message)
    assert core.is_stepwise_effective(system, witness.state, witness.message)
    assert not core.is_closed(system, witness.state, witness.message)


def test_c3_bounded_fallback(one_way):
    verdict = axioms.check_c3(one_way)
    assert verdict.holds and verdict.method == "bounded" and verdict.bound == 4


def test_c4(cub4):
    assert axioms.check_c4(cub4).holds
    chain = fixtures.token_twice_chain()
    verdict = axioms.check_c4(chain)
    assert not verdict.holds
    assert verdict.witness == MessageWitness("A", ("f", "f"))
    assert core.is_stepwise_effective(chain, "A", verdict.witness.message)
    assert axioms.message_violates_alternation(chain, verdict.witness.message)


def test_c4_bare_token_twice():
    # A single reverse-less token effective twice in a row still violates.
    system = core.build_system(["A", "B", "C"], [("tau", {"A": "B", "B": "C"})])
    verdict = axioms.check_c4(system)
    assert not verdict.holds
    assert verdict.witness == MessageWitness("A", ("tau", "tau"))


def test_c4_self_reverse_exempt(swap):
    assert axioms.check_c4(swap).holds


def test_c4_on_gsystems():
    family = make_family(["x", "y", "z"], [[], ["x"], ["y"], ["x", "y"], ["x", "y", "z"]])
    assert axioms.check_c4(family_gsystem(family).system).holds


def test_ma(cub4, single_edge):
    verdict = axioms.check_ma(cub4)
    assert not verdict.holds
    assert verdict.witness == PairWitness("S", "P")
    assert axioms.check_ma(single_edge).holds
    family = make_family(["x", "y"], [[], ["x"], ["y"], ["x", "y"]])
    assert axioms.check_ma(family_gsystem(family).system).holds


def test_mb(cub4, triangle, one_way):
    assert axioms.check_mb(cub4).holds
    verdict = axioms.check_mb(triangle)
    assert not verdict.holds
    assert core.is_closed(triangle, verdict.witness.state, verdict.witness.message)
    assert not core.is_vacuous(triangle, verdict.witness.message)
    verdict = axioms.check_mb(one_way)
    assert verdict.holds and verdict.method == "bounded"


def test_classify(cub4, single_edge, one_way):
    assert axioms.classify(cub4).kind == axioms.CUBICAL_NOT_MEDIUM
    assert axioms.classify(single_edge).kind == axioms.MEDIUM
    assert axioms.classify(one_way).kind == axioms.NOT_CUBICAL


def test_require_cubical(one_way, cub4):
    axioms.require_cubical(cub4)
    with pytest.raises(NotCubicalError, match="C1"):
        axioms.require_cubical(one_way)


def test_enumerate_messages(cub4):
    assert set(axioms.enumerate_messages(cub4, "S", 2, closed=True)) == {("tau", "tau~")}
    assert set(axioms.enumerate_messages(cub4, "S", 0)) == {()}
    assert set(axioms.enumerate_messages(cub4, "S", 3, producing="P")) == {
        ("tau", "mu", "tau~")
    }


def test_enumerate_messages_budget(cub4):
    with pytest.raises(BudgetExceededError):
        list(axioms.enumerate_messages(cub4, "S", 12, node_budget=5))


def test_enumerate_concise(cub4):
    concise = set(axioms.enumerate_messages(cub4, "S", 4, concise=True))
    for m in concise:
        assert core.is_concise(cub4, "S", m)
    assert ("tau", "mu") in concise
    assert all(len(m) <= 2 for m in concise)


def test_independence_witnesses_fail_exactly_one():
    for axiom, system in fixtures.independence_witnesses().items():
        classification = axioms.classify(system)
        failing = [
            name
            for name in ("C1", "C2", "C3", "C4")
            if not classification.verdicts[name].holds
        ]
        assert failing == [axiom]


def _replayable(system, verdict):
    witness = verdict.witness
    if isinstance(witness, TokenWitness):
        reverse = core.reverse_of(system, witness.token)
        return reverse is None or reverse == witness.token
    if isinstance(witness, PairWitness):
        concise = verdict.axiom == "Ma"
        produced = axioms.enumerate_messages(
            system,
            witness.source,
            len(system.states),
            concise=concise,
            producing=witness.target,
        )
        return not any(produced)
    state, message = witness.state, witness.message
    if verdict.axiom == "C4":
        return core.is_stepwise_effective(
            system, state, message
        ) and axioms.message_violates_alternation(system, message)
    closed = core.is_closed(system, state, message)
    vacuous = core.is_vacuous(system, message)
    stepwise = core.is_stepwise_effective(system, state, message)
    return (closed and not vacuous) or (vacuous and stepwise and not closed)


def test_every_failed_verdict_witness_replays():
    for name, system in fixtures.fixture_systems().items():
        classification = axioms.classify(system)
        for verdict in classification.verdicts.values():
            if not verdict.holds:
                assert _replayable(system, verdict), f"{name} {verdict.axiom}"


def test_ma_and_mb_imply_the_cubical_axioms():
    # media are cubical: whenever both medium axioms hold, all four
    # cubical axioms hold as well
    import random

    from cubical.gsystem import build_gsystem, random_connected_cube_graph

    systems = list(fixtures.fixture_systems().values())
    for seed in range(25):
        rng = random.Random(seed + 4000)
        systems.append(
            build_gsystem(random_connected_cube_graph(rng, max_ground=5, max_members=12)).system
        )
    for system in systems:
        verdicts = axioms.classify(system).verdicts
        if verdicts["Ma"].holds and verdicts["Mb"].holds:
            assert all(verdicts[a].holds for a in ("C1", "C2", "C3", "C4"))


def test_exact_agrees_with_enumeration_on_triangle(triangle):
    # closed <-> vacuous violations found by plain enumeration
    found_closed_nonvacuous = False
    for state in triangle.states:
        for m in axioms.enumerate_messages(triangle, state, 8):
            if m and core.is_closed(triangle, state, m) and not core.is_vacuous(triangle, m):
                found_closed_nonvacuous = True
                break
        if found_closed_nonvacuous:
            break
    assert found_closed_nonvacuous == (not axioms.check_c3(triangle).holds)
