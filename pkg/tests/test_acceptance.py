"""Acceptance suite: one test per criterion, each printing a pass/fail
line with its runtime (run with ``pytest -s`` to see the lines live)."""

import random
import time
from itertools import islice

import pytest

from cubical import (
    axioms,
    content,
    core,
    fixtures,
    families,
    gsystem,
    representation,
    stochastic,
)

THETA = {"tau": 0.1, "tau~": 0.2, "mu": 0.3, "mu~": 0.4}


class Criterion:
    def __init__(self, number, title, budget_seconds):
        self.number = number
        self.title = title
        self.budget = budget_seconds
        self.start = None

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None and elapsed < self.budget else "FAIL"
        print(f"ACCEPTANCE {self.number:02d} {self.title}: {status} ({elapsed:.2f}s)")
        if exc_type is None:
            assert elapsed < self.budget, (
                f"criterion {self.number} exceeded its {self.budget}s budget"
            )
        return False


def test_criterion_01_cub4_classification():
    with Criterion(1, "cub4 is a cubical system but not a medium", 1.0):
        system = fixtures.cub4()
        classification = axioms.classify(system)
        assert classification.kind == axioms.CUBICAL_NOT_MEDIUM
        assert classification.verdicts["Ma"].witness == axioms.PairWitness("S", "P")


def test_criterion_02_cub4_embedding():
    with Criterion(2, "cub4 embeds into the square up to label renaming", 1.0):
        system = fixtures.cub4()
        embedding = representation.embed(system)
        alpha = embedding.alpha
        assert alpha["S"] == frozenset()
        assert len(alpha["T"]) == 1 and len(alpha["P"]) == 1
        assert alpha["T"] != alpha["P"]
        assert alpha["Q"] == alpha["T"] | alpha["P"]
        assert representation.verify_embedding(system, embedding)
        assert core.check_isomorphism(
            system,
            embedding.gsystem.system,
            embedding.alpha_names(),
            embedding.beta,
        )


def _replay_witness(system, axiom, witness):
    if axiom == "C1":
        assert isinstance(witness, axioms.TokenWitness)
        reverse = core.reverse_of(system, witness.token)
        assert reverse is None or reverse == witness.token
    elif axiom == "C2":
        assert isinstance(witness, axioms.PairWitness)
        produced = axioms.enumerate_messages(
            system,
            witness.source,
            len(system.states),
            producing=witness.target,
        )
        assert not list(produced)
    elif axiom == "C3":
        assert isinstance(witness, axioms.MessageWitness)
        state, message = witness.state, witness.message
        closed = core.is_closed(system, state, message)
        vacuous = core.is_vacuous(system, message)
        stepwise = core.is_stepwise_effective(system, state, message)
        assert (closed and not vacuous) or (vacuous and stepwise and not closed)
    elif axiom == "C4":
        assert isinstance(witness, axioms.MessageWitness)
        assert core.is_stepwise_effective(system, witness.state, witness.message)
        assert axioms.message_violates_alternation(system, witness.message)
    else:
        pytest.fail(f"unexpected axiom {axiom}")


def test_criterion_03_axiom_independence():
    with Criterion(3, "four witnesses each fail exactly one axiom", 1.0):
        witnesses = fixtures.independence_witnesses()
        assert sorted(witnesses) == ["C1", "C2", "C3", "C4"]
        for axiom, system in witnesses.items():
            classification = axioms.classify(system)
            failing = [
                name
                for name in ("C1", "C2", "C3", "C4")
                if not classification.verdicts[name].holds
            ]
            assert failing == [axiom], f"witness for {axiom} fails {failing}"
            _replay_witness(system, axiom, classification.verdicts[axiom].witness)


def test_criterion_04_round_trip_on_random_cube_subgraphs():
    with Criterion(4, "200 random cube subgraphs classify and round trip", 60.0):
        for seed in range(200):
            rng = random.Random(seed)
            graph = gsystem.random_connected_cube_graph(rng, max_ground=6, max_members=40)
            g = gsystem.build_gsystem(graph)
            classification = axioms.classify(g.system)
            assert classification.kind != axioms.NOT_CUBICAL, f"seed {seed}"
            embedding = representation.embed(g.system)
            assert representation.verify_embedding(g.system, embedding), f"seed {seed}"
            assert len(embedding.gsystem.graph.family.members) == len(graph.family.members)
            assert len(embedding.gsystem.graph.edges) == len(graph.edges)


def _sample_messages(system, rng, per_start=150, max_len=4):
    for start in system.states:
        yield start, ()
        for message in islice(
            axioms.enumerate_messages(system, start, max_len), per_start
        ):
            yield start, message
    for _ in range(40):
        state = rng.choice(system.states)
        start = state
        message = []
        for _ in range(rng.randrange(1, 2 * len(system.states) + 1)):
            options = system.successors[state]
            if not options:
                break
            token, state = rng.choice(options)
            message.append(token)
        yield start, tuple(message)


def _check_content_laws(system, rng):
    contents = content.state_contents(system)

    # one orientation of every reverse pair per state, never both
    for state in system.states:
        for token in system.token_names:
            reverse = system.reverses[token]
            assert (token in contents[state]) != (reverse in contents[state])
    # contents identify states
    assert len(set(contents.values())) == len(system.states)

    by_endpoint = {}
    for start, message in _sample_messages(system, rng):
        end = core.apply(system, start, message)
        observed = content.message_content(system, message)
        for token in system.token_names:
            diff = content.occurrence_count(message, token) - content.occurrence_count(
                message, system.reverses[token]
            )
            assert diff in (-1, 0, 1)
            assert (token in observed) == (diff == 1)
        if message:
            assert core.is_closed(system, start, message) == (not observed)
        assert observed == contents[end] - contents[start]
        reverse_msg = core.reverse_message(system, message)
        reverse_content = content.message_content(system, reverse_msg)
        assert contents[start] ^ contents[end] == observed | reverse_content
        assert not observed & reverse_content
        by_endpoint.setdefault((start, end), set()).add(observed)
    # messages from a common start agree in content exactly per endpoint
    for (start, end), seen in by_endpoint.items():
        assert len(seen) == 1
    by_start = {}
    for (start, end), seen in by_endpoint.items():
        by_start.setdefault(start, []).extend(seen)
    for start, contents_list in by_start.items():
        assert len(contents_list) == len(set(contents_list))


def test_criterion_05_content_property_suite():
    with Criterion(5, "content calculus laws on fixtures and 100 G-systems", 120.0):
        rng = random.Random(4242)
        cubical_fixtures = [
            fixtures.cub4(),
            fixtures.single_edge_medium(),
            gsystem.family_gsystem(
                gsystem.make_family(["x", "y"], [[], ["x"], ["y"], ["x", "y"]])
            ).system,
        ]
        for system in cubical_fixtures:
            _check_content_laws(system, rng)
            bound = 2 * len(system.states)
            contents = content.state_contents(system)
            for state in system.states:
                assert content.state_content_oracle(system, state, bound) == contents[state]
        for seed in range(100):
            graph_rng = random.Random(seed + 500)
            graph = gsystem.random_connected_cube_graph(
                graph_rng, max_ground=6, max_members=16
            )
            system = gsystem.build_gsystem(graph).system
            _check_content_laws(system, rng)
            if len(system.states) <= 8:
                bound = 2 * len(system.states)
                contents = content.state_contents(system)
                for state in system.states:
                    assert (
                        content.state_content_oracle(system, state, bound)
                        == contents[state]
                    )


def test_criterion_06_stationary_closed_form():
    with Criterion(6, "closed-form stationary distribution equals the solver", 30.0):
        chain = stochastic.build_chain(fixtures.cub4(), None, THETA)
        closed = stochastic.stationary_closed_form(chain)
        expected = {"S": 8 / 21, "T": 4 / 21, "Q": 3 / 21, "P": 6 / 21}
        solved = stochastic.stationary_solve(chain)
        for state, value in expected.items():
            assert closed[state] == pytest.approx(value, abs=1e-12)
            assert closed[state] == pytest.approx(solved[state], abs=1e-10)
        assert stochastic.check_detailed_balance(chain, closed, tolerance=1e-12)
        for seed in range(50):
            rng = random.Random(seed + 900)
            graph = gsystem.random_connected_cube_graph(rng, max_ground=5, max_members=32)
            system = gsystem.build_gsystem(graph).system
            weights = [rng.random() + 0.05 for _ in system.token_names]
            total = sum(weights)
            theta = {t: w / total for t, w in zip(system.token_names, weights)}
            random_chain = stochastic.build_chain(system, None, theta)
            closed = stochastic.stationary_closed_form(random_chain)
            solved = stochastic.stationary_solve(random_chain)
            for state in random_chain.states:
                assert closed[state] == pytest.approx(solved[state], abs=1e-10)


def test_criterion_07_simulation_convergence():
    with Criterion(7, "one million steps land within 0.005 of pi", 30.0):
        chain = stochastic.build_chain(fixtures.cub4(), None, THETA)
        pi = stochastic.stationary_closed_form(chain)
        trajectory = stochastic.simulate(chain, seed=20260810, steps=1_000_000)
        frequencies = stochastic.empirical_frequencies(trajectory)
        # 0.005 is about three sigma for these frequencies at 1e6 steps
        # including the chain's autocorrelation.
        for state in chain.states:
            assert frequencies[state] == pytest.approx(pi[state], abs=0.005)
        again = stochastic.simulate(chain, seed=20260810, steps=1_000_000)
        assert trajectory.states == again.states


def _fixture_chains():
    yield stochastic.build_chain(fixtures.cub4(), None, THETA)
    yield stochastic.build_chain(fixtures.single_edge_medium(), None, {"f": 0.5, "f~": 0.5})
    four_cycle = gsystem.family_gsystem(
        gsystem.make_family(["x", "y"], [[], ["x"], ["y"], ["x", "y"]])
    ).system
    yield stochastic.build_chain(
        four_cycle, None, {t: 1 / 4 for t in four_cycle.token_names}
    )
    grid = families.lattice_window(2, 2).system
    yield stochastic.build_chain(grid, None, {t: 1 / 8 for t in grid.token_names})


def test_criterion_08_regularity():
    with Criterion(8, "transition powers are positive at |S|-1", 5.0):
        import numpy as np

        for chain in _fixture_chains():
            n = len(chain.states)
            assert stochastic.check_regularity(chain)
            assert np.all(stochastic.n_step_matrix(chain, n - 1).array > 0)
            assert np.all(stochastic.n_step_matrix(chain, n).array > 0)


def test_criterion_09_families():
    with Criterion(9, "example families behave as stated", 120.0):
        for n in (3, 4):
            family = families.comparability_family(n)
            assert families.is_downgradable_family(family)
            assert axioms.is_cubical(families.family_system(family).system)

        # independent brute-force filter for the order counts
        for n, expected in ((3, 19), (4, 219)):
            assert len(families.enumerate_partial_orders(n)) == expected
            elements = families.vertex_names(n)
            pairs = [(a, b) for a in elements for b in elements if a != b]
            brute = 0
            for mask in range(2 ** len(pairs)):
                relation = {p for i, p in enumerate(pairs) if mask >> i & 1}
                if all(
                    (a, d) in relation
                    for a, b in relation
                    for c, d in relation
                    if b == c
                ):
                    brute += 1
            assert brute == expected

        smallest_n, witness = families.smallest_comparability_gap(max_n=6)
        if witness is None:
            print(f"  no wellgradedness gap among comparability families with n <= {smallest_n}")
        else:
            print(f"  wellgradedness gap witness found at n = {smallest_n}")
            members = set(
                families.comparability_family(smallest_n, allow_large=True).members
            )
            a, b = witness
            assert a in members and b in members and len(a ^ b) == 2
            assert all(a ^ {x} not in members for x in a ^ b)
        assert witness is not None and smallest_n == 6

        ac = families.ac_order_family(3)
        assert families.is_downgradable_family(ac)
        assert families.is_upgradable_family(ac)
        assert axioms.check_c2(families.family_system(ac).system).holds

        assert axioms.is_cubical(families.lattice_window(2, 2).system)


def _bounded_c3_verdict(system, bound):
    for state in system.states:
        for message in axioms.enumerate_messages(system, state, bound):
            if not message:
                continue
            closed = core.is_closed(system, state, message)
            vacuous = core.is_vacuous(system, message)
            if closed and not vacuous:
                return False
            if vacuous and not closed:
                return False
    return True


def _bounded_mb_verdict(system, bound):
    for state in system.states:
        for message in axioms.enumerate_messages(system, state, bound):
            if message and core.is_closed(system, state, message) and not core.is_vacuous(
                system, message
            ):
                return False
    return True


def _bounded_c4_verdict(system, bound):
    for state in system.states:
        for message in axioms.enumerate_messages(system, state, bound):
            if axioms.message_violates_alternation(system, message):
                return False
    return True


def test_criterion_10_exact_vs_bounded_agreement():
    with Criterion(10, "exact checkers agree with enumeration at L=10", 120.0):
        for name, system in fixtures.fixture_systems().items():
            assert len(system.states) <= 8 and len(system.token_names) <= 8
            assert axioms.check_c3(system).holds == _bounded_c3_verdict(system, 10), name
            assert axioms.check_mb(system).holds == _bounded_mb_verdict(system, 10), name
            assert axioms.check_c4(system).holds == _bounded_c4_verdict(system, 10), name
