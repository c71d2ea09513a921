"""Small reference systems used throughout the tests and the docs.

The four ``witness_*`` systems demonstrate the independence of the axioms
C1 to C4: each fails exactly the named axiom and satisfies the other
three.  A system failing only C1 necessarily does it through a
self-reverse token; with a token that has no reverse at all, any return
path forced by C2 closes a non-vacuous message and C3 falls with it.
"""

from __future__ import annotations

from .core import TokenSystem, build_system


def cub4() -> TokenSystem:
    """Four states on a path S-T-Q-P; a cubical system, not a medium."""
    return build_system(
        ["S", "T", "P", "Q"],
        [
            ("tau", {"S": "T", "P": "Q"}),
            ("tau~", {"T": "S", "Q": "P"}),
            ("mu", {"T": "Q"}),
            ("mu~", {"Q": "T"}),
        ],
    )


def one_way_pair() -> TokenSystem:
    """Two states, one token S -> T with no way back and no reverse."""
    return build_system(["S", "T"], [("tau", {"S": "T"})])


def two_state_swap() -> TokenSystem:
    """A single self-reverse token swapping two states; fails exactly C1."""
    return build_system(["A", "B"], [("sigma", {"A": "B", "B": "A"})])


def single_edge_medium() -> TokenSystem:
    """Two states joined by a mutual-reverse token pair; a medium."""
    return build_system(["A", "B"], [("f", {"A": "B"}), ("f~", {"B": "A"})])


def triangle() -> TokenSystem:
    """Three states with mutually reversing token pairs around a cycle.

    The cycle a b c is closed but not vacuous, so C3 fails; C4 fails too,
    because a recurs along a b c a without its reverse between.
    """
    return build_system(
        ["A", "B", "C"],
        [
            ("a", {"A": "B"}),
            ("a~", {"B": "A"}),
            ("b", {"B": "C"}),
            ("b~", {"C": "B"}),
            ("c", {"C": "A"}),
            ("c~", {"A": "C"}),
        ],
    )


def double_cub4() -> TokenSystem:
    """Two disjoint copies of cub4; fails C2 (and nothing else of C1-C4)."""
    states = ["S1", "T1", "P1", "Q1", "S2", "T2", "P2", "Q2"]
    tokens = []
    for i in ("1", "2"):
        tokens.extend(
            [
                (f"tau{i}", {f"S{i}": f"T{i}", f"P{i}": f"Q{i}"}),
                (f"tau{i}~", {f"T{i}": f"S{i}", f"Q{i}": f"P{i}"}),
                (f"mu{i}", {f"T{i}": f"Q{i}"}),
                (f"mu{i}~", {f"Q{i}": f"T{i}"}),
            ]
        )
    return build_system(states, tokens)


def token_twice_chain() -> TokenSystem:
    """One token effective twice in a row (A -> B -> C); fails C4 with
    witness tau tau, while C1-C3 hold."""
    return build_system(
        ["A", "B", "C"],
        [("f", {"A": "B", "B": "C"}), ("f~", {"B": "A", "C": "B"})],
    )


def repeated_class_path() -> TokenSystem:
    """Five states on a path whose edge classes repeat as a, b, a, b.

    The walk across the whole path applies a b a~ b~, a vacuous stepwise
    effective message joining distinct endpoints, so C3 fails; C1, C2 and
    C4 all hold.
    """
    return build_system(
        ["A", "B", "C", "D", "E"],
        [
            ("a", {"A": "B", "D": "C"}),
            ("a~", {"B": "A", "C": "D"}),
            ("b", {"B": "C", "E": "D"}),
            ("b~", {"C": "B", "D": "E"}),
        ],
    )


def witness_c1() -> TokenSystem:
    return two_state_swap()


def witness_c2() -> TokenSystem:
    """Two disjoint single-edge media."""
    return build_system(
        ["A", "B", "C", "D"],
        [
            ("f", {"A": "B"}),
            ("f~", {"B": "A"}),
            ("g", {"C": "D"}),
            ("g~", {"D": "C"}),
        ],
    )


def witness_c3() -> TokenSystem:
    return repeated_class_path()


def witness_c4() -> TokenSystem:
    return token_twice_chain()


def independence_witnesses() -> dict[str, TokenSystem]:
    return {
        "C1": witness_c1(),
        "C2": witness_c2(),
        "C3": witness_c3(),
        "C4": witness_c4(),
    }


def fixture_systems() -> dict[str, TokenSystem]:
    """All named fixture systems, every one with at most 8 states and
    8 tokens."""
    return {
        "cub4": cub4(),
        "one_way_pair": one_way_pair(),
        "two_state_swap": two_state_swap(),
        "single_edge_medium": single_edge_medium(),
        "triangle": triangle(),
        "double_cub4": double_cub4(),
        "token_twice_chain": token_twice_chain(),
        "repeated_class_path": repeated_class_path(),
    }


CUB4_DOCUMENT = """\
states S T P Q
token tau: S>T, P>Q
token tau~: T>S, Q>P
token mu: T>Q
token mu~: Q>T
theta tau=0.1 tau~=0.2 mu=0.3 mu~=0.4
xi uniform
"""
