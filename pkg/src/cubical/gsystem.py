"""Token systems carried by connected subgraphs of a cube.

The cube on a ground set X has all finite subsets of X as vertices and an
edge wherever two subsets differ in exactly one element.  A connected
subgraph G of the cube induces a token system whose states are the member
sets and whose tokens g:x / g~:x add respectively remove the element x
across the edges of G and fix everything else.  Stepwise-effective
messages of that system correspond one to one with walks in G.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .core import Message, TokenSystem, build_system
from .errors import (
    DegenerateGroundError,
    DisconnectedError,
    DuplicateNameError,
    InternalInconsistencyError,
    NotAWalkError,
    NotCubeEdgeError,
    NotStepwiseEffectiveError,
    UnknownStateError,
)

GroundSet = frozenset[str]


def render_set(members: Iterable[str]) -> str:
    """Canonical text form of a finite set: elements sorted, brace wrapped."""
    return "{" + ",".join(sorted(members)) + "}"


def member_sort_key(member: GroundSet) -> tuple[int, tuple[str, ...]]:
    return (len(member), tuple(sorted(member)))


@dataclass(frozen=True)
class SetFamily:
    """A finite family of at least two distinct subsets of a ground set."""

    ground: tuple[str, ...]
    members: tuple[GroundSet, ...]

    def __post_init__(self) -> None:
        if len(set(self.ground)) != len(self.ground):
            raise DuplicateNameError("duplicate ground element")
        if len(set(self.members)) != len(self.members):
            raise DuplicateNameError("duplicate family member")
        if len(self.members) < 2:
            raise DegenerateGroundError("a set family needs at least two members")
        ground = set(self.ground)
        for m in self.members:
            if not m <= ground:
                raise UnknownStateError(f"member {render_set(m)} is not inside the ground set")

    @property
    def union(self) -> GroundSet:
        return frozenset().union(*self.members)

    @property
    def intersection(self) -> GroundSet:
        out = set(self.members[0])
        for m in self.members[1:]:
            out &= m
        return frozenset(out)


def make_family(ground: Iterable[str], members: Iterable[Iterable[str]]) -> SetFamily:
    return SetFamily(tuple(ground), tuple(frozenset(m) for m in members))


@dataclass(frozen=True)
class CubeGraph:
    """A connected subgraph of the cube over ``family.ground``.

    Edges are unordered member pairs at symmetric difference one, stored
    as frozensets of the two member sets.
    """

    family: SetFamily
    edges: tuple[frozenset[GroundSet], ...]

    def __post_init__(self) -> None:
        members = set(self.family.members)
        for e in self.edges:
            if len(e) != 2:
                raise NotCubeEdgeError(f"edge {sorted(map(render_set, e))} is not a pair")
            a, b = sorted(e, key=member_sort_key)
            if a not in members or b not in members:
                raise NotCubeEdgeError(
                    f"edge endpoint outside the family: {render_set(a)}|{render_set(b)}"
                )
            if len(a ^ b) != 1:
                raise NotCubeEdgeError(
                    f"{render_set(a)}|{render_set(b)} is not a cube edge"
                )
        if len(set(self.edges)) != len(self.edges):
            raise DuplicateNameError("duplicate edge")
        self._require_connected()

    def _require_connected(self) -> None:
        incident: dict[GroundSet, list[GroundSet]] = {m: [] for m in self.family.members}
        for e in self.edges:
            a, b = tuple(e)
            incident[a].append(b)
            incident[b].append(a)
        seen = {self.family.members[0]}
        stack = [self.family.members[0]]
        while stack:
            m = stack.pop()
            for other in incident[m]:
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
        if len(seen) != len(self.family.members):
            missing = next(m for m in self.family.members if m not in seen)
            raise DisconnectedError(f"member {render_set(missing)} is unreachable")

    @cached_property
    def edge_set(self) -> frozenset[frozenset[GroundSet]]:
        return frozenset(self.edges)

    def has_edge(self, a: GroundSet, b: GroundSet) -> bool:
        return frozenset((a, b)) in self.edge_set


def induced_cube_graph(family: SetFamily) -> CubeGraph:
    """The cube graph with every symmetric-difference-one member pair."""
    members = list(family.members)
    edges = []
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if len(a ^ b) == 1:
                edges.append(frozenset((a, b)))
    return CubeGraph(family, tuple(edges))


def add_token_name(element: str) -> str:
    return f"g:{element}"


def remove_token_name(element: str) -> str:
    return f"g~:{element}"


@dataclass(frozen=True)
class GSystem:
    """A cube graph together with its induced token system."""

    graph: CubeGraph
    system: TokenSystem
    member_of: Mapping[str, GroundSet] = field(repr=False)
    state_of: Mapping[GroundSet, str] = field(repr=False)


def build_gsystem(graph: CubeGraph) -> GSystem:
    """Build the add/remove token system of a connected cube subgraph.

    Tokens exist for every ground element that is in some member but not
    in all of them; connectivity guarantees each such token moves at least
    one member, so an identity token here is an internal inconsistency.
    """
    family = graph.family
    active = sorted(family.union - family.intersection)
    if not active:
        raise DegenerateGroundError("every ground element lies in all members or none")

    ordered = sorted(family.members, key=member_sort_key)
    state_of = {m: render_set(m) for m in ordered}
    member_of = {name: m for m, name in state_of.items()}
    if len(member_of) != len(state_of):
        raise InternalInconsistencyError("member name collision")

    tokens: list[tuple[str, dict[str, str]]] = []
    for x in active:
        adds: dict[str, str] = {}
        removes: dict[str, str] = {}
        for m in ordered:
            if x not in m and graph.has_edge(m, m | {x}):
                adds[state_of[m]] = state_of[m | {x}]
            if x in m and graph.has_edge(m, m - {x}):
                removes[state_of[m]] = state_of[m - {x}]
        if not adds or not removes:
            raise InternalInconsistencyError(
                f"element {x!r} induces an identity token on a connected graph"
            )
        tokens.append((add_token_name(x), adds))
        tokens.append((remove_token_name(x), removes))

    system = build_system([state_of[m] for m in ordered], tokens)
    return GSystem(graph=graph, system=system, member_of=member_of, state_of=state_of)


def family_gsystem(family: SetFamily) -> GSystem:
    """The G-system of the induced cube subgraph on the family."""
    return build_gsystem(induced_cube_graph(family))


def walk_to_message(gsystem: GSystem, walk: Sequence[GroundSet]) -> Message:
    """The stepwise-effective message whose produced sequence is the walk."""
    normalized = [frozenset(v) for v in walk]
    for v in normalized:
        if v not in gsystem.state_of:
            raise NotAWalkError(f"vertex {render_set(v)} is not a family member")
    tokens = []
    for a, b in zip(normalized, normalized[1:]):
        if not gsystem.graph.has_edge(a, b):
            raise NotAWalkError(f"{render_set(a)}|{render_set(b)} is not a graph edge")
        (x,) = a ^ b
        tokens.append(add_token_name(x) if x in b else remove_token_name(x))
    return tuple(tokens)


def message_to_walk(
    gsystem: GSystem, start: GroundSet | Iterable[str], message: Sequence[str]
) -> tuple[GroundSet, ...]:
    """The walk a stepwise-effective message produces from ``start``."""
    current = frozenset(start)
    if current not in gsystem.state_of:
        raise UnknownStateError(f"{render_set(current)} is not a family member")
    walk = [current]
    state = gsystem.state_of[current]
    for t in message:
        gsystem.system.require_token(t)
        nxt = gsystem.system.tokens[t][state]
        if nxt == state:
            raise NotStepwiseEffectiveError(
                f"token {t} is not effective at {state}"
            )
        state = nxt
        walk.append(gsystem.member_of[state])
    return tuple(walk)


def random_connected_cube_graph(
    rng: random.Random,
    max_ground: int = 6,
    max_members: int = 40,
    edge_probability: float = 0.5,
) -> CubeGraph:
    """A random connected cube subgraph for property tests.

    Members grow outward from a random seed set along random cube edges,
    which yields a spanning tree; every further cube edge between chosen
    members is then included independently with ``edge_probability``.
    """
    ground_size = rng.randint(2, max_ground)
    ground = tuple(f"x{i}" for i in range(1, ground_size + 1))
    target = rng.randint(2, min(max_members, 2**ground_size))

    seed = frozenset(x for x in ground if rng.random() < 0.5)
    members = [seed]
    member_set = {seed}
    tree_edges = set()
    while len(members) < target:
        base = members[rng.randrange(len(members))]
        x = ground[rng.randrange(ground_size)]
        new = base ^ {x}
        if new in member_set:
            continue
        members.append(new)
        member_set.add(new)
        tree_edges.add(frozenset((base, new)))

    ordered = sorted(members, key=member_sort_key)
    edges = set(tree_edges)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if len(a ^ b) == 1:
                e = frozenset((a, b))
                if e not in edges and rng.random() < edge_probability:
                    edges.add(e)
    ordered_edges = sorted(
        edges, key=lambda e: tuple(sorted(map(member_sort_key, e)))
    )
    family = SetFamily(ground, tuple(ordered))
    return CubeGraph(family, tuple(ordered_edges))
