"""Embedding a verified cubical system into a cube as a G-system.

Each edge of the system graph carries a label, the mutual-reverse class
of the unique token acting across it.  Walking a breadth-first tree from
a base state and toggling the traversed edge label at every step assigns
each state the set of labels occurring an odd number of times on any walk
from the base; the closed-iff-vacuous axiom makes that set independent of
the walk.  The resulting state map alpha is injective, sends adjacent
states to cube edges, and together with the orientation map beta is an
isomorphism onto the G-system of its image.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Mapping

from . import core
from .axioms import require_cubical
from .core import TokenSystem
from .errors import Error, InternalInconsistencyError, NotCubicalError
from .gsystem import (
    CubeGraph,
    GroundSet,
    GSystem,
    SetFamily,
    add_token_name,
    build_gsystem,
    member_sort_key,
    remove_token_name,
    render_set,
)


@dataclass(frozen=True)
class SystemGraph:
    """States as vertices, mutual adjacency as edges, one reverse-pair
    class label per edge."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    edge_labels: Mapping[tuple[str, str], str]


def label_name(class_rep: str) -> str:
    return f"j:{class_rep}"


def system_graph(system: TokenSystem) -> SystemGraph:
    """The labeled adjacency graph of a verified cubical system.

    On such a system adjacency is mutual and exactly one token produces
    each adjacent neighbour, so edge labels are well defined.
    """
    require_cubical(system)
    return _system_graph_unchecked(system)


def _system_graph_unchecked(system: TokenSystem) -> SystemGraph:
    idx = system.state_index
    edges = []
    labels: dict[tuple[str, str], str] = {}
    for s in system.states:
        for tok, v in system.successors[s]:
            if idx[s] > idx[v]:
                continue
            key = (s, v)
            rep = system.class_rep[tok]
            if key in labels:
                if labels[key] != rep:
                    raise InternalInconsistencyError(
                        f"two token classes act across the edge {key}"
                    )
                continue
            labels[key] = rep
            edges.append(key)
    return SystemGraph(tuple(system.states), tuple(edges), labels)


@dataclass(frozen=True)
class Embedding:
    """The per-state label sets and per-token oriented labels of a cube
    embedding, plus the induced G-system."""

    base: str
    alpha: Mapping[str, GroundSet]
    beta: Mapping[str, str]
    gsystem: GSystem = field(repr=False)

    def alpha_names(self) -> dict[str, str]:
        return {s: render_set(labels) for s, labels in self.alpha.items()}


def embed(system: TokenSystem, base: str | None = None) -> Embedding:
    """Embed a verified cubical system into the cube over its edge labels.

    ``base`` defaults to the first state in declaration order and is
    mapped to the empty set; every tree child differs from its parent by
    the traversed edge label.
    """
    require_cubical(system)
    graph = _system_graph_unchecked(system)
    if base is None:
        base = system.states[0]
    system.require_state(base)

    edge_label = dict(graph.edge_labels)
    idx = system.state_index

    def label_of(s: str, v: str) -> str:
        key = (s, v) if idx[s] <= idx[v] else (v, s)
        return label_name(edge_label[key])

    alpha: dict[str, GroundSet] = {base: frozenset()}
    queue = deque([base])
    while queue:
        s = queue.popleft()
        for tok, v in system.successors[s]:
            if v in alpha:
                continue
            alpha[v] = alpha[s] ^ {label_of(s, v)}
            queue.append(v)
    if len(alpha) != len(system.states):
        raise InternalInconsistencyError("the graph of a cubical system must be connected")

    values = set(alpha.values())
    if len(values) != len(alpha):
        raise InternalInconsistencyError("alpha collision on a verified system")

    beta: dict[str, str] = {}
    for t in system.token_names:
        for s in system.states:
            v = system.tokens[t][s]
            if v == s:
                continue
            j = label_of(s, v)
            if j in alpha[v] - alpha[s]:
                oriented = add_token_name(j)
            elif j in alpha[s] - alpha[v]:
                oriented = remove_token_name(j)
            else:
                raise InternalInconsistencyError(
                    f"edge {s}-{v} does not toggle its own label"
                )
            if beta.setdefault(t, oriented) != oriented:
                raise InternalInconsistencyError(f"token {t} has inconsistent orientation")

    members = tuple(sorted(values, key=member_sort_key))
    ground = tuple(sorted(frozenset().union(*values))) if any(values) else ()
    edges = tuple(
        frozenset((alpha[s], alpha[v])) for s, v in graph.edges
    )
    cube = CubeGraph(SetFamily(ground, members), edges)
    return Embedding(base=base, alpha=alpha, beta=beta, gsystem=build_gsystem(cube))


def verify_embedding(system: TokenSystem, embedding: Embedding) -> bool:
    """Replay every invariant of an embedding, independent of its origin.

    Checks the base maps to the empty set, alpha is injective and sends
    adjacent states to cube edges carrying the right label, beta orients
    every token consistently, and (alpha, beta) is an isomorphism onto
    the embedded G-system.
    """
    try:
        require_cubical(system)
        graph = _system_graph_unchecked(system)
        alpha = dict(embedding.alpha)
        if set(alpha) != set(system.states):
            return False
        if alpha[embedding.base] != frozenset():
            return False
        if len(set(alpha.values())) != len(alpha):
            return False
        for s, v in graph.edges:
            delta = alpha[s] ^ alpha[v]
            if delta != {label_name(graph.edge_labels[(s, v)])}:
                return False
        for t in system.token_names:
            oriented = embedding.beta.get(t)
            if oriented is None:
                return False
            for s in system.states:
                v = system.tokens[t][s]
                if v == s:
                    continue
                (j,) = alpha[s] ^ alpha[v]
                expected = add_token_name(j) if j in alpha[v] else remove_token_name(j)
                if oriented != expected:
                    return False
        alpha_names = {s: render_set(labels) for s, labels in alpha.items()}
        return core.check_isomorphism(
            system, embedding.gsystem.system, alpha_names, embedding.beta
        )
    except Error:
        return False


def is_cubical_system_graph(system: TokenSystem) -> bool:
    """Whether the system graph embeds into a cube; false with the failing
    axiom swallowed when the system is not cubical."""
    try:
        embed(system)
    except NotCubicalError:
        return False
    return True
