"""Example set families carried by cube subgraphs.

Partial orders on a small vertex set, the comparability graphs they
induce, almost-connected orders, and finite windows of integer lattices
all yield downgradable or upgradable families whose induced cube
subgraphs are connected, hence token systems satisfying C1 to C4.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceededError
from .gsystem import (
    CubeGraph,
    GroundSet,
    GSystem,
    SetFamily,
    build_gsystem,
    induced_cube_graph,
)

ENUMERATION_LIMIT = 4
ENUMERATION_HARD_LIMIT = 5
COMPARABILITY_LIMIT = 6


@dataclass(frozen=True)
class Relation:
    """A set of ordered pairs over a finite ground set."""

    ground: tuple[str, ...]
    pairs: frozenset[tuple[str, str]]


def vertex_names(n: int) -> tuple[str, ...]:
    if not 1 <= n <= len(string.ascii_lowercase):
        raise ValueError("vertex count out of range")
    return tuple(string.ascii_lowercase[:n])


def ordered_pair_name(a: str, b: str) -> str:
    return f"{a}{b}"


def edge_name(a: str, b: str) -> str:
    x, y = sorted((a, b))
    return f"{x}{y}"


def is_strict_partial_order(relation: Relation) -> bool:
    """Irreflexive and transitive (hence asymmetric)."""
    pairs = relation.pairs
    if any(a == b for a, b in pairs):
        return False
    return all(
        (a, d) in pairs for a, b in pairs for c, d in pairs if b == c
    )


def is_ac_order(relation: Relation) -> bool:
    """Asymmetric, and every two-chain x < y < z forces, for every w,
    either x < w or w < z."""
    pairs = relation.pairs
    if any((b, a) in pairs for a, b in pairs):
        return False
    for x, y in pairs:
        for y2, z in pairs:
            if y2 != y:
                continue
            for w in relation.ground:
                if (x, w) not in pairs and (w, z) not in pairs:
                    return False
    return True


def enumerate_partial_orders(n: int, *, allow_large: bool = False) -> list[Relation]:
    """All strict partial orders on ``n`` named elements.

    Built incrementally: a strict order on k+1 elements is a strict order
    on the first k plus a down-closed predecessor set D and an up-closed
    successor set U for the new element, disjoint and with D x U already
    inside the order.  The default budget stops at n = 4; n = 5 sits
    behind ``allow_large``.
    """
    limit = ENUMERATION_HARD_LIMIT if allow_large else ENUMERATION_LIMIT
    if n > limit:
        raise BudgetExceededError(
            f"partial-order enumeration capped at n = {limit}"
        )
    return _enumerate_orders(n)


def _enumerate_orders(n: int) -> list[Relation]:
    elements = vertex_names(n)
    orders: list[frozenset[tuple[str, str]]] = [frozenset()]
    for k, new in enumerate(elements):
        prev = elements[:k]
        subsets = _all_subsets(prev)
        extended = []
        for order in orders:
            preds = {e: {a for a, b in order if b == e} for e in prev}
            succs = {e: {b for a, b in order if a == e} for e in prev}
            down_sets = [d for d in subsets if all(preds[a] <= d for a in d)]
            up_sets = [u for u in subsets if all(succs[a] <= u for a in u)]
            for d in down_sets:
                for u in up_sets:
                    if d & u:
                        continue
                    if any((x, y) not in order for x in d for y in u):
                        continue
                    new_pairs = {(x, new) for x in d} | {(new, y) for y in u}
                    extended.append(order | new_pairs)
        orders = extended
    return [Relation(elements, order) for order in sorted(orders, key=sorted)]


def _all_subsets(items: tuple[str, ...]) -> list[frozenset[str]]:
    out = [frozenset()]
    for x in items:
        out += [s | {x} for s in out]
    return out


def relation_member(relation: Relation) -> GroundSet:
    return frozenset(ordered_pair_name(a, b) for a, b in relation.pairs)


def partial_order_family(n: int, *, allow_large: bool = False) -> SetFamily:
    """All strict partial orders on ``n`` elements as sets of ordered-pair
    names."""
    elements = vertex_names(n)
    ground = tuple(
        ordered_pair_name(a, b) for a in elements for b in elements if a != b
    )
    members = tuple(
        relation_member(r) for r in enumerate_partial_orders(n, allow_large=allow_large)
    )
    return SetFamily(ground, members)


def ac_order_family(n: int, *, allow_large: bool = False) -> SetFamily:
    """All almost-connected orders on ``n`` elements as ordered-pair sets.

    Two-chains of an ac-order force their transitive closure, so every
    ac-order is a strict partial order and filtering the order enumeration
    is exhaustive.
    """
    elements = vertex_names(n)
    ground = tuple(
        ordered_pair_name(a, b) for a in elements for b in elements if a != b
    )
    members = tuple(
        relation_member(r)
        for r in enumerate_partial_orders(n, allow_large=allow_large)
        if is_ac_order(r)
    )
    return SetFamily(ground, members)


def comparability_edges(relation: Relation) -> GroundSet:
    return frozenset(edge_name(a, b) for a, b in relation.pairs)


def comparability_family(n: int, *, allow_large: bool = False) -> SetFamily:
    """Edge sets of all comparability graphs on ``n`` vertices: images of
    the strict partial orders under forgetting orientation, deduplicated.
    Contains the empty graph (image of the empty order).

    Deduplication keeps the member count far below the order count, so
    this family gets a larger budget than the raw enumerations: n = 6
    behind ``allow_large``.
    """
    limit = COMPARABILITY_LIMIT if allow_large else ENUMERATION_LIMIT
    if n > limit:
        raise BudgetExceededError(f"comparability family capped at n = {limit}")
    elements = vertex_names(n)
    ground = tuple(edge_name(a, b) for a, b in combinations(elements, 2))
    members = sorted(
        {comparability_edges(r) for r in _enumerate_orders(n)},
        key=lambda m: (len(m), tuple(sorted(m))),
    )
    return SetFamily(ground, tuple(members))


def is_downgradable_set(family: SetFamily, member: GroundSet) -> bool:
    members = set(family.members)
    return any(member - {x} in members for x in member)


def is_upgradable_set(family: SetFamily, member: GroundSet) -> bool:
    members = set(family.members)
    return any(member | {x} in members for x in family.ground if x not in member)


def is_downgradable_family(family: SetFamily) -> bool:
    """Every inclusion-nonminimal member loses some element inside the
    family."""
    members = set(family.members)
    for m in family.members:
        minimal = not any(other < m for other in members)
        if not minimal and not is_downgradable_set(family, m):
            return False
    return True


def is_upgradable_family(family: SetFamily) -> bool:
    """Every inclusion-nonmaximal member gains some element inside the
    family."""
    members = set(family.members)
    for m in family.members:
        maximal = not any(m < other for other in members)
        if not maximal and not is_upgradable_set(family, m):
            return False
    return True


def is_well_graded(family: SetFamily) -> bool:
    """Between any two members at distance d lies a member one step from
    the first and d - 1 from the second."""
    members = set(family.members)
    for a in family.members:
        for b in family.members:
            if a == b:
                continue
            if not any(a ^ {x} in members for x in a ^ b):
                return False
    return True


def wellgradedness_gap_witness(family: SetFamily) -> tuple[GroundSet, GroundSet] | None:
    """A member pair at symmetric-difference distance two with no member
    at distance one from both, or None.

    The only candidate midpoints of such a pair are its two one-element
    toggles, so it suffices to scan each member against its double
    toggles instead of all member pairs.
    """
    members = set(family.members)
    index = {m: i for i, m in enumerate(family.members)}
    ground = sorted(family.ground)
    for a in family.members:
        for x, y in combinations(ground, 2):
            b = a ^ {x, y}
            if b not in members or index[b] <= index[a]:
                continue
            if a ^ {x} not in members and a ^ {y} not in members:
                return (a, b)
    return None


def smallest_comparability_gap(
    max_n: int = COMPARABILITY_LIMIT,
) -> tuple[int, tuple[GroundSet, GroundSet] | None]:
    """Search the comparability families for the smallest vertex count
    with a wellgradedness gap witness.

    Returns (n, witness) for the first hit, or (max_n, None) when the
    whole searched range is gap free.
    """
    for n in range(2, max_n + 1):
        witness = wellgradedness_gap_witness(comparability_family(n, allow_large=True))
        if witness is not None:
            return n, witness
    return max_n, None


def lattice_window(dims: int, extent: int) -> GSystem:
    """The grid graph on {0..extent}^dims as a G-system.

    Each coordinate is encoded in unary: vertex v maps to the set of
    elements (axis, level) with level at most v's coordinate on that
    axis.  The encoding turns grid adjacency into cube adjacency exactly,
    so the induced subgraph is the grid itself.
    """
    if dims < 1 or extent < 1:
        raise ValueError("dims and extent must be at least 1")
    ground = tuple(
        f"d{axis}_{level}" for axis in range(1, dims + 1) for level in range(1, extent + 1)
    )

    def encode(vertex: tuple[int, ...]) -> GroundSet:
        return frozenset(
            f"d{axis + 1}_{level}"
            for axis, coordinate in enumerate(vertex)
            for level in range(1, coordinate + 1)
        )

    vertices: list[tuple[int, ...]] = [()]
    for _ in range(dims):
        vertices = [v + (c,) for v in vertices for c in range(extent + 1)]
    members = tuple(encode(v) for v in vertices)
    return build_gsystem(induced_cube_graph(SetFamily(ground, members)))


def family_system(family: SetFamily) -> GSystem:
    """The G-system of the induced cube subgraph on the family."""
    return build_gsystem(induced_cube_graph(family))
