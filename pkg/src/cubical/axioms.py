"""Deciding the cubical-system axioms C1 to C4 and the medium axioms Ma, Mb.

Every check returns an :class:`AxiomVerdict`; a failed verdict carries a
witness that replays to a genuine violation through the core predicates.

C1, C2, C4 and Ma are decided exactly on any finite system.  C3 and Mb
are decided exactly whenever every token has a reverse (then every
effective transition has an anti-parallel reverse transition and the
cycle-space argument below applies); otherwise they fall back to bounded
enumeration of stepwise-effective messages up to a configurable length,
which is sound but incomplete, and the verdict is flagged accordingly.

Exact C3 works on the undirected transition multigraph (one edge per
anti-parallel pair of effective transitions).  A closed stepwise-effective
message is a closed walk, whose per-class net signed counts are an
integer combination of the net counts of the fundamental cycles of a
spanning forest; conversely every fundamental cycle is itself a closed
message.  Hence closed-implies-vacuous holds iff every fundamental cycle
has zero net count in every mutual-reverse class (and even count in every
self-reverse class).  Given that, net counts accumulated along the forest
give a per-state vector, and vacuous-implies-closed holds iff those
vectors are pairwise distinct within each component: a collision yields a
vacuous stepwise-effective message between distinct states, namely the
tree path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from . import core
from .core import Message, TokenSystem
from .errors import BudgetExceededError, NotCubicalError

DEFAULT_NODE_BUDGET = 5_000_000

MEDIUM = "medium"
CUBICAL_NOT_MEDIUM = "cubical_not_medium"
NOT_CUBICAL = "not_cubical"


@dataclass(frozen=True)
class TokenWitness:
    token: str

    def __str__(self) -> str:
        return f"token {self.token}"


@dataclass(frozen=True)
class PairWitness:
    source: str
    target: str

    def __str__(self) -> str:
        return f"({self.source}, {self.target})"


@dataclass(frozen=True)
class MessageWitness:
    state: str
    message: Message

    def __str__(self) -> str:
        body = " ".join(self.message)
        return f"state {self.state}, message [{body}]"


Witness = TokenWitness | PairWitness | MessageWitness


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of one axiom check.

    ``method`` is "exact" or "bounded"; a bounded verdict records the
    message length ``bound`` it enumerated up to and is sound only up to
    that length.
    """

    axiom: str
    holds: bool
    witness: Witness | None = None
    method: str = "exact"
    bound: int | None = None

    def describe(self) -> str:
        tag = self.method if self.bound is None else f"{self.method}({self.bound})"
        head = f"{self.axiom} {'holds' if self.holds else 'fails'} ({tag})"
        if self.witness is None:
            return head
        return f"{head}: {self.witness}"


@dataclass(frozen=True)
class Classification:
    kind: str
    verdicts: Mapping[str, AxiomVerdict]

    def describe(self) -> str:
        lines = [self.verdicts[a].describe() for a in ("C1", "C2", "C3", "C4", "Ma", "Mb")]
        lines.append(f"classification: {self.kind}")
        return "\n".join(lines)


def check_c1(system: TokenSystem) -> AxiomVerdict:
    """Every token has a reverse distinct from itself."""
    for t in system.token_names:
        r = system.reverses[t]
        if r is None or r == t:
            return AxiomVerdict("C1", False, TokenWitness(t))
    return AxiomVerdict("C1", True)


def check_c2(system: TokenSystem) -> AxiomVerdict:
    """Every ordered pair of distinct states is joined by a stepwise
    effective message, i.e. the effective-transition digraph is strongly
    connected."""
    for s in system.states:
        reached = _reachable(system, s)
        for v in system.states:
            if v not in reached:
                return AxiomVerdict("C2", False, PairWitness(s, v))
    return AxiomVerdict("C2", True)


def _reachable(system: TokenSystem, start: str) -> set[str]:
    seen = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for _, v in system.successors[s]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


# --- exact C3 / Mb machinery -------------------------------------------------


@dataclass(frozen=True)
class _Edge:
    """One undirected edge of the transition multigraph.

    Traversing u -> v applies the class representative (for a
    mutual-reverse pair) or the self-reverse token itself; v -> u applies
    the other orientation.
    """

    u: str
    v: str
    rep: str
    self_reverse: bool

    def token(self, system: TokenSystem, source: str) -> str:
        if self.self_reverse:
            return self.rep
        if source == self.u:
            return self.rep
        r = system.reverses[self.rep]
        assert r is not None
        return r


def _transition_multigraph(system: TokenSystem) -> list[_Edge]:
    edges: list[_Edge] = []
    idx = system.state_index
    for t in system.token_names:
        r = system.reverses[t]
        if r is None:
            continue
        if r == t:
            for s in system.states:
                v = system.tokens[t][s]
                if v != s and idx[s] < idx[v]:
                    edges.append(_Edge(s, v, t, True))
        elif t == min(t, r):
            for s in system.states:
                v = system.tokens[t][s]
                if v != s:
                    edges.append(_Edge(s, v, t, False))
    return edges


class _Forest:
    """BFS spanning forest of the transition multigraph with per-state
    accumulated net-count vectors."""

    def __init__(self, system: TokenSystem, edges: list[_Edge]):
        self.system = system
        self.edges = edges
        incident: dict[str, list[tuple[int, str]]] = {s: [] for s in system.states}
        for i, e in enumerate(edges):
            incident[e.u].append((i, e.v))
            incident[e.v].append((i, e.u))

        self.parent: dict[str, tuple[str, int] | None] = {}
        self.component: dict[str, int] = {}
        self.tree_edges: set[int] = set()
        self.net: dict[str, dict[str, int]] = {}
        comp = -1
        for root in system.states:
            if root in self.component:
                continue
            comp += 1
            self.parent[root] = None
            self.component[root] = comp
            self.net[root] = {}
            queue = deque([root])
            while queue:
                s = queue.popleft()
                for i, other in incident[s]:
                    if other in self.component:
                        continue
                    self.component[other] = comp
                    self.parent[other] = (s, i)
                    self.tree_edges.add(i)
                    vec = dict(self.net[s])
                    self._accumulate(vec, edges[i], s)
                    self.net[other] = vec
                    queue.append(other)

    def _accumulate(self, vec: dict[str, int], edge: _Edge, source: str) -> None:
        if edge.self_reverse:
            vec[edge.rep] = (vec.get(edge.rep, 0) + 1) % 2
        else:
            vec[edge.rep] = vec.get(edge.rep, 0) + (1 if source == edge.u else -1)
        if vec[edge.rep] == 0:
            del vec[edge.rep]

    def frozen_net(self, state: str) -> tuple[tuple[str, int], ...]:
        return tuple(sorted(self.net[state].items()))

    def tree_path_message(self, start: str, end: str) -> Message:
        """Tokens of the unique forest path from start to end."""
        up_start = self._ancestry(start)
        up_end = self._ancestry(end)
        start_states = [s for s, _ in up_start]
        end_index = {s: k for k, (s, _) in enumerate(up_end)}
        meet = next(k for k, s in enumerate(start_states) if s in end_index)
        tokens: list[str] = []
        for k in range(meet):
            s, i = up_start[k]
            tokens.append(self.edges[i].token(self.system, s))
        down = up_end[: end_index[start_states[meet]]]
        for s, i in reversed(down):
            parent = self.parent[s]
            assert parent is not None
            tokens.append(self.edges[i].token(self.system, parent[0]))
        return tuple(tokens)

    def _ancestry(self, state: str) -> list[tuple[str, int]]:
        """(state, parent-edge) pairs from ``state`` up to its root; the
        root appears with a sentinel edge index."""
        out = []
        s = state
        while True:
            p = self.parent[s]
            if p is None:
                out.append((s, -1))
                return out
            out.append((s, p[1]))
            s = p[0]


def _cycle_space_analysis(
    system: TokenSystem,
) -> tuple[MessageWitness | None, MessageWitness | None]:
    """Returns (closed-non-vacuous witness, vacuous-non-closed witness).

    Callers must ensure every token has a reverse.
    """
    edges = _transition_multigraph(system)
    forest = _Forest(system, edges)

    for i, e in enumerate(edges):
        if i in forest.tree_edges:
            continue
        # Net count of the fundamental cycle: edge u->v, then tree path v->u.
        vec = dict(forest.net[e.u])
        forest._accumulate(vec, e, e.u)
        for rep, count in forest.net[e.v].items():
            if system.reverses[rep] == rep:
                merged = (vec.get(rep, 0) + count) % 2
            else:
                merged = vec.get(rep, 0) - count
            if merged:
                vec[rep] = merged
            else:
                vec.pop(rep, None)
        if vec:
            message = (e.token(system, e.u),) + forest.tree_path_message(e.v, e.u)
            return MessageWitness(e.u, message), None

    seen: dict[tuple[int, tuple[tuple[str, int], ...]], str] = {}
    for s in system.states:
        key = (forest.component[s], forest.frozen_net(s))
        if key in seen:
            other = seen[key]
            return None, MessageWitness(other, forest.tree_path_message(other, s))
        seen[key] = s
    return None, None


def _all_reverses_exist(system: TokenSystem) -> bool:
    return all(system.reverses[t] is not None for t in system.token_names)


def check_c3(system: TokenSystem, max_len: int | None = None) -> AxiomVerdict:
    """A stepwise-effective message is closed iff it is vacuous.

    Exact via the cycle-space method when every token has a reverse;
    otherwise bounded enumeration up to ``max_len`` (default twice the
    number of states).
    """
    if _all_reverses_exist(system):
        cycle, collision = _cycle_space_analysis(system)
        if cycle is not None:
            return AxiomVerdict("C3", False, cycle)
        if collision is not None:
            return AxiomVerdict("C3", False, collision)
        return AxiomVerdict("C3", True)
    bound = max_len if max_len is not None else 2 * len(system.states)
    witness = _bounded_c3_witness(system, bound, check_both_directions=True)
    return AxiomVerdict("C3", witness is None, witness, method="bounded", bound=bound)


def check_mb(system: TokenSystem, max_len: int | None = None) -> AxiomVerdict:
    """Every closed message is vacuous (one direction of C3)."""
    if _all_reverses_exist(system):
        cycle, _ = _cycle_space_analysis(system)
        return AxiomVerdict("Mb", cycle is None, cycle)
    bound = max_len if max_len is not None else 2 * len(system.states)
    witness = _bounded_c3_witness(system, bound, check_both_directions=False)
    return AxiomVerdict("Mb", witness is None, witness, method="bounded", bound=bound)


def _bounded_c3_witness(
    system: TokenSystem, bound: int, check_both_directions: bool
) -> MessageWitness | None:
    for s in system.states:
        for m in enumerate_messages(system, s, bound):
            if not m:
                continue
            end = core.apply(system, s, m)
            vacuous = core.is_vacuous(system, m)
            if end == s and not vacuous:
                return MessageWitness(s, m)
            if check_both_directions and vacuous and end != s:
                return MessageWitness(s, m)
    return None


def message_violates_alternation(system: TokenSystem, message: Sequence[str]) -> bool:
    """True when some token recurs without its reverse strictly between.

    A self-reverse token is exempt: every occurrence is simultaneously an
    occurrence of its reverse, so the alternation requirement degenerates.
    A token without a reverse can never satisfy the requirement, so any
    recurrence of it violates.
    """
    for t in set(message):
        r = system.reverses[t]
        if r == t:
            continue
        positions = [i for i, x in enumerate(message) if x == t]
        for a, b in zip(positions, positions[1:]):
            if r is None or not any(message[k] == r for k in range(a + 1, b)):
                return True
    return False


def check_c4(system: TokenSystem) -> AxiomVerdict:
    """Occurrences of a token and its reverse alternate in every
    stepwise-effective message.

    Exact: for each constrained token t, no state where t is effective may
    be reachable from an image of t through effective transitions avoiding
    t and its reverse.  A found path reconstructs the witness t..path..t.
    """
    for t in system.token_names:
        r = system.reverses[t]
        if r == t:
            continue
        excluded = {t} if r is None else {t, r}
        domain = [s for s in system.states if system.tokens[t][s] != s]
        targets = set(domain)
        parent: dict[str, tuple[str, str] | None] = {}
        origin: dict[str, str] = {}
        queue: deque[str] = deque()
        hit: str | None = None
        for s in domain:
            image = system.tokens[t][s]
            if image not in parent:
                parent[image] = None
                origin[image] = s
                queue.append(image)
        for node in list(queue):
            if node in targets:
                hit = node
                break
        while hit is None and queue:
            node = queue.popleft()
            for tok, nxt in system.successors[node]:
                if tok in excluded or nxt in parent:
                    continue
                parent[nxt] = (node, tok)
                origin[nxt] = origin[node]
                if nxt in targets:
                    hit = nxt
                    break
                queue.append(nxt)
        if hit is not None:
            path: list[str] = []
            node = hit
            while parent[node] is not None:
                prev, tok = parent[node]  # type: ignore[misc]
                path.append(tok)
                node = prev
            message = (t, *reversed(path), t)
            return AxiomVerdict("C4", False, MessageWitness(origin[hit], message))
    return AxiomVerdict("C4", True)


def check_ma(system: TokenSystem) -> AxiomVerdict:
    """Every ordered pair of distinct states is joined by a concise message.

    Search over (state, set of used reverse-pair classes): a concise
    message uses each class at most once, so its length is bounded by the
    number of classes.  Self-reverse tokens cannot occur in a concise
    message at all.
    """
    reps = sorted({system.class_rep[t] for t in system.token_names})
    bit = {rep: 1 << i for i, rep in enumerate(reps)}
    for s in system.states:
        reached = _concise_reachable(system, s, bit)
        for v in system.states:
            if v != s and v not in reached:
                return AxiomVerdict("Ma", False, PairWitness(s, v))
    return AxiomVerdict("Ma", True)


def _concise_reachable(system: TokenSystem, start: str, bit: dict[str, int]) -> set[str]:
    seen = {(start, 0)}
    reached = {start}
    queue = deque([(start, 0)])
    all_states = set(system.states)
    while queue and reached != all_states:
        state, mask = queue.popleft()
        for tok, nxt in system.successors[state]:
            if system.reverses[tok] == tok:
                continue
            b = bit[system.class_rep[tok]]
            if mask & b:
                continue
            node = (nxt, mask | b)
            if node in seen:
                continue
            seen.add(node)
            reached.add(nxt)
            queue.append(node)
    return reached


def classify(system: TokenSystem, max_len: int | None = None) -> Classification:
    """Run all six checks and classify the system."""
    verdicts = {
        "C1": check_c1(system),
        "C2": check_c2(system),
        "C3": check_c3(system, max_len),
        "C4": check_c4(system),
        "Ma": check_ma(system),
        "Mb": check_mb(system, max_len),
    }
    if not all(verdicts[a].holds for a in ("C1", "C2", "C3", "C4")):
        kind = NOT_CUBICAL
    elif verdicts["Ma"].holds and verdicts["Mb"].holds:
        kind = MEDIUM
    else:
        kind = CUBICAL_NOT_MEDIUM
    return Classification(kind, verdicts)


def is_cubical(system: TokenSystem) -> bool:
    return (
        check_c1(system).holds
        and check_c2(system).holds
        and check_c3(system).holds
        and check_c4(system).holds
    )


def require_cubical(system: TokenSystem) -> None:
    """Raise :class:`NotCubicalError` naming the first failing axiom."""
    for check in (check_c1, check_c2, check_c3, check_c4):
        verdict = check(system)
        if not verdict.holds:
            raise NotCubicalError(f"axiom {verdict.axiom} fails: {verdict.witness}")


def enumerate_messages(
    system: TokenSystem,
    state: str,
    max_len: int,
    *,
    closed: bool = False,
    concise: bool = False,
    producing: str | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Iterator[Message]:
    """All stepwise-effective messages from ``state`` up to ``max_len``,
    in breadth-first order, optionally filtered.

    ``closed`` keeps nonempty messages returning to the start state,
    ``concise`` keeps concise messages (pruning the search), and
    ``producing`` keeps messages ending at the given state.  Raises
    :class:`BudgetExceededError` after expanding ``node_budget`` nodes.
    """
    system.require_state(state)
    if producing is not None:
        system.require_state(producing)

    reps = sorted({system.class_rep[t] for t in system.token_names})
    bit = {rep: 1 << i for i, rep in enumerate(reps)}

    def passes(message: Message, end: str) -> bool:
        if closed and (not message or end != state):
            return False
        if producing is not None and end != producing:
            return False
        return True

    expanded = 0
    queue: deque[tuple[str, Message, int]] = deque([(state, (), 0)])
    if passes((), state):
        yield ()
    while queue:
        current, message, mask = queue.popleft()
        if len(message) == max_len:
            continue
        expanded += 1
        if expanded > node_budget:
            raise BudgetExceededError(f"message enumeration exceeded {node_budget} nodes")
        for tok, nxt in system.successors[current]:
            if concise:
                if system.reverses[tok] == tok:
                    continue
                b = bit[system.class_rep[tok]]
                if mask & b:
                    continue
                new_mask = mask | b
            else:
                new_mask = 0
            extended = message + (tok,)
            if passes(extended, nxt):
                yield extended
            queue.append((nxt, extended, new_mask))
