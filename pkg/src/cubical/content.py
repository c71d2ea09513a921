"""Message and state contents.

The content of a message is the set of tokens occurring strictly more
often than their reverses.  The content of a state is the union of the
contents of all stepwise-effective messages producing it; on a verified
cubical system messages from a common source producing a common target
all share one content, so the union needs just one shortest producing
message per source state.  A bounded brute-force oracle over all
producing messages up to a length cap backs that computation in tests.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Sequence

from .axioms import require_cubical
from .core import Message, TokenSystem
from .errors import BudgetExceededError, NoReverseError

ContentSet = frozenset[str]

DEFAULT_NODE_BUDGET = 5_000_000


def occurrence_count(message: Sequence[str], token: str) -> int:
    return list(message).count(token)


def message_content(system: TokenSystem, message: Sequence[str]) -> ContentSet:
    """Tokens of the message beating their reverses' occurrence counts."""
    counts = Counter(message)
    out = set()
    for t, n in counts.items():
        system.require_token(t)
        r = system.reverses[t]
        if r is None:
            raise NoReverseError(f"token {t!r} has no reverse")
        if n > counts[r]:
            out.add(t)
    return frozenset(out)


def effective_domain(system: TokenSystem, token: str) -> frozenset[str]:
    """The states a token moves."""
    system.require_token(token)
    return frozenset(s for s in system.states if system.tokens[token][s] != s)


def _shortest_messages_from(system: TokenSystem, source: str) -> dict[str, Message]:
    """One shortest stepwise-effective message from ``source`` to every
    reachable state, ties broken by the canonical token order."""
    out: dict[str, Message] = {source: ()}
    queue = deque([source])
    while queue:
        s = queue.popleft()
        for tok, v in system.successors[s]:
            if v not in out:
                out[v] = out[s] + (tok,)
                queue.append(v)
    return out


def state_contents(system: TokenSystem) -> dict[str, ContentSet]:
    """The content of every state of a verified cubical system."""
    require_cubical(system)
    paths = {s: _shortest_messages_from(system, s) for s in system.states}
    out: dict[str, ContentSet] = {}
    for target in system.states:
        union: set[str] = set()
        for source in system.states:
            union |= message_content(system, paths[source][target])
        out[target] = frozenset(union)
    return out


def state_content(system: TokenSystem, state: str) -> ContentSet:
    system.require_state(state)
    return state_contents(system)[state]


def content_delta(system: TokenSystem, a: str, b: str) -> tuple[ContentSet, ContentSet]:
    """(content(b) - content(a), content(a) - content(b)); the parts are
    disjoint and their union is the symmetric difference."""
    contents = state_contents(system)
    return contents[b] - contents[a], contents[a] - contents[b]


def state_content_oracle(
    system: TokenSystem,
    state: str,
    max_len: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ContentSet:
    """Union of message contents over every stepwise-effective message of
    length at most ``max_len`` producing ``state``, from any start.

    The content of a message depends only on its per-class count profile
    (signed difference for a mutual-reverse pair, a has-occurred flag for
    a token without a reverse, nothing for a self-reverse token), so the
    search deduplicates on (current state, profile); a profile revisited
    at a longer length can only reach a subset of what the first visit
    reaches.  Monotone in ``max_len`` and exact for the cap it is given.
    A token without a reverse contributes itself whenever it occurs, its
    reverse's count being zero by absence.
    """
    system.require_state(state)
    pair_reps = sorted(
        {
            system.class_rep[t]
            for t in system.token_names
            if system.reverses[t] not in (None, t)
        }
    )
    loose = sorted(t for t in system.token_names if system.reverses[t] is None)
    pair_index = {rep: i for i, rep in enumerate(pair_reps)}
    loose_index = {t: i for i, t in enumerate(loose)}

    def content_of(diffs: tuple[int, ...], flags: tuple[int, ...]) -> set[str]:
        out = set()
        for rep, i in pair_index.items():
            if diffs[i] > 0:
                out.add(rep)
            elif diffs[i] < 0:
                rev = system.reverses[rep]
                assert rev is not None
                out.add(rev)
        out.update(t for t, i in loose_index.items() if flags[i])
        return out

    zero = ((0,) * len(pair_reps), (0,) * len(loose))
    frontier = [(s, *zero) for s in system.states]
    seen = set(frontier)
    union: set[str] = set()
    expanded = 0
    for depth in range(max_len + 1):
        for node in frontier:
            if node[0] == state:
                union |= content_of(node[1], node[2])
        if depth == max_len:
            break
        nxt = []
        for current, diffs, flags in frontier:
            expanded += 1
            if expanded > node_budget:
                raise BudgetExceededError(
                    f"content oracle exceeded {node_budget} nodes"
                )
            for tok, image in system.successors[current]:
                rev = system.reverses[tok]
                if rev is None:
                    new_flags = list(flags)
                    new_flags[loose_index[tok]] = 1
                    node = (image, diffs, tuple(new_flags))
                elif rev == tok:
                    node = (image, diffs, flags)
                else:
                    rep = system.class_rep[tok]
                    new_diffs = list(diffs)
                    new_diffs[pair_index[rep]] += 1 if tok == rep else -1
                    node = (image, tuple(new_diffs), flags)
                if node not in seen:
                    seen.add(node)
                    nxt.append(node)
        frontier = nxt
    return frozenset(union)
