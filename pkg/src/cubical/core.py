"""Finite token systems, messages, and the basic message predicates.

A token system is a finite ordered set of states together with named,
non-identity, total transformations of that set (the tokens).  A message
is a finite sequence of token names acting by left-to-right composition;
the empty message acts as the identity.

Reverse structure is always inferred from the transformations, never
declared: ``u`` is a reverse of ``t`` when ``S t = V  <=>  V u = S`` for
all distinct states ``S``, ``V``.  The declaration order of states and
tokens is the canonical enumeration order for everything downstream.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    DuplicateNameError,
    DuplicateTransformationError,
    IdentityTokenError,
    NotBijectiveError,
    TooFewStatesError,
    TooFewTokensError,
    UnknownStateError,
    UnknownTokenError,
)

Message = tuple[str, ...]


@dataclass(frozen=True)
class TokenSystem:
    """States plus named total transformations, all immutable.

    ``tokens`` maps each token name to a total state map (every state is a
    key).  Use :func:`build_system` instead of constructing directly; it
    validates the invariants and fills in implicit fixed points.
    """

    states: tuple[str, ...]
    tokens: Mapping[str, Mapping[str, str]]

    @property
    def token_names(self) -> tuple[str, ...]:
        return tuple(self.tokens)

    @cached_property
    def state_index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.states)}

    @cached_property
    def reverses(self) -> dict[str, str | None]:
        """The unique reverse of each token, or None when absent.

        Uniqueness holds because duplicate transformations are rejected at
        construction, so two reverses of the same token would be equal.
        """
        out: dict[str, str | None] = {}
        for t in self.tokens:
            out[t] = next((u for u in self.tokens if self._is_reverse_of(t, u)), None)
        return out

    @cached_property
    def class_rep(self) -> dict[str, str]:
        """Canonical representative of each token's reverse-pair class.

        For a mutual-reverse pair the representative is the smaller name;
        a self-reverse or reverse-less token represents itself.
        """
        out = {}
        for t in self.tokens:
            r = self.reverses[t]
            out[t] = t if r is None else min(t, r)
        return out

    @cached_property
    def successors(self) -> dict[str, tuple[tuple[str, str], ...]]:
        """Effective transitions per state: state -> ((token, image), ...)."""
        out = {}
        for s in self.states:
            out[s] = tuple((t, m[s]) for t, m in self.tokens.items() if m[s] != s)
        return out

    def _is_reverse_of(self, t: str, u: str) -> bool:
        tm, um = self.tokens[t], self.tokens[u]
        for s in self.states:
            v = tm[s]
            if v != s and um[v] != s:
                return False
        for v in self.states:
            s = um[v]
            if s != v and tm[s] != v:
                return False
        return True

    def require_state(self, state: str) -> None:
        if state not in self.state_index:
            raise UnknownStateError(f"unknown state {state!r}")

    def require_token(self, token: str) -> None:
        if token not in self.tokens:
            raise UnknownTokenError(f"unknown token {token!r}")


def build_system(
    states: Iterable[str],
    tokens: Mapping[str, Mapping[str, str]] | Iterable[tuple[str, Mapping[str, str]]],
) -> TokenSystem:
    """Validate and build a token system.

    Token maps may list only the moved states; fixed points are implicit.
    Rejects identity tokens, duplicate names, duplicate transformations,
    and systems with fewer than two states or no tokens.
    """
    state_tuple = tuple(states)
    if len(set(state_tuple)) != len(state_tuple):
        dup = next(s for s in state_tuple if state_tuple.count(s) > 1)
        raise DuplicateNameError(f"duplicate state name {dup!r}")
    if len(state_tuple) < 2:
        raise TooFewStatesError("a token system needs at least two states")

    pairs = list(tokens.items()) if isinstance(tokens, Mapping) else list(tokens)
    if not pairs:
        raise TooFewTokensError("a token system needs at least one token")

    state_set = set(state_tuple)
    table: dict[str, dict[str, str]] = {}
    seen_maps: dict[tuple[str, ...], str] = {}
    for name, moved in pairs:
        if name in table:
            raise DuplicateNameError(f"duplicate token name {name!r}")
        for src, dst in moved.items():
            if src not in state_set:
                raise UnknownStateError(f"token {name!r} moves unknown state {src!r}")
            if dst not in state_set:
                raise UnknownStateError(f"token {name!r} maps to unknown state {dst!r}")
        full = {s: moved.get(s, s) for s in state_tuple}
        if all(full[s] == s for s in state_tuple):
            raise IdentityTokenError(f"token {name!r} equals the identity transformation")
        key = tuple(full[s] for s in state_tuple)
        if key in seen_maps:
            raise DuplicateTransformationError(
                f"tokens {seen_maps[key]!r} and {name!r} are the same transformation"
            )
        seen_maps[key] = name
        table[name] = full
    return TokenSystem(states=state_tuple, tokens=table)


def as_message(tokens: Sequence[str]) -> Message:
    return tuple(tokens)


def apply(system: TokenSystem, state: str, message: Sequence[str]) -> str:
    """Apply a message left to right; the empty message is the identity."""
    system.require_state(state)
    current = state
    for t in message:
        system.require_token(t)
        current = system.tokens[t][current]
    return current


def produced_sequence(system: TokenSystem, state: str, message: Sequence[str]) -> tuple[str, ...]:
    """The sequence of states a message produces, starting at ``state``."""
    system.require_state(state)
    out = [state]
    for t in message:
        system.require_token(t)
        out.append(system.tokens[t][out[-1]])
    return tuple(out)


def reverse_of(system: TokenSystem, token: str) -> str | None:
    """The unique reverse of ``token`` in the system, or None."""
    system.require_token(token)
    return system.reverses[token]


def adjacent_to(system: TokenSystem, source: str, target: str) -> bool:
    """True when some token moves ``source`` to the distinct ``target``."""
    system.require_state(source)
    system.require_state(target)
    if source == target:
        return False
    return any(m[source] == target for m in system.tokens.values())


def is_adjacent(system: TokenSystem, a: str, b: str) -> bool:
    """Mutual adjacency: each state is one effective step from the other."""
    return adjacent_to(system, a, b) and adjacent_to(system, b, a)


def is_ineffective(system: TokenSystem, state: str, message: Sequence[str]) -> bool:
    return apply(system, state, message) == state


def is_stepwise_effective(system: TokenSystem, state: str, message: Sequence[str]) -> bool:
    seq = produced_sequence(system, state, message)
    return all(seq[i] != seq[i - 1] for i in range(1, len(seq)))


def is_closed(system: TokenSystem, state: str, message: Sequence[str]) -> bool:
    """Stepwise effective and returning to the start state."""
    seq = produced_sequence(system, state, message)
    if any(seq[i] == seq[i - 1] for i in range(1, len(seq))):
        return False
    return seq[-1] == state


def is_vacuous(system: TokenSystem, message: Sequence[str]) -> bool:
    """Token occurrences pair off into mutual reverses.

    Computed by per-class counting: for a mutual-reverse pair the two
    orientations must occur equally often, a self-reverse token must occur
    an even number of times, and a token without a reverse cannot be
    paired at all.
    """
    counts = Counter(message)
    for t in counts:
        system.require_token(t)
        r = system.reverses[t]
        if r is None:
            return False
        if r == t:
            if counts[t] % 2:
                return False
        elif counts[t] != counts[r]:
            return False
    return True


def is_concise(system: TokenSystem, state: str, message: Sequence[str]) -> bool:
    """Stepwise effective, no token twice, no token together with its reverse.

    A self-reverse token can never appear in a concise message: any
    occurrence puts the token and its reverse in the message at once.
    """
    if not is_stepwise_effective(system, state, message):
        return False
    seen: set[str] = set()
    for t in message:
        if t in seen:
            return False
        seen.add(t)
    for t in seen:
        r = system.reverses[t]
        if r == t:
            return False
        if r is not None and r in seen:
            return False
    return True


def reverse_message(system: TokenSystem, message: Sequence[str]) -> Message | None:
    """The reversed sequence of reverses, or None when one is missing."""
    out = []
    for t in reversed(message):
        system.require_token(t)
        r = system.reverses[t]
        if r is None:
            return None
        out.append(r)
    return tuple(out)


def check_isomorphism(
    system_a: TokenSystem,
    system_b: TokenSystem,
    alpha: Mapping[str, str],
    beta: Mapping[str, str],
) -> bool:
    """Verify that (alpha, beta) is an isomorphism of token systems.

    Requires alpha to be a state bijection and beta a token bijection;
    then checks ``alpha(S t) == alpha(S) beta(t)`` for every state and
    token, which is equivalent to the adjacency-preserving condition
    because alpha is injective.
    """
    if set(alpha) != set(system_a.states) or set(alpha.values()) != set(system_b.states) or len(
        set(alpha.values())
    ) != len(alpha):
        raise NotBijectiveError("alpha is not a bijection between the state sets")
    if set(beta) != set(system_a.tokens) or set(beta.values()) != set(system_b.tokens) or len(
        set(beta.values())
    ) != len(beta):
        raise NotBijectiveError("beta is not a bijection between the token sets")
    for t, tm in system_a.tokens.items():
        um = system_b.tokens[beta[t]]
        for s in system_a.states:
            if alpha[tm[s]] != um[alpha[s]]:
                return False
    return True
