"""The reversible Markov chain of a probabilistic token cubical system.

Tokens occur independently across trials with fixed positive
probabilities theta; the occurring token acts on the current state, first
drawn from the initial distribution xi.  Transition probability from S to
an adjacent V is the probability of the unique token moving S to V, and
the leftover mass stays put.  The chain is regular, in detailed balance
with the distribution proportional to the product of theta over each
state's content, and that distribution is its unique stationary one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .axioms import require_cubical
from .content import state_contents
from .core import TokenSystem
from .errors import (
    DistributionError,
    InternalInconsistencyError,
    ZeroTokenProbabilityError,
)

SUM_TOLERANCE = 1e-9
BALANCE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class TransitionMatrix:
    states: tuple[str, ...]
    array: np.ndarray = field(repr=False)

    def probability(self, source: str, target: str) -> float:
        i = self.states.index(source)
        j = self.states.index(target)
        return float(self.array[i, j])


@dataclass(frozen=True)
class StochasticSystem:
    """A verified cubical system with initial and token distributions and
    the transition matrix they induce."""

    system: TokenSystem
    xi: Mapping[str, float]
    theta: Mapping[str, float]
    matrix: TransitionMatrix = field(repr=False)

    @property
    def states(self) -> tuple[str, ...]:
        return self.system.states


@dataclass(frozen=True)
class Trajectory:
    seed: int
    states: tuple[str, ...]
    counts: Mapping[str, int]

    def frequencies(self) -> dict[str, float]:
        total = len(self.states)
        return {s: self.counts.get(s, 0) / total for s in self.counts}


def _validate_distribution(
    mapping: Mapping[str, float], support: Sequence[str], name: str, strict: bool
) -> dict[str, float]:
    unknown = set(mapping) - set(support)
    if unknown:
        raise DistributionError(f"{name} assigns probability to unknown name {min(unknown)!r}")
    missing = set(support) - set(mapping)
    if missing:
        raise DistributionError(f"{name} is missing {min(missing)!r}")
    for key, value in mapping.items():
        if value < 0:
            raise DistributionError(f"{name}[{key}] is negative")
        if strict and value == 0:
            raise ZeroTokenProbabilityError(f"{name}[{key}] must be strictly positive")
    total = sum(mapping.values())
    if abs(total - 1.0) > SUM_TOLERANCE:
        raise DistributionError(f"{name} sums to {total!r}, not 1")
    return {key: float(mapping[key]) for key in support}


def uniform_distribution(support: Sequence[str]) -> dict[str, float]:
    return {name: 1.0 / len(support) for name in support}


def build_chain(
    system: TokenSystem,
    xi: Mapping[str, float] | None,
    theta: Mapping[str, float],
) -> StochasticSystem:
    """Validate the quadruple and precompute its transition matrix.

    ``xi`` of None means the uniform initial distribution.  On a verified
    cubical system distinct tokens cannot move a state to the same image,
    so each off-diagonal entry is a single theta value; the diagonal gets
    the rest and always lands strictly inside (0, 1).
    """
    require_cubical(system)
    xi = uniform_distribution(system.states) if xi is None else xi
    xi_full = _validate_distribution(xi, system.states, "xi", strict=False)
    theta_full = _validate_distribution(theta, system.token_names, "theta", strict=True)

    n = len(system.states)
    idx = system.state_index
    array = np.zeros((n, n))
    for s in system.states:
        for tok, v in system.successors[s]:
            if array[idx[s], idx[v]] != 0.0:
                raise InternalInconsistencyError(
                    f"two tokens move {s} to {v} on a verified system"
                )
            array[idx[s], idx[v]] = theta_full[tok]
        row_off = array[idx[s]].sum()
        array[idx[s], idx[s]] = 1.0 - row_off
        if not 0.0 < array[idx[s], idx[s]] < 1.0:
            raise InternalInconsistencyError(
                f"self probability of {s} is outside (0, 1)"
            )
    matrix = TransitionMatrix(system.states, array)
    return StochasticSystem(system=system, xi=xi_full, theta=theta_full, matrix=matrix)


def n_step_matrix(chain: StochasticSystem, n: int) -> TransitionMatrix:
    if n < 0:
        raise ValueError("step count must be nonnegative")
    return TransitionMatrix(chain.states, np.linalg.matrix_power(chain.matrix.array, n))


def check_regularity(chain: StochasticSystem) -> bool:
    """Entrywise positivity of the power at exponent |states| - 1.

    Any two states are joined by a loop-padded path of that length, so a
    valid chain is always regular at this exponent.
    """
    power = n_step_matrix(chain, len(chain.states) - 1)
    return bool(np.all(power.array > 0))


def stationary_closed_form(chain: StochasticSystem) -> dict[str, float]:
    """The stationary distribution from state contents: weight each state
    by the product of theta over its content and normalize."""
    contents = state_contents(chain.system)
    weights = {
        s: float(np.prod([chain.theta[t] for t in sorted(contents[s])]))
        for s in chain.states
    }
    total = sum(weights.values())
    return {s: w / total for s, w in weights.items()}


def stationary_solve(chain: StochasticSystem) -> dict[str, float]:
    """Independent oracle: solve pi P = pi with probabilities summing to 1."""
    p = chain.matrix.array
    n = len(chain.states)
    system = (p - np.eye(n)).T
    system[-1, :] = 1.0
    rhs = np.zeros(n)
    rhs[-1] = 1.0
    try:
        pi = np.linalg.solve(system, rhs)
    except np.linalg.LinAlgError:
        pi, *_ = np.linalg.lstsq(system, rhs, rcond=None)
    return {s: float(pi[i]) for i, s in enumerate(chain.states)}


def check_detailed_balance(
    chain: StochasticSystem,
    pi: Mapping[str, float],
    tolerance: float = BALANCE_TOLERANCE,
) -> bool:
    """pi(V) p(V,S) == p(S,V) pi(S) for all pairs, and the flow-ratio form
    of the same identity on adjacent pairs, within a magnitude-scaled
    tolerance."""
    array = chain.matrix.array
    idx = chain.system.state_index
    for s in chain.states:
        for v in chain.states:
            lhs = pi[v] * array[idx[v], idx[s]]
            rhs = pi[s] * array[idx[s], idx[v]]
            if abs(lhs - rhs) > tolerance * max(1.0, abs(lhs), abs(rhs)):
                return False
            forward = array[idx[s], idx[v]]
            backward = array[idx[v], idx[s]]
            if s != v and forward > 0 and backward > 0:
                if abs(pi[v] / pi[s] - forward / backward) > 1e-9 * max(
                    1.0, pi[v] / pi[s]
                ):
                    return False
    return True


def simulate(chain: StochasticSystem, seed: int, steps: int) -> Trajectory:
    """A deterministic trajectory: the initial state comes from xi, then
    each trial draws a token from theta and applies it.

    Randomness comes from ``random.Random(seed)`` through inverse-CDF
    sampling in canonical order, so a (seed, chain) pair always yields the
    same trajectory.
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    rng = random.Random(seed)

    states = chain.states
    tokens = chain.system.token_names
    xi_cdf = _cdf([chain.xi[s] for s in states])
    theta_cdf = _cdf([chain.theta[t] for t in tokens])
    idx = chain.system.state_index
    table = [
        [idx[chain.system.tokens[t][s]] for s in states] for t in tokens
    ]

    current = _draw(rng, xi_cdf)
    visited = [current]
    for _ in range(steps):
        tok = _draw(rng, theta_cdf)
        current = table[tok][current]
        visited.append(current)

    counts: dict[str, int] = {s: 0 for s in states}
    for i in visited:
        counts[states[i]] += 1
    return Trajectory(
        seed=seed,
        states=tuple(states[i] for i in visited),
        counts=counts,
    )


def _cdf(weights: Sequence[float]) -> list[float]:
    total = 0.0
    out = []
    for w in weights:
        total += w
        out.append(total)
    out[-1] = max(out[-1], 1.0)
    return out


def _draw(rng: random.Random, cdf: Sequence[float]) -> int:
    u = rng.random()
    lo, hi = 0, len(cdf) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if u < cdf[mid]:
            hi = mid
        else:
            lo = mid + 1
    return lo


def empirical_frequencies(trajectory: Trajectory) -> dict[str, float]:
    total = len(trajectory.states)
    return {s: trajectory.counts[s] / total for s in trajectory.counts}


def distributions_tsv(
    chain: StochasticSystem,
    empirical: Mapping[str, float] | None = None,
) -> str:
    """Tab-separated stationary distributions, one state per line."""
    closed = stationary_closed_form(chain)
    solved = stationary_solve(chain)
    header = ["state", "closed_form", "solved"]
    if empirical is not None:
        header.append("empirical")
    lines = ["\t".join(header)]
    for s in chain.states:
        row = [s, repr(closed[s]), repr(solved[s])]
        if empirical is not None:
            row.append(repr(empirical.get(s, 0.0)))
        lines.append("\t".join(row))
    return "\n".join(lines) + "\n"
