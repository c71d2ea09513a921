"""Line-oriented text formats for token systems and set families.

System documents (.tks)::

    states S T P Q
    token tau: S>T, P>Q
    token mu: T>Q
    theta tau=0.5 mu=0.5     # optional
    xi uniform               # optional

Family documents (.fam)::

    ground x y
    member
    member x
    edge {}|{x}              # optional; no edge lines means induced

Identifiers match [A-Za-z0-9_~']+, '#' starts a comment, unlisted states
are fixed points, and ``uniform`` expands to the uniform distribution.
Formatting is canonical: parse then format is idempotent and formatted
documents round-trip byte for byte.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import TokenSystem, build_system
from .errors import DistributionError, ParseError
from .gsystem import CubeGraph, GroundSet, SetFamily, induced_cube_graph, render_set

IDENTIFIER = re.compile(r"[A-Za-z0-9_~']+\Z")
SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SystemDocument:
    system: TokenSystem
    theta: dict[str, float] | None = None
    xi: dict[str, float] | None = None


@dataclass(frozen=True)
class FamilyDocument:
    family: SetFamily
    edges: tuple[frozenset[GroundSet], ...] | None = None

    def cube_graph(self) -> CubeGraph:
        if self.edges is None:
            return induced_cube_graph(self.family)
        return CubeGraph(self.family, self.edges)


def _meaningful_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((number, line))
    return out


def _require_identifier(name: str, line: int, what: str) -> str:
    if not IDENTIFIER.match(name):
        raise ParseError(f"bad {what} {name!r}", line=line)
    return name


def _parse_distribution(
    body: str, line: int, support: tuple[str, ...], what: str
) -> dict[str, float]:
    if body.strip() == "uniform":
        return {name: 1.0 / len(support) for name in support}
    out: dict[str, float] = {}
    for column, part in _split_with_columns(body):
        if "=" not in part:
            raise ParseError(f"expected NAME=VALUE in {what} line", line=line, column=column)
        name, _, value = part.partition("=")
        if name not in support:
            raise DistributionError(f"{what} names unknown {name!r} (line {line})")
        if name in out:
            raise DistributionError(f"{what} repeats {name!r} (line {line})")
        try:
            out[name] = float(value)
        except ValueError:
            raise ParseError(f"bad number {value!r}", line=line, column=column) from None
    missing = [name for name in support if name not in out]
    if missing:
        raise DistributionError(f"{what} is missing {missing[0]!r} (line {line})")
    total = sum(out.values())
    if abs(total - 1.0) > SUM_TOLERANCE:
        raise DistributionError(f"{what} sums to {total!r}, not 1 (line {line})")
    if any(v < 0 for v in out.values()):
        raise DistributionError(f"{what} has a negative entry (line {line})")
    return out


def _split_with_columns(body: str) -> list[tuple[int, str]]:
    out = []
    column = 1
    for part in re.split(r"(\s+)", body):
        if part and not part.isspace():
            out.append((column, part))
        column += len(part)
    return out


def parse_system_document(text: str) -> SystemDocument:
    lines = _meaningful_lines(text)
    if not lines or not lines[0][1].split()[0] == "states":
        line = lines[0][0] if lines else 1
        raise ParseError("document must start with a 'states' line", line=line)

    first_line, first = lines[0]
    state_names = first.split()[1:]
    if not state_names:
        raise ParseError("'states' line lists no states", line=first_line)
    for name in state_names:
        _require_identifier(name, first_line, "state name")

    tokens: list[tuple[str, dict[str, str]]] = []
    theta_raw: tuple[int, str] | None = None
    xi_raw: tuple[int, str] | None = None
    for line, body in lines[1:]:
        keyword, _, rest = body.partition(" ")
        if keyword == "token":
            name, moves = _parse_token_line(rest, line, state_names)
            tokens.append((name, moves))
        elif keyword == "theta":
            if theta_raw is not None:
                raise ParseError("duplicate theta line", line=line)
            theta_raw = (line, rest)
        elif keyword == "xi":
            if xi_raw is not None:
                raise ParseError("duplicate xi line", line=line)
            xi_raw = (line, rest)
        elif keyword == "states":
            raise ParseError("duplicate states line", line=line)
        else:
            raise ParseError(f"unknown directive {keyword!r}", line=line, column=1)

    system = build_system(state_names, tokens)
    theta = (
        _parse_distribution(theta_raw[1], theta_raw[0], system.token_names, "theta")
        if theta_raw
        else None
    )
    xi = (
        _parse_distribution(xi_raw[1], xi_raw[0], system.states, "xi")
        if xi_raw
        else None
    )
    return SystemDocument(system=system, theta=theta, xi=xi)


def _parse_token_line(
    rest: str, line: int, states: list[str]
) -> tuple[str, dict[str, str]]:
    head, sep, moves_body = rest.partition(":")
    if not sep:
        raise ParseError("token line needs 'token NAME: MOVES'", line=line)
    name = _require_identifier(head.strip(), line, "token name")
    moves: dict[str, str] = {}
    for chunk in moves_body.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError(f"empty move in token {name!r}", line=line)
        source, sep, target = chunk.partition(">")
        if not sep:
            raise ParseError(f"move {chunk!r} needs the form A>B", line=line)
        source, target = source.strip(), target.strip()
        for state in (source, target):
            _require_identifier(state, line, "state name")
            if state not in states:
                raise ParseError(f"unknown state {state!r}", line=line)
        if source in moves:
            raise ParseError(f"token {name!r} moves {source!r} twice", line=line)
        moves[source] = target
    return name, moves


def format_system_document(document: SystemDocument) -> str:
    system = document.system
    lines = ["states " + " ".join(system.states)]
    for name in system.token_names:
        moves = [
            f"{s}>{system.tokens[name][s]}"
            for s in system.states
            if system.tokens[name][s] != s
        ]
        lines.append(f"token {name}: " + ", ".join(moves))
    if document.theta is not None:
        lines.append(
            "theta " + " ".join(f"{t}={document.theta[t]!r}" for t in system.token_names)
        )
    if document.xi is not None:
        lines.append("xi " + " ".join(f"{s}={document.xi[s]!r}" for s in system.states))
    return "\n".join(lines) + "\n"


_SET_LITERAL = re.compile(r"\{([^{}|]*)\}\Z")


def _parse_set_literal(text: str, line: int) -> GroundSet:
    match = _SET_LITERAL.match(text.strip())
    if not match:
        raise ParseError(f"bad set literal {text!r}", line=line)
    inner = match.group(1).strip()
    if not inner:
        return frozenset()
    elements = [part.strip() for part in inner.split(",")]
    for element in elements:
        _require_identifier(element, line, "ground element")
    return frozenset(elements)


def parse_family_document(text: str) -> FamilyDocument:
    lines = _meaningful_lines(text)
    if not lines or lines[0][1].split()[0] != "ground":
        line = lines[0][0] if lines else 1
        raise ParseError("family document must start with a 'ground' line", line=line)
    first_line, first = lines[0]
    ground = first.split()[1:]
    for name in ground:
        _require_identifier(name, first_line, "ground element")

    members: list[GroundSet] = []
    edges: list[frozenset[GroundSet]] = []
    saw_edges = False
    for line, body in lines[1:]:
        keyword, _, rest = body.partition(" ")
        if keyword == "member":
            elements = rest.split()
            for element in elements:
                _require_identifier(element, line, "ground element")
            members.append(frozenset(elements))
        elif keyword == "edge":
            saw_edges = True
            left, sep, right = rest.partition("|")
            if not sep:
                raise ParseError("edge line needs the form {A}|{B}", line=line)
            edges.append(
                frozenset((_parse_set_literal(left, line), _parse_set_literal(right, line)))
            )
        elif keyword == "ground":
            raise ParseError("duplicate ground line", line=line)
        else:
            raise ParseError(f"unknown directive {keyword!r}", line=line, column=1)

    family = SetFamily(tuple(ground), tuple(members))
    return FamilyDocument(family=family, edges=tuple(edges) if saw_edges else None)


def format_family_document(document: FamilyDocument) -> str:
    lines = ["ground " + " ".join(document.family.ground)]
    for member in document.family.members:
        elements = " ".join(sorted(member))
        lines.append(("member " + elements).rstrip())
    if document.edges is not None:
        for edge in document.edges:
            a, b = sorted(edge, key=lambda m: (len(m), tuple(sorted(m))))
            lines.append(f"edge {render_set(a)}|{render_set(b)}")
    return "\n".join(lines) + "\n"


def sniff_and_parse(text: str) -> SystemDocument | FamilyDocument:
    """Parse as a system or family document depending on the first line."""
    lines = _meaningful_lines(text)
    if lines and lines[0][1].split()[0] == "ground":
        return parse_family_document(text)
    return parse_system_document(text)
