"""Exception types shared across the package."""


class Error(Exception):
    """Base class for every error raised by this package."""


class DuplicateNameError(Error):
    """A state or token name was declared twice."""


class DuplicateTransformationError(Error):
    """Two token names denote the same transformation of the states."""


class TooFewStatesError(Error):
    """A token system needs at least two states."""


class TooFewTokensError(Error):
    """A token system needs at least one token."""


class IdentityTokenError(Error):
    """A token equal to the identity transformation was declared."""


class UnknownStateError(Error):
    """A state name does not resolve in the ambient system."""


class UnknownTokenError(Error):
    """A token name does not resolve in the ambient system."""


class NoReverseError(Error):
    """A message content was requested for a token without a reverse."""


class NotBijectiveError(Error):
    """A candidate isomorphism map is not a bijection."""


class NotCubicalError(Error):
    """An operation requiring a verified cubical system was given one that
    fails at least one of the axioms C1 to C4."""


class BudgetExceededError(Error):
    """A bounded enumeration hit its configured node budget."""


class DisconnectedError(Error):
    """A cube subgraph must be connected."""


class NotCubeEdgeError(Error):
    """An edge of a cube graph must join sets at symmetric difference one."""


class DegenerateGroundError(Error):
    """The family admits no tokens: every ground element lies in every
    member or in none."""


class NotAWalkError(Error):
    """Consecutive vertices of a walk must be graph edges."""


class NotStepwiseEffectiveError(Error):
    """The message does not change the state at every step."""


class DistributionError(Error):
    """A probability mapping is malformed (bad support or sum)."""


class ZeroTokenProbabilityError(DistributionError):
    """Every token must receive strictly positive probability."""


class InternalInconsistencyError(Error):
    """An invariant that is guaranteed on verified inputs was violated;
    this indicates a bug rather than bad input."""


class ParseError(Error):
    """A text document could not be parsed; carries line and column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + location)
