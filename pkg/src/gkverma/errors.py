"""Exception hierarchy shared by the library and the CLI."""


class DomainError(ValueError):
    """Base class for inputs outside an operation's mathematical domain."""


class RankError(DomainError):
    """Lie type / rank combination below the supported floor."""


class ParabolicError(DomainError):
    """Index of the removed simple root is out of range."""


class WeightError(DomainError):
    """Weight has the wrong length for its algebra."""


class ClassError(DomainError):
    """Sequence is not a valid non-(half-)integral congruence class."""


class IntegralityError(DomainError):
    """Weight is not integral, so the integral formula does not apply."""


class ParseError(ValueError):
    """Malformed textual input (rationals, weights, grid specs)."""
