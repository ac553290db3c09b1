"""Exception hierarchy shared by every package.

Domain errors derive from AlgebraError and map to CLI exit code 1; grammar
errors are ParseError and map to exit code 2.
"""


class AlgebraError(ValueError):
    """A well-formed request that the mathematics rejects."""


class NotInvertibleError(AlgebraError):
    """Inversion of a non-unit, division by zero, or inversion on K at a zero."""


class ConstraintError(AlgebraError):
    """A precondition on a character, representation, orbit or argument failed."""


class CapacityError(AlgebraError):
    """A configured size cap (conductor, x-degree, search bound) was exceeded."""


class ParseError(ValueError):
    """Text that does not conform to the element or sequence grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class InternalError(RuntimeError):
    """A state the theory rules out was reached."""
