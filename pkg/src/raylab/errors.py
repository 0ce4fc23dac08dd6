"""Exception types shared across the package."""


class RaylabError(Exception):
    """Base class for all raylab errors."""


class WindowError(RaylabError):
    """Invalid truncation window (M < 2)."""


class OutOfWindowError(RaylabError):
    """A segment or block index falls outside the model window."""


class CodeSyntaxError(RaylabError):
    """A code string does not match the grammar."""


class MarginError(RaylabError):
    """A mapping-class application would push support into the truncation
    boundary, where the finite carousel stops agreeing with the infinite map."""


class EdgeViolation(RaylabError):
    """A claimed graph path contains a non-edge (intersecting consecutive pair)."""

    def __init__(self, index, first, second, crossings):
        self.index = index
        self.first = first
        self.second = second
        self.crossings = crossings
        super().__init__(
            f"path entries {index} and {index + 1} intersect "
            f"({crossings} crossings): {first} | {second}"
        )


class OracleSizeError(RaylabError):
    """Input exceeds the exhaustive oracle's size bound."""


class NonSimpleError(RaylabError):
    """Operation requires a simple (embedded) arc."""


class PreconditionError(RaylabError):
    """A stated precondition cannot be certified for the given input."""


class MatcherUndecided(RaylabError):
    """The copy matcher could neither certify nor refute a candidate."""
