"""Exception types shared across the package.

Every error carries a short ``kind`` tag so the command line front end can
report failures in a machine-readable way.
"""


class StringLinkError(Exception):
    kind = "Error"


class WidthMismatch(StringLinkError, ValueError):
    """Strand counts disagree, or width bookkeeping does not close."""

    kind = "WidthMismatch"


class WidthUnderflow(StringLinkError, ValueError):
    """An event addresses a position that does not exist at the running width."""

    kind = "WidthUnderflow"


class ClosedComponent(StringLinkError, ValueError):
    kind = "ClosedComponent"


class PermutedEndpoints(StringLinkError, ValueError):
    """A strand leaving bottom point i does not end at top point i."""

    kind = "PermutedEndpoints"


class OddCrossingParity(StringLinkError, RuntimeError):
    """Half the signed inter-component crossing count is not an integer.

    This cannot happen for a correctly traced diagram.
    """

    kind = "OddCrossingParity"


class EmptySelection(StringLinkError, ValueError):
    kind = "EmptySelection"


class NotAUnit(StringLinkError, ValueError):
    kind = "NotAUnit"


class NoConvergence(StringLinkError, RuntimeError):
    kind = "NoConvergence"


class TruncationTooLow(StringLinkError, ValueError):
    kind = "TruncationTooLow"


class MixedMode(StringLinkError, ValueError):
    """Braid tokens and slice tokens appear in the same DSL text."""

    kind = "MixedMode"


class DSLSyntaxError(StringLinkError, SyntaxError):
    kind = "SyntaxError"

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.msg = message
        self.lineno = line
        self.offset = column

    def __str__(self) -> str:
        return f"{self.msg} (line {self.lineno}, column {self.offset})"
