"""Exception types shared across the package."""


class AmbientMismatch(ValueError):
    """Operands live in free abelian groups of different rank."""


class DegreeMismatch(ValueError):
    """Operands are multivectors of different degree."""


class LoopDetected(ValueError):
    """A matroid construction produced a rank-0 element (singleton circuit,
    self-loop edge, or zero column)."""


class CircuitAxiomViolation(ValueError):
    """The given circuit family fails incomparability or elimination.

    Carries the offending witness sets in ``witness``.
    """

    def __init__(self, message, *witness):
        super().__init__(message, *witness)
        self.witness = witness

    def __str__(self):
        if not self.witness:
            return self.args[0]
        shown = ", ".join(str(set(w)) for w in self.witness)
        return f"{self.args[0]}: {shown}"


class NotAFlat(ValueError):
    """A subset passed where a flat was required is not closed."""


class NotPure(ValueError):
    """A fan operation requiring pure dimension met maximal cones of
    different dimensions."""


class SizeLimitExceeded(ValueError):
    """A brute-force oracle was asked for an instance above its size bound."""
