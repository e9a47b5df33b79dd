"""Exception types shared across the package."""


class GenGroupError(ValueError):
    pass


class MalformedTable(GenGroupError):
    pass


class AxiomError(GenGroupError):
    """A table failed one of the generalized-group axioms; ``report`` holds the full scan."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


class NotAssociative(AxiomError):
    def __init__(self, witness, report):
        x, y, z = witness
        super().__init__(f"not associative at ({x}, {y}, {z})", report)
        self.witness = witness


class NoUniqueLocalIdentity(AxiomError):
    def __init__(self, element, candidates, report):
        super().__init__(
            f"element {element} has {len(candidates)} local identity candidates {list(candidates)}",
            report,
        )
        self.element = element
        self.candidates = tuple(candidates)


class NoInverse(AxiomError):
    def __init__(self, element, report):
        super().__init__(f"element {element} has no inverse", report)
        self.element = element


class ClosureViolation(AssertionError):
    """Raised when a set the theory guarantees to be closed is not; indicates a bug."""


class MalformedSpec(GenGroupError):
    pass


class IndexOutOfRange(GenGroupError, IndexError):
    pass


class InvalidIndex(GenGroupError):
    pass


class ShapeMismatch(GenGroupError):
    pass


class NotAHomomorphism(GenGroupError):
    def __init__(self, witness):
        a, b = witness
        super().__init__(f"homomorphism law fails at ({a}, {b})")
        self.witness = witness


class PreservationViolation(AssertionError):
    """A verified homomorphism failed to preserve e or inverses; indicates a bug."""


class UnknownName(GenGroupError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class NotSurjective(GenGroupError):
    pass


class ParseError(GenGroupError):
    pass
