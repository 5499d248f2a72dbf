"""Exception types shared across the library."""

from __future__ import annotations


class CrossedCatError(Exception):
    """Base class for all library errors."""


class GroupValidationError(CrossedCatError):
    """A Cayley table fails one of the group laws."""


class NoIdentity(GroupValidationError):
    def __init__(self, identity: int, witness: int):
        self.identity = identity
        self.witness = witness
        super().__init__(f"element {identity} is not an identity (fails at {witness})")


class AssocViolation(GroupValidationError):
    def __init__(self, a: int, b: int, c: int):
        self.witness = (a, b, c)
        super().__init__(f"associativity fails at (a,b,c)=({a},{b},{c})")


class NoInverse(GroupValidationError):
    def __init__(self, a: int):
        self.witness = a
        super().__init__(f"element {a} has no two-sided inverse")


class MalformedTable(GroupValidationError):
    """Ragged table or out-of-range entry."""


class NotMatched(CrossedCatError):
    """A matched-pair precondition failed; carries the offending report."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"matched-pair verification failed: {report.first_failure()}")


class NotExact(CrossedCatError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"not an exact factorization: {reason}")


class NoUniqueFactorization(CrossedCatError):
    """Internal invariant: cannot happen once NotExact preconditions pass."""


class ModulusTooSmall(CrossedCatError):
    def __init__(self, modulus: int, needed: int):
        self.modulus = modulus
        self.needed = needed
        super().__init__(f"modulus {modulus} not divisible by required exponent {needed}")


class ValidationError(CrossedCatError):
    """A loaded object fails verification; carries the report."""

    def __init__(self, report, message: str = "validation failed"):
        self.report = report
        super().__init__(f"{message}: {report.first_failure()}")


class ParseError(CrossedCatError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (column {position})")


class ArityMismatch(CrossedCatError):
    pass


class EndpointMismatch(CrossedCatError):
    pass


class NonSingularityViolated(CrossedCatError):
    def __init__(self, missing_degree: int):
        self.missing_degree = missing_degree
        super().__init__(f"grading not surjective: no simple of degree {missing_degree}")


class SectionMissing(NonSingularityViolated):
    pass


class WrongSpecialization(CrossedCatError):
    pass


class UnsupportedConfiguration(CrossedCatError):
    """Half-braiding equations admit no full character; outside supported scope."""
