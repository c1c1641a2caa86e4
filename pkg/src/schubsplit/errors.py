"""Exception hierarchy shared by every module of the package."""


class SchubertError(ValueError):
    """Base class; the CLI maps all of these to exit code 2."""


class InvalidRange(SchubertError):
    pass


class InvalidPermutation(SchubertError):
    pass


class ParityViolation(InvalidPermutation):
    pass


class InvalidPartition(SchubertError):
    pass


class NotGrassmannian(SchubertError):
    pass


class FamilyMismatch(SchubertError):
    pass


class InvalidRank(SchubertError):
    pass


class StopNode(SchubertError):
    pass


class Incompatible(SchubertError):
    pass


class NotInSpan(SchubertError):
    pass


class NeedsMoreVariables(SchubertError):
    pass


class SymmetryError(SchubertError):
    """An operation would break the symmetric (dominant-monomial) storage form."""
