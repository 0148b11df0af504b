"""
Exception hierarchy shared by all galois-kit modules.
"""

from typing import Optional, Tuple


class GaloisKitError(Exception):
    """
    Base class of all errors raised by galois-kit.
    """


class LawViolationError(GaloisKitError):
    """
    Raised if a constructed object or a round trip violates the law it is supposed to satisfy.
    """

    def __init__(self, law: str, witness: Optional[Tuple] = None, message: Optional[str] = None):
        """
        :param law: Name of the violated law.
        :param witness: Lexicographically first tuple violating the law.
        :param message: Optional human-readable explanation.
        """
        self.law = law
        self.witness = witness
        text = message or f'Law "{law}" is violated'
        if witness is not None:
            text += f' (witness: {", ".join(str(w) for w in witness)})'
        super().__init__(text)


class PreconditionError(GaloisKitError):
    """
    Raised if the inputs of an operation do not satisfy its precondition.
    """


class ShapeError(PreconditionError):
    """
    Index sets or lattices of the inputs do not fit together.
    """


class UnsupportedStructureError(PreconditionError):
    """
    The lattice lacks the structure (MV, Boolean) required by the operation.
    """


class NotAdjointableError(PreconditionError):
    """
    The operator does not preserve or reverse the infima/suprema required for an adjoint.
    """

    def __init__(self, message: str, witness: Optional[Tuple] = None):
        self.witness = witness
        super().__init__(message if witness is None else f'{message} (witness: {witness})')


class NotDecomposableError(PreconditionError):
    """
    The operator is not a closure/interior operator satisfying the scalar law.
    """

    def __init__(self, message: str, witness: Optional[Tuple] = None):
        self.witness = witness
        super().__init__(message if witness is None else f'{message} (witness: {witness})')


class BudgetExceededError(GaloisKitError):
    """
    An exhaustive enumeration would exceed the configured row budget.
    """


class FormatError(GaloisKitError):
    """
    Input data is malformed: unknown names, labels outside the carrier or invalid files.
    """
