"""Exception hierarchy shared by the library and the command line."""


class AffineFcError(Exception):
    """Base class for every domain error raised by affine_fc."""


class ConfigError(AffineFcError):
    pass


class InvalidGenerator(AffineFcError):
    pass


class NotFullyCommutative(AffineFcError):
    pass


class NotReduced(AffineFcError):
    pass


class WrongFamily(AffineFcError):
    pass


class IllegalMove(AffineFcError):
    pass


class NotIrreducible(AffineFcError):
    pass


class TraceCapExceeded(AffineFcError):
    pass


class ClassificationGap(AffineFcError):
    """An irreducible element matched none of the known families."""


class RankMismatch(AffineFcError):
    pass


class NonPlanarInput(AffineFcError):
    pass


class BudgetExceeded(AffineFcError):
    pass


class ExpressionGuardExceeded(AffineFcError):
    pass


class UnknownSuite(AffineFcError):
    pass


class InvalidParameter(AffineFcError):
    pass
