"""Exception hierarchy shared by every module of the package."""


class WronskError(Exception):
    """Base class for all library errors."""


class ZeroPolynomialError(WronskError, ValueError):
    """An operation needs a nonzero polynomial."""


class UnsupportedShiftError(WronskError, ValueError):
    """t -> t + a on a Laurent polynomial with a principal part and a != 0."""


class RepeatedExponentError(WronskError, ValueError):
    pass


class NotPolynomialError(WronskError, ValueError):
    pass


class LinearlyDependentError(WronskError, ValueError):
    """The input family is linearly dependent over Q."""


class TwoConstantsError(LinearlyDependentError):
    """Two reduced elements are constants, which certifies dependence."""


class NotConstantWronskianError(WronskError):
    """The Wronskian is not a nonzero constant; ``klass`` holds the classification."""

    def __init__(self, klass, message=None):
        self.klass = klass
        super().__init__(message or f"Wronskian is not a nonzero constant: {klass}")


class BasisExpressionError(WronskError, AssertionError):
    """Internal consistency violation while expressing a family over a monomial basis."""


class SingularMatrixError(WronskError, ValueError):
    pass


class ExponentSumError(WronskError, ValueError):
    pass


class ZeroWronskianError(WronskError, ValueError):
    pass


class HodographVanishesError(WronskError, ValueError):
    pass


class ZeroNumeratorError(WronskError, ValueError):
    pass


class NoPolesError(WronskError, ValueError):
    pass


class NotEnoughPolesError(WronskError, ValueError):
    pass


class InvalidConfigError(WronskError, ValueError):
    pass
