"""Exception hierarchy. Every error raised on bad input is a ``ConikaError``."""


class ConikaError(Exception):
    pass


class DimensionError(ConikaError, ValueError):
    """Operand shapes do not fit the bipartite H (x) H structure."""


class NotHermitianError(ConikaError, ValueError):
    pass


class ConvergenceError(ConikaError, ArithmeticError):
    def __init__(self, message, residual):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class InvalidPovmError(ConikaError, ValueError):
    pass


class DesignError(ConikaError, ValueError):
    """Inputs are inconsistent with a conical 2-design."""
