"""Exception hierarchy shared by every module."""


class RelaxedGreenError(Exception):
    """Base class for all library errors."""


class DomainError(RelaxedGreenError, ValueError):
    """Argument outside the mathematical domain of a function."""


class DegenerateInputError(RelaxedGreenError, ValueError):
    """Parameter combination that makes a derived quantity undefined."""


class InadmissibleParameterError(RelaxedGreenError, ValueError):
    """Material parameters violate positive definiteness or ellipticity."""


class SingularPointError(RelaxedGreenError, ValueError):
    """Field requested at (or numerically at) the load point."""


class ContractError(RelaxedGreenError, ValueError):
    """Model, load and parameter combination not supported."""


class StencilError(RelaxedGreenError, ArithmeticError):
    """Non-finite value met inside a finite-difference stencil."""


class OracleFailure(RelaxedGreenError, RuntimeError):
    """A numerical oracle did not converge."""
