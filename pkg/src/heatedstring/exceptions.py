"""Exceptions native to heatedstring."""

import functools
import sys
from typing import Any, Callable, Dict, List, Optional, Type, TypeVar


class HeatedStringError(Exception):
    """Base class for heatedstring exceptions."""


class DimensionError(HeatedStringError, ValueError):
    """Coefficient sequences disagree with the truncation N."""


class DomainError(HeatedStringError, ValueError):
    """A parameter or input lies outside the domain where an operation is defined."""


class AliasingError(DomainError):
    """The collocation grid is too coarse to resolve the retained modes exactly."""


class DivergentSeriesError(DomainError):
    """A weighted series constant does not converge for the requested exponents."""


class StepSizeError(DomainError):
    """A time step is too large for the requested method."""


class ConditioningError(HeatedStringError):
    """Newton polishing of a characteristic root did not reach its residual target."""

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None) -> None:
        """Init."""
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class InstabilityError(HeatedStringError):
    """A time stepper produced a non-finite value."""

    def __init__(self, message: str, mode: Optional[int] = None, t: Optional[float] = None) -> None:
        """Init."""
        super().__init__(message)
        self.mode = mode
        self.t = t


class DivergenceError(HeatedStringError):
    """The Picard iteration stopped contracting or ran out of iterations."""

    def __init__(self, message: str, ratios: Optional[List[float]] = None) -> None:
        """Init."""
        super().__init__(message)
        self.ratios = list(ratios or [])


class ConfigError(HeatedStringError):
    """An experiment configuration file could not be parsed or validated."""

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None) -> None:
        """Init."""
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(f"{where}{message}")


class AcceptanceError(HeatedStringError):
    """A verification command ran to completion but its acceptance criterion failed."""


class NumericalExceptionBase(HeatedStringError):
    """Base class for linear algebra failures re-raised by heatedstring."""

    def __init__(self, exc: Exception, func: Callable[..., Any], *args: Any, **kwargs: Any) -> None:
        """Init."""
        self.error_msg = self._build_error_message(exc, func, *args, **kwargs)
        super().__init__(self.error_msg)

    @staticmethod
    def _build_error_message(
        exc: Exception,
        func: Callable[..., Any],
        *args: Any,  # noqa: ARG004
        **kwargs: Any,  # noqa: ARG004
    ) -> str:
        return f"{type(exc).__name__} raised in {func.__qualname__}: {exc}"


class SingularityError(NumericalExceptionBase):
    """The eigenvector matrix C_n is numerically singular."""

    @staticmethod
    def _build_error_message(
        exc: Exception,
        func: Callable[..., Any],
        *args: Any,
        **kwargs: Any,
    ) -> str:
        n = args[0] if args else kwargs.get("n")
        return f'{type(exc).__name__} raised while inverting C_n for n={n} in "{func.__name__}": {exc}'


class BasisError(NumericalExceptionBase):
    """A projection basis matrix B_n could not be inverted."""

    @staticmethod
    def _build_error_message(
        exc: Exception,
        func: Callable[..., Any],
        *args: Any,  # noqa: ARG004
        **kwargs: Any,  # noqa: ARG004
    ) -> str:
        return f'{type(exc).__name__} raised while building a projection basis in "{func.__name__}": {exc}'


# Because we need to support python version older then 3.10 we don't always have access to ParamSpec,
# so in order to remove code duplication we have to share an untyped function
def _untyped_handle_exceptions(internal_exception_cls, *exception_types_caught):
    def func_decorator(func):
        @functools.wraps(func)
        def argument_decorator(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except exception_types_caught as exc:
                raise internal_exception_cls(exc, func, *args, **kwargs) from exc

        return argument_decorator

    return func_decorator


T = TypeVar("T")
if sys.version_info >= (3, 10):
    from typing import ParamSpec

    P = ParamSpec("P")

    def handle_exceptions(
        internal_exception_cls: Type[NumericalExceptionBase], *exception_types_caught: Type[Exception]
    ) -> Callable[[Callable[P, T]], Callable[P, T]]:
        """Decorator re-raising foreign numerical failures as heatedstring exceptions."""
        return _untyped_handle_exceptions(internal_exception_cls, *exception_types_caught)  # type: ignore

else:

    def handle_exceptions(
        internal_exception_cls: Type[NumericalExceptionBase], *exception_types_caught: Type[Exception]
    ):
        """Decorator re-raising foreign numerical failures as heatedstring exceptions."""
        return _untyped_handle_exceptions(internal_exception_cls, *exception_types_caught)
