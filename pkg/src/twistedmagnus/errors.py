"""Exception types shared across the package."""


class WorkbenchError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(WorkbenchError):
    """Bad ring label, truncation degree, or other configuration input."""


class MixedContext(WorkbenchError):
    """Operands live over different rings, truncations, or coordinate tags."""


class NotAUnit(WorkbenchError):
    """Inversion of a non-invertible coefficient was requested."""


class RingUnsupported(WorkbenchError):
    """Operation needs denominators (a Q-algebra) but the ring has none."""


class BadConstantTerm(WorkbenchError):
    """Series operation requires a specific constant term (0 or a unit)."""


class NotInW(WorkbenchError):
    """Series is not supported on words that are empty or end in the second letter."""


class NotStratified(WorkbenchError):
    """Group word is not an alternating product X0^a1 X1^b1 ... X0^an X1^bn."""


class DegreeOutOfRange(WorkbenchError):
    """Requested homogeneous degree does not fit the truncation order."""


class HalfNotDefined(WorkbenchError):
    """(lambda - 1)/2 requested but lambda is even 2-adically."""


class IntegralityViolation(WorkbenchError):
    """A p-adic computation produced a coefficient outside Z/p^K.

    Degree-by-degree inversion only ever divides by the unit scalar, so this
    is unreachable unless the invariants of the group law are broken; it is
    kept as a loud failure mode rather than silently returning garbage.
    """


class ParseError(WorkbenchError):
    """Malformed series expression, group word, or Y/X1 polynomial text."""
