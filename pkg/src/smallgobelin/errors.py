"""Exception hierarchy shared by every module of the package."""


class GobelinError(Exception):
    """Base class for all errors raised by smallgobelin."""


class InputError(GobelinError, ValueError):
    """Malformed or inconsistent input (dimension mismatch, mixed fields, bad syntax)."""


class ParseError(InputError):
    """Syntax error in a polynomial expression or scenario file.

    ``position`` is the 0-based character offset inside the offending text;
    ``line`` and ``column`` are 1-based and only filled in for scenario files.
    """

    def __init__(self, message, position=None, line=None, column=None):
        self.message = message
        self.position = position
        self.line = line
        self.column = column
        super().__init__(self._render())

    def _render(self):
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.column is not None:
            where.append(f"column {self.column}")
        elif self.position is not None:
            where.append(f"position {self.position}")
        if where:
            return f"{self.message} ({', '.join(where)})"
        return self.message


class NoSolution(ArithmeticError, GobelinError):
    """A linear system has no solution."""


class NotZeroDimensional(GobelinError):
    """The ideal of a quotient presentation has infinitely many standard monomials."""


class NotGorenstein(GobelinError):
    """The algebra is not a local Gorenstein algebra."""


class NotLocal(NotGorenstein):
    """The algebra has more than one maximal ideal."""


class UnitElement(GobelinError):
    """An element that must be a non-unit is invertible."""


class SyzygyViolation(GobelinError):
    """``c_i1 f1 + c_i2 f2`` does not vanish in the algebra."""

    def __init__(self, row, message=None):
        self.row = row
        super().__init__(message or f"syzygy row {row} does not vanish: c{row}1*f1 + c{row}2*f2 != 0")


class ComplexBroken(GobelinError):
    """Two consecutive differentials do not compose to zero."""


class NotACycle(GobelinError):
    """A vector is not a cycle of the subquotient it was tested against."""


class NotChainCompatible(GobelinError):
    """A linear map does not send cycles to cycles and boundaries to boundaries."""


class NotStabilized(GobelinError):
    """A flag of ideals did not stabilize within the allowed number of steps."""
