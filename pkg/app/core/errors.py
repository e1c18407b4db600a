# filename: app/core/errors.py
from typing import Optional, Tuple


class SemigroupError(ValueError):
    """Base class for every domain error raised by the toolkit."""


class TableParseError(SemigroupError):
    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class NotAssociative(SemigroupError):
    def __init__(self, a: int, b: int, c: int, left: int, right: int):
        self.witness: Tuple[int, int, int] = (a, b, c)
        super().__init__(
            f"Table is not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}"
        )


class EntryOutOfRange(SemigroupError):
    def __init__(self, row: int, column: int, value: int, order: int):
        self.row = row
        self.column = column
        self.value = value
        super().__init__(
            f"Entry {value} at row {row}, column {column} is outside [0, {order})"
        )


class BadIdentityHint(SemigroupError):
    def __init__(self, hint: int):
        self.hint = hint
        super().__init__(f"Element {hint} is not a two-sided identity")


class NotAGroup(SemigroupError):
    pass


class NotAMonoid(SemigroupError):
    pass


class TooManyVariables(SemigroupError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"Equation uses {count} variables; at most {cap} are allowed")


class OrderTooLarge(SemigroupError):
    def __init__(self, order: int, cap: int, what: str):
        self.order = order
        self.cap = cap
        super().__init__(f"{what} is limited to order {cap}; got order {order}")


class StructureVerificationFailed(SemigroupError):
    pass


class ElementOutsideGroup(SemigroupError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"Element {element} does not belong to the group")


class NotInLattice(SemigroupError):
    def __init__(self, column: int):
        self.column = column
        super().__init__(f"Column {column} is not in the integer span of the lattice basis")


class NotAComplex(SemigroupError):
    pass


class ResourceCapExceeded(SemigroupError):
    def __init__(self, resource: str, value: int, cap: int):
        self.resource = resource
        self.value = value
        self.cap = cap
        super().__init__(f"Resource cap exceeded: {resource} reached {value} (cap {cap})")


class DimensionCapExceeded(SemigroupError):
    def __init__(self, columns: int, cap: int):
        self.columns = columns
        self.cap = cap
        super().__init__(f"Bar complex would need {columns} columns (cap {cap})")


class OracleMismatch(SemigroupError):
    def __init__(self, dimension: int, resolution: str, nerve: str):
        self.dimension = dimension
        super().__init__(
            f"Resolution and nerve disagree in dimension {dimension}: {resolution} vs {nerve}"
        )
