
class SymdietError(ValueError):
    """Base class of all the exceptions raised by symdiet."""


class EmptyCompositionError(SymdietError):
    """Exception raised when a composition is created from an empty sequence.

    Attributes:
        message: explanation of the error.
    """

    def __init__(self, message=None):
        message = message or "A composition requires at least one part, none found."
        super().__init__(message)


class NonPositivePartError(SymdietError):
    """Exception raised when a composition part is zero or negative.

    Attributes:
        index: 1-based position of the offending part.
        value: the offending part.
        message: explanation of the error.
    """

    def __init__(self, index, value, message=None):
        self.index = index
        self.value = value
        message = message or (
            f"Composition parts must be positive integers, found {value} at "
            f"position {index}."
        )
        super().__init__(message)


class InvalidPartTypeError(SymdietError, TypeError):
    """Exception raised when a composition part is not an integer.

    Attributes:
        index: 1-based position of the offending part.
        value: the offending part.
        message: explanation of the error.
    """

    def __init__(self, index, value, message=None):
        self.index = index
        self.value = value
        message = message or (
            "Composition parts must be integers, found "
            f"{value.__class__.__name__} at position {index}."
        )
        super().__init__(message)


class CompositionOverflowError(SymdietError, OverflowError):
    """Exception raised when the sum of the parts leaves the unsigned 64-bit range.

    Attributes:
        total: the sum that overflowed.
        message: explanation of the error.
    """

    def __init__(self, total, message=None):
        self.total = total
        message = message or (
            f"The composition sum {total} exceeds the unsigned 64-bit limit "
            f"{2**64 - 1}."
        )
        super().__init__(message)


class IndexOutOfRangeError(SymdietError, IndexError):
    """Exception raised when a part index is outside the valid range.

    Attributes:
        index: the requested index.
        low: smallest valid index.
        high: largest valid index.
        message: explanation of the error.
    """

    def __init__(self, index, low, high, message=None):
        self.index = index
        message = message or (
            f"Index {index} is out of range, expecting a value in [{low}, {high}]."
        )
        super().__init__(message)


class NotCircularError(SymdietError):
    """Exception raised when a tree operation receives a composition whose symmetric
    discrete interval exchange is not minimal.

    Attributes:
        composition: text form of the composition.
        orbits: number of orbits of the exchange.
        message: explanation of the error.
    """

    def __init__(self, composition, orbits, message=None):
        self.composition = composition
        self.orbits = orbits
        message = message or (
            f"The composition ({composition}) is not a node of the tree of circular "
            f"compositions, its exchange has {orbits} orbit(s)."
        )
        super().__init__(message)


class NoParentError(SymdietError):
    """Exception raised when the parent of the root composition (1,1) is requested.

    Attributes:
        message: explanation of the error.
    """

    def __init__(self, message=None):
        message = message or "The root composition (1,1) has no parent."
        super().__init__(message)


class OutOfRangeError(SymdietError):
    """Exception raised when an element is not in the integer interval [1, n].

    Attributes:
        x: the element.
        n: the size of the interval.
        message: explanation of the error.
    """

    def __init__(self, x, n, message=None):
        self.x = x
        self.n = n
        message = message or f"The element {x} is not in the interval [1, {n}]."
        super().__init__(message)


class ParseError(SymdietError):
    """Exception raised when a composition or cycle text cannot be parsed.

    Attributes:
        text: the text being parsed.
        position: 1-based token position where parsing failed.
        message: explanation of the error.
    """

    def __init__(self, text, position, message=None):
        self.text = text
        self.position = position
        message = message or f"Unable to parse '{text}' at token {position}."
        super().__init__(message)


class UsageError(SymdietError):
    """Exception raised for an invalid combination of command line arguments.

    Attributes:
        message: explanation of the error.
    """

    def __init__(self, message=None):
        message = message or "Invalid command line arguments."
        super().__init__(message)


class ConjectureBoundWarning(UserWarning):
    """Warning issued when a sweep records compositions exceeding the conjectured
    bound on the number of distinct cycle lengths."""
