"""Integer compositions and the data of their symmetric discrete interval exchange."""
import re
from bisect import bisect_left
from itertools import accumulate
from numbers import Integral
from typing import List
from typing import Sequence
from typing import Tuple

from pydantic import PrivateAttr
from symdiet.utils.error import CompositionOverflowError
from symdiet.utils.error import EmptyCompositionError
from symdiet.utils.error import IndexOutOfRangeError
from symdiet.utils.error import InvalidPartTypeError
from symdiet.utils.error import NonPositivePartError
from symdiet.utils.error import ParseError
from symdiet.utils.parseable import Parseable

MAX_SUM = 2**64 - 1

__token_regex__ = re.compile(r"^[+-]?\d+$")


def check_parts(parts: Sequence[int]) -> Tuple[int, ...]:
    """Validate a sequence of composition parts and return it as a tuple of python
    integers.

    Args:
        parts: A sequence of positive integers.

    Example:
        >>> check_parts([3, 5, 4, 2])
        (3, 5, 4, 2)
    """
    parts = tuple(parts)
    if len(parts) == 0:
        raise EmptyCompositionError()

    checked = []
    for i, part in enumerate(parts, start=1):
        if isinstance(part, bool) or not isinstance(part, Integral):
            raise InvalidPartTypeError(i, part)
        if part <= 0:
            raise NonPositivePartError(i, part)
        checked.append(int(part))

    total = sum(checked)
    if total > MAX_SUM:
        raise CompositionOverflowError(total)
    return tuple(checked)


class Composition(Parseable):
    r"""A composition :math:`\lambda = (\lambda_1, \dots, \lambda_r)` of
    :math:`n = \sum_i \lambda_i`, an ordered sequence of positive integer parts.

    Arguments:
        tuple parts: The positive integer parts. The sum of the parts must fit in the
            unsigned 64-bit range.

    Example:
        >>> c = Composition(parts=[3, 5, 4, 2])
        >>> c.n, c.r
        (14, 4)
        >>> print(c)
        3,5,4,2
    """

    parts: Tuple[int, ...]
    _n: int = PrivateAttr(default=None)

    def __init__(self, parts: Sequence[int] = (), **kwargs):
        super().__init__(parts=check_parts(parts), **kwargs)
        self._n = sum(self.parts)

    @classmethod
    def trusted(cls, parts: Sequence[int]):
        """Create a Composition from parts known to be valid, skipping validation.
        Used on the hot paths of exhaustive sweeps."""
        return cls.construct(parts=tuple(parts))

    @classmethod
    def parse(cls, py_dict):
        """Parse a dictionary, or a plain list of parts, to a Composition."""
        if isinstance(py_dict, dict):
            return cls(**py_dict)
        return cls(parts=py_dict)

    @property
    def n(self) -> int:
        """The sum of the parts, computed once."""
        if self._n is None:
            self._n = sum(self.parts)
        return self._n

    @property
    def r(self) -> int:
        """The number of parts."""
        return len(self.parts)

    def part(self, i: int) -> int:
        """Return the part :math:`\\lambda_i` at the 1-based index i."""
        check_index(i, 1, self.r)
        return self.parts[i - 1]

    def order_key(self) -> tuple:
        """Key of the order in which shorter compositions come first and compositions
        of equal length compare lexicographically."""
        return (self.r, self.parts)

    def replace(self, t: int, value: int):
        """Return a copy with the part at the 1-based index t replaced by value.

        Example:
            >>> print(Composition(parts=[3, 5, 4, 2]).replace(2, 2))
            3,2,4,2
        """
        check_index(t, 1, self.r)
        return Composition(parts=self.parts[: t - 1] + (value,) + self.parts[t:])

    def remove(self, t: int):
        """Return a copy without the part at the 1-based index t.

        Example:
            >>> print(Composition(parts=[3, 2, 1, 2]).remove(2))
            3,1,2
        """
        check_index(t, 1, self.r)
        return Composition(parts=self.parts[: t - 1] + self.parts[t:])

    def insert(self, t: int, value: int):
        """Return a copy with value inserted after the first t parts, t in [0, r].

        Example:
            >>> print(Composition(parts=[1, 1, 2]).insert(3, 4))
            1,1,2,4
        """
        check_index(t, 0, self.r)
        return Composition(parts=self.parts[:t] + (value,) + self.parts[t:])

    def json(self, exclude={}) -> list:
        """Serialize the composition to the list of its parts.

        Example:
            >>> Composition(parts=(1, 1, 2)).json()
            [1, 1, 2]
        """
        return list(self.parts)

    def __str__(self):
        return format_composition(self)

    def __repr__(self):
        return f"Composition({format_composition(self)})"


def check_index(index, low, high):
    if isinstance(index, bool) or not isinstance(index, Integral):
        raise IndexOutOfRangeError(index, low, high)
    if not low <= index <= high:
        raise IndexOutOfRangeError(index, low, high)


def make_composition(parts: Sequence[int]) -> Composition:
    """Create a validated Composition from a sequence of positive integers.

    Args:
        parts: A sequence of positive integers.

    Returns:
        A Composition object.

    Example:
        >>> c = make_composition((3, 5, 4, 2))
        >>> c.n, c.r
        (14, 4)
        >>> make_composition((1, 0, 2))
        Traceback (most recent call last):
        ...
        symdiet.utils.error.NonPositivePartError: Composition parts must be positive \
integers, found 0 at position 2.
    """
    return Composition(parts=parts)


def parse_composition(text: str) -> Composition:
    """Parse the comma-separated text format of a composition, e.g. ``3,5,4,2``.

    Args:
        str text: Comma-separated decimal integers, spaces are allowed.

    Example:
        >>> parse_composition("3, 5,4,2").parts
        (3, 5, 4, 2)
        >>> parse_composition("3,x")
        Traceback (most recent call last):
        ...
        symdiet.utils.error.ParseError: Unable to parse '3,x' at token 2.
    """
    tokens = text.strip().split(",")
    parts = []
    for position, token in enumerate(tokens, start=1):
        token = token.strip()
        if __token_regex__.match(token) is None:
            raise ParseError(text, position)
        parts.append(int(token))
    return make_composition(parts)


def format_composition(c: Composition) -> str:
    """Comma-separated text format of a composition."""
    return ",".join(str(part) for part in c.parts)


def reverse(c: Composition) -> Composition:
    """Return the composition with parts in reverse order. The exchange of the
    reversed composition is the inverse of the exchange of c.

    Example:
        >>> print(reverse(make_composition((3, 5, 4, 2))))
        2,4,5,3
    """
    return Composition.trusted(c.parts[::-1])


# ============================== Translation parameters ==============================


def translations(parts: Sequence[int]) -> List[int]:
    r"""Return the translation parameters
    :math:`s_i = \sum_{j>i} \lambda_j - \sum_{j<i} \lambda_j` of a tuple of parts.
    Python integers are exact, so no wraparound occurs for any valid composition.

    Example:
        >>> translations((3, 5, 4, 2))
        [11, 3, -6, -12]
    """
    n = sum(parts)
    before = 0
    result = []
    for part in parts:
        result.append(n - 2 * before - part)
        before += part
    return result


class TranslationVector(Parseable):
    """The translation vector :math:`(s_1, \\dots, s_r)` of a composition; the block
    :math:`B_i` is translated by :math:`s_i`.

    Arguments:
        tuple entries: The translation parameters, a strictly decreasing sequence.
    """

    entries: Tuple[int, ...]

    def json(self, exclude={}) -> list:
        return list(self.entries)

    def __str__(self):
        return "(" + ",".join(str(s) for s in self.entries) + ")"


def translation_vector(c: Composition) -> TranslationVector:
    """Return the translation vector of the composition.

    Example:
        >>> print(translation_vector(make_composition((3, 5, 4, 2))))
        (11,3,-6,-12)
        >>> print(translation_vector(make_composition((1, 1, 2, 4))))
        (7,5,2,-4)
    """
    entries = translations(c.parts)
    assert all(a > b for a, b in zip(entries, entries[1:])), "not strictly decreasing"
    assert entries[0] == c.n - c.parts[0] and entries[-1] == c.parts[-1] - c.n
    return TranslationVector.construct(entries=tuple(entries))


# ================================= Interval blocks ==================================


class IntervalBlock(Parseable):
    """The integer interval :math:`B_i = [lo, hi]` of the i-th part of a composition.

    Arguments:
        int index: 1-based index of the block.
        int lo: first element of the block.
        int hi: last element of the block.
    """

    index: int
    lo: int
    hi: int

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, x):
        return self.lo <= x <= self.hi


def interval_blocks(c: Composition) -> List[IntervalBlock]:
    """Return the blocks :math:`B_1, \\dots, B_r` partitioning [1, n] in order.

    Example:
        >>> [(b.lo, b.hi) for b in interval_blocks(make_composition((3, 5, 4, 2)))]
        [(1, 3), (4, 8), (9, 12), (13, 14)]
    """
    ends = list(accumulate(c.parts))
    return [
        IntervalBlock(index=i, lo=end - part + 1, hi=end)
        for i, (part, end) in enumerate(zip(c.parts, ends), start=1)
    ]


def block_of(c: Composition, x: int) -> int:
    """Return the 1-based index i of the block :math:`B_i` holding the element x.

    Example:
        >>> block_of(make_composition((3, 5, 4, 2)), 9)
        3
    """
    check_index(x, 1, c.n)
    return bisect_left(list(accumulate(c.parts)), x) + 1
