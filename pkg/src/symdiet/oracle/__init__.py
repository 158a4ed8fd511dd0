"""Brute force ground truth: the cycles of an exchange by walking its image table, and
exhaustive streams of compositions. Nothing here uses the orbit counting recursion."""
from math import comb
from typing import Iterator
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from symdiet.composition import Composition
from symdiet.permutation import CyclicType

__all__ = [
    "image_table",
    "brute_cycles",
    "brute_cycle_lengths",
    "brute_orbit_count",
    "brute_cyclic_type",
    "CompositionStream",
    "iter_compositions",
    "all_compositions",
    "all_circular",
]


def image_table(parts: Sequence[int]) -> List[int]:
    """Return the list whose entry x is T(x), for x in [1, n]; entry 0 is unused.
    Every element of the block of a part is translated by the total of the later
    parts minus the total of the earlier parts.

    Example:
        >>> image_table((5, 1, 2))[1:]
        [4, 5, 6, 7, 8, 3, 1, 2]
    """
    n = sum(parts)
    table = [0]
    before = 0
    for part in parts:
        after = n - before - part
        shift = after - before
        for x in range(before + 1, before + part + 1):
            table.append(x + shift)
        before += part
    assert sorted(table[1:]) == list(range(1, n + 1)), "not a bijection"
    return table


def _walk(parts: Sequence[int]) -> List[List[int]]:
    table = image_table(parts)
    visited = [False] * len(table)
    cycles = []
    for start in range(1, len(table)):
        if visited[start]:
            continue
        cycle = []
        x = start
        while not visited[x]:
            visited[x] = True
            cycle.append(x)
            x = table[x]
        cycles.append(cycle)
    return cycles


def brute_cycles(c: Composition) -> List[Tuple[int, ...]]:
    """Return the cycles of the exchange of c, each starting at its minimum, ordered
    by their minimum.

    Example:
        >>> from symdiet.composition import make_composition
        >>> brute_cycles(make_composition((1, 1, 1)))
        [(1, 3), (2,)]
    """
    return [tuple(cycle) for cycle in _walk(c.parts)]


def brute_cycle_lengths(parts: Sequence[int]) -> List[int]:
    """Return the cycle lengths of the exchange of a tuple of parts."""
    return [len(cycle) for cycle in _walk(parts)]


def brute_orbit_count(c: Composition) -> int:
    """Return the number of orbits of the exchange of c, by direct traversal.

    Example:
        >>> from symdiet.composition import make_composition
        >>> brute_orbit_count(make_composition((3, 5, 4, 2)))
        3
    """
    return len(_walk(c.parts))


def brute_cyclic_type(c: Composition) -> CyclicType:
    """Return the cyclic type of the exchange of c, by direct traversal."""
    return CyclicType.from_lengths(brute_cycle_lengths(c.parts))


# ===================================== streams ========================================


def iter_compositions(
    n: int, length: Optional[int] = None
) -> Iterator[Tuple[int, ...]]:
    """Yield the part tuples of every composition of n, in lexicographic order."""
    if length == 0 or n == 0:
        if length in (0, None) and n == 0:
            yield ()
        return
    rest_length = None if length is None else length - 1
    largest = n if length is None else n - length + 1
    for first in range(1, largest + 1):
        for rest in iter_compositions(n - first, rest_length):
            yield (first,) + rest


class CompositionStream:
    """A stream of compositions in lexicographic order, of the sum n, or of every sum
    from 1 to max_sum in increasing order, optionally of a fixed length.

    Arguments:
        int n: The sum of the compositions.
        int max_sum: The sum bound, used when n is None.
        int length: The fixed number of parts. Default is None, any length.

    Example:
        >>> stream = CompositionStream(n=3)
        >>> len(stream)
        4
        >>> [str(c) for c in stream]
        ['1,1,1', '1,2', '2,1', '3']
    """

    def __init__(
        self,
        n: Optional[int] = None,
        max_sum: Optional[int] = None,
        length: Optional[int] = None,
    ):
        if (n is None) == (max_sum is None):
            raise ValueError("Provide exactly one of the sum n or the sum bound.")
        if length is not None and length < 1:
            raise ValueError(f"The length must be positive, found {length}.")
        bound = n if n is not None else max_sum
        if bound < 1:
            raise ValueError(f"The sum must be positive, found {bound}.")
        self.n = n
        self.max_sum = max_sum
        self.length = length

    @property
    def sums(self) -> range:
        if self.n is not None:
            return range(self.n, self.n + 1)
        return range(1, self.max_sum + 1)

    def iter_parts(self) -> Iterator[Tuple[int, ...]]:
        """Iterate over the part tuples, without building Composition objects."""
        for n in self.sums:
            yield from iter_compositions(n, self.length)

    def __iter__(self) -> Iterator[Composition]:
        for parts in self.iter_parts():
            yield Composition.trusted(parts)

    def __len__(self):
        if self.length is None:
            return sum(2 ** (n - 1) for n in self.sums)
        return sum(comb(n - 1, self.length - 1) for n in self.sums)


def all_compositions(n: int, length: Optional[int] = None) -> CompositionStream:
    """Return the stream of every composition of n, in lexicographic order.

    Example:
        >>> len(all_compositions(18))
        131072
    """
    return CompositionStream(n=n, length=length)


def all_circular(n_max: int) -> List[Composition]:
    """Return every composition of a sum in [2, n_max] whose exchange has a single
    orbit, by sum, then in lexicographic order.

    Example:
        >>> [str(c) for c in all_circular(3)]
        ['1,1', '1,2', '2,1']
    """
    if n_max < 2:
        raise ValueError(f"The sum bound must be at least 2, found {n_max}.")
    return [
        Composition.trusted(parts)
        for n in range(2, n_max + 1)
        for parts in iter_compositions(n, None)
        if len(_walk(parts)) == 1
    ]
