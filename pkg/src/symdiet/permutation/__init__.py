"""The Permutation and CyclicType classes, and the construction of the symmetric
discrete interval exchange of a composition."""
import re
from collections import Counter
from typing import List
from typing import Sequence
from typing import Tuple

import numpy as np
from symdiet.composition import Composition
from symdiet.composition import translations
from symdiet.utils.error import OutOfRangeError
from symdiet.utils.error import ParseError
from symdiet.utils.parseable import Parseable

__cycle_regex__ = re.compile(r"\(([^()]*)\)")


class CyclicType(Parseable):
    r"""The cyclic type of a permutation, the integer partition
    :math:`\ell_1^{\alpha_1} \dots \ell_k^{\alpha_k}` with
    :math:`\ell_1 > \dots > \ell_k`, where :math:`\alpha_i` is the number of orbits of
    length :math:`\ell_i`.

    Arguments:
        tuple pairs: A tuple of (length, multiplicity) pairs, lengths strictly
            decreasing.

    Example:
        >>> print(CyclicType.from_lengths([8, 3, 3]))
        8^1 3^2
    """

    pairs: Tuple[Tuple[int, int], ...]

    def __init__(self, pairs: Sequence = (), **kwargs):
        pairs = tuple((int(length), int(count)) for length, count in pairs)
        if any(length < 1 or count < 1 for length, count in pairs):
            raise ValueError("Cycle lengths and multiplicities must be positive.")
        lengths = [length for length, _ in pairs]
        if any(a <= b for a, b in zip(lengths, lengths[1:])):
            raise ValueError("Cycle lengths must be strictly decreasing.")
        super().__init__(pairs=pairs, **kwargs)

    @classmethod
    def from_lengths(cls, lengths: Sequence[int]):
        """Group a multiset of cycle lengths into a cyclic type."""
        counts = Counter(lengths)
        return cls(pairs=sorted(counts.items(), reverse=True))

    @classmethod
    def parse(cls, py_dict):
        if isinstance(py_dict, dict):
            return cls(**py_dict)
        return cls(pairs=py_dict)

    @property
    def weight(self) -> int:
        """The integer partitioned, i.e. the sum of all the cycle lengths."""
        return sum(length * count for length, count in self.pairs)

    @property
    def k(self) -> int:
        """The number of distinct cycle lengths."""
        return len(self.pairs)

    @property
    def orbits(self) -> int:
        """The total number of cycles."""
        return sum(count for _, count in self.pairs)

    def lengths(self) -> List[int]:
        """The cycle lengths with repetition, in decreasing order."""
        return [length for length, count in self.pairs for _ in range(count)]

    def json(self, exclude={}) -> list:
        return [[length, count] for length, count in self.pairs]

    def __str__(self):
        return " ".join(f"{length}^{count}" for length, count in self.pairs)

    def __repr__(self):
        return f"CyclicType({self})"


class Permutation(Parseable):
    """A bijection T of the integer interval [1, n], with its cycle decomposition in
    canonical form: every cycle starts at its minimum element and the cycles are sorted
    by their minimum element.

    Arguments:
        tuple images: The images T(1), ..., T(n).
        tuple cycles: The canonical cycle decomposition.

    Use :py:meth:`from_images` to create a Permutation, the cycles are computed.

    Example:
        >>> p = Permutation.from_images([4, 5, 1, 3, 2, 6])
        >>> print(p)
        (1,4,3)(2,5)(6)
        >>> p(1)
        4
    """

    images: Tuple[int, ...]
    cycles: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_images(cls, images: Sequence[int]):
        """Create a Permutation from the list of images T(1), ..., T(n).

        Args:
            images: A sequence of integers, a rearrangement of 1, ..., n.
        """
        images = tuple(int(x) for x in images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"The images are not a bijection of [1, {n}].")
        return cls.construct(images=images, cycles=tuple(_walk_cycles(images)))

    @classmethod
    def identity(cls, n: int):
        """The identity permutation of [1, n]."""
        return cls.from_images(range(1, n + 1))

    @classmethod
    def parse(cls, py_dict: dict):
        return cls.from_images(py_dict["images"])

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise OutOfRangeError(x, self.n)
        return self.images[x - 1]

    def orbit(self, x: int) -> Tuple[int, ...]:
        """The cycle holding the element x, in canonical form."""
        if not 1 <= x <= self.n:
            raise OutOfRangeError(x, self.n)
        return next(cycle for cycle in self.cycles if x in cycle)

    def compose(self, other):
        """Return the composition ``self ∘ other``, that is x ↦ self(other(x)).

        Example:
            >>> p = Permutation.from_images([2, 3, 1])
            >>> p.compose(p.inverse()).is_identity
            True
        """
        if other.n != self.n:
            raise ValueError("Only permutations of the same size can be composed.")
        return Permutation.from_images([self.images[x - 1] for x in other.images])

    def inverse(self):
        """Return the inverse permutation."""
        inverse = [0] * self.n
        for x, image in enumerate(self.images, start=1):
            inverse[image - 1] = x
        return Permutation.from_images(inverse)

    def json(self, exclude={}) -> dict:
        return {"images": list(self.images), "cycles": [list(c) for c in self.cycles]}

    def __str__(self):
        return format_cycles(self.cycles)

    def __repr__(self):
        return f"Permutation({self})"


def _walk_cycles(images: Sequence[int]):
    """Yield the cycles of a permutation given by its image list. The walk starts
    from the smallest unvisited element, so the cycles come out canonical."""
    visited = np.zeros(len(images) + 1, dtype=bool)
    for start in range(1, len(images) + 1):
        if visited[start]:
            continue
        cycle = []
        x = start
        while not visited[x]:
            visited[x] = True
            cycle.append(x)
            x = images[x - 1]
        yield tuple(cycle)


def diet_images(c: Composition) -> np.ndarray:
    """Return the images of the symmetric discrete interval exchange of c as an array,
    where the element x of the block :math:`B_i` is sent to :math:`x + s_i`.

    Example:
        >>> diet_images(Composition(parts=(5, 1, 2))).tolist()
        [4, 5, 6, 7, 8, 3, 1, 2]
    """
    parts = np.asarray(c.parts, dtype=np.int64)
    shift = np.asarray(translations(c.parts), dtype=np.int64)
    return np.arange(1, c.n + 1, dtype=np.int64) + np.repeat(shift, parts)


def build_diet(c: Composition) -> Permutation:
    r"""Return the symmetric discrete interval exchange :math:`T_\lambda` of the
    composition, the permutation of [1, n] exchanging the blocks
    :math:`B_1, \dots, B_r` in reverse order.

    Args:
        c: A Composition object.

    Returns:
        A Permutation object.

    Example:
        >>> from symdiet.composition import make_composition
        >>> print(build_diet(make_composition((3, 5, 4, 2))))
        (1,12,6,9,3,14,2,13)(4,7,10)(5,8,11)
        >>> print(build_diet(make_composition((5, 1, 2))))
        (1,4,7)(2,5,8)(3,6)
    """
    return Permutation.from_images(diet_images(c).tolist())


def orbit_decomposition(p: Permutation) -> List[Tuple[int, ...]]:
    """Return the canonical cycle list of the permutation; every cycle is rotated to
    start at its minimum and the cycles are ordered by their minimum.

    Example:
        >>> len(orbit_decomposition(Permutation.identity(3)))
        3
    """
    return list(p.cycles)


def cyclic_type(p: Permutation) -> CyclicType:
    """Return the cyclic type of the permutation.

    Example:
        >>> from symdiet.composition import make_composition
        >>> print(cyclic_type(build_diet(make_composition((9, 1, 4)))))
        3^4 2^1
    """
    return CyclicType.from_lengths([len(cycle) for cycle in p.cycles])


# ============================== Cycles as circular words ==============================


def canonical_cycles(cycles: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Normalize a list of cycles, read as circular words, to the canonical form.
    Two lists of circular words are equal up to rotation of every word if and only if
    their canonical forms are equal.

    Example:
        >>> canonical_cycles([(6, 3, 9), (2, 8, 5, 11)])
        [(2, 8, 5, 11), (3, 9, 6)]
    """
    rotated = []
    for cycle in cycles:
        cycle = tuple(cycle)
        i = cycle.index(min(cycle))
        rotated.append(cycle[i:] + cycle[:i])
    return sorted(rotated)


def format_cycles(cycles: Sequence[Sequence[int]]) -> str:
    """Text format of a list of cycles, e.g. ``(1,4,7)(2,5,8)(3,6)``."""
    return "".join("(" + ",".join(str(x) for x in cycle) + ")" for cycle in cycles)


def parse_cycles(text: str) -> List[Tuple[int, ...]]:
    """Parse the text format of a list of cycles.

    Example:
        >>> parse_cycles("(1,4,7)(3,6)")
        [(1, 4, 7), (3, 6)]
    """
    text = text.strip()
    cycles = []
    end = 0
    for position, match in enumerate(__cycle_regex__.finditer(text), start=1):
        if match.start() != end:
            raise ParseError(text, position)
        try:
            cycles.append(tuple(int(x) for x in match.group(1).split(",")))
        except ValueError:
            raise ParseError(text, position)
        end = match.end()
    if end != len(text) or not cycles:
        raise ParseError(text, len(cycles) + 1)
    return cycles
