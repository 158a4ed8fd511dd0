"""The substitution acting on the orbits of an exchange when one part grows by the
absolute value of its translation parameter."""
from typing import List
from typing import Sequence
from typing import Tuple

from symdiet.composition import check_index
from symdiet.composition import Composition

__all__ = ["psi_letter", "psi_apply", "enlarge"]


def _threshold(c: Composition, t: int) -> Tuple[int, int]:
    """Return the threshold k and the translation parameter s_t."""
    before = sum(c.parts[: t - 1])
    part = c.parts[t - 1]
    s = c.n - 2 * before - part
    k = before + part if s >= 0 else before - abs(s)
    return k, s


def psi_letter(c: Composition, t: int, x: int) -> Tuple[int, ...]:
    """Return the word substituted for the letter x.

    Letters up to the threshold k are unchanged, the letters of the window
    (k, k + |s_t|] become the two letters x, x + |s_t| (in the reverse order when
    s_t < 0) and the letters above the window are shifted by |s_t|.

    Example:
        >>> from symdiet.composition import make_composition
        >>> c = make_composition((5, 1, 2))
        >>> [psi_letter(c, 2, x) for x in (1, 3, 7)]
        [(1,), (6, 3), (10,)]
    """
    check_index(t, 1, c.r)
    k, s = _threshold(c, t)
    return _substitute(x, k, s)


def _substitute(x, k, s):
    abs_s = abs(s)
    if x <= k:
        return (x,)
    if x <= k + abs_s:
        return (x, x + abs_s) if s > 0 else (x + abs_s, x)
    return (x + abs_s,)


def psi_apply(
    c: Composition, t: int, cycles: Sequence[Sequence[int]]
) -> List[Tuple[int, ...]]:
    """Apply the substitution letter by letter inside every cycle of the exchange of
    c. The result are the cycles of the exchange of :py:func:`enlarge` (c, t), read
    as circular words.

    Args:
        c: A Composition object.
        int t: The 1-based index of the part to enlarge.
        cycles: The cycles of the exchange of c.

    Example:
        >>> from symdiet.composition import make_composition
        >>> from symdiet.permutation import format_cycles
        >>> c = make_composition((5, 1, 2))
        >>> format_cycles(psi_apply(c, 2, [(1, 4, 7), (2, 5, 8), (3, 6)]))
        '(1,7,4,10)(2,8,5,11)(6,3,9)'
    """
    check_index(t, 1, c.r)
    k, s = _threshold(c, t)
    if s == 0:
        return [tuple(cycle) for cycle in cycles]
    return [
        tuple(letter for x in cycle for letter in _substitute(x, k, s))
        for cycle in cycles
    ]


def enlarge(c: Composition, t: int) -> Composition:
    """Return c with the part :math:`\\lambda_t` replaced by
    :math:`\\lambda_t + |s_t|`.

    Example:
        >>> from symdiet.composition import make_composition
        >>> print(enlarge(make_composition((5, 1, 2)), 2))
        5,4,2
    """
    check_index(t, 1, c.r)
    _, s = _threshold(c, t)
    return c.replace(t, c.parts[t - 1] + abs(s))
