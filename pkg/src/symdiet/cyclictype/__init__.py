r"""Closed forms for the cyclic type of the exchange of compositions of length two and
three, and the sweep over the number of distinct cycle lengths.

For two parts (a, b) the exchange has :math:`g = \gcd(a, b)` orbits, all of length
:math:`(a + b) / g`. For three parts (a, b, c) let :math:`d = \gcd(a + b, b + c)`
and :math:`n = q d + \rho` with :math:`0 \le \rho < d`. The orbit of x is the set of
the elements of [1, n] congruent to x modulo d, so the exchange has d orbits and the
cyclic type :math:`(q+1)^\rho q^{d - \rho}`.
"""
import warnings
from math import gcd
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple

import pandas as pd
from symdiet.composition import Composition
from symdiet.composition import make_composition
from symdiet.oracle import brute_cycle_lengths
from symdiet.permutation import CyclicType
from symdiet.sweep import iter_task
from symdiet.sweep import run_sweep
from symdiet.sweep import sweep_tasks
from symdiet.sweep.config import ConfigSweep
from symdiet.utils.error import ConjectureBoundWarning
from symdiet.utils.error import OutOfRangeError
from symdiet.utils.parseable import Parseable

__all__ = [
    "OrbitFormula3",
    "ConjectureReport",
    "cyclic_type_2",
    "orbit_formula_3",
    "cyclic_type_3",
    "orbit_of_3",
    "cyclic_type_from_formula",
    "distinct_length_count",
    "conjecture_bound",
    "conjecture_sweep",
    "conjecture_table",
]


class OrbitFormula3(Parseable):
    """The arithmetic description of the orbits of the exchange of a composition of
    length three.

    Arguments:
        int d: The gcd of the sums of the adjacent parts, the number of orbits.
        int n: The sum of the parts.
        int quotient: The quotient of n by d.
        int remainder: The remainder of n by d.
    """

    d: int
    n: int
    quotient: int
    remainder: int

    def orbit(self, x: int) -> Set[int]:
        """Return the orbit of x, the elements of [1, n] congruent to x modulo d."""
        if not 1 <= x <= self.n:
            raise OutOfRangeError(x, self.n)
        return set(range((x - 1) % self.d + 1, self.n + 1, self.d))


def cyclic_type_2(a: int, b: int) -> CyclicType:
    """Return the cyclic type of the exchange of the composition (a, b).

    Example:
        >>> print(cyclic_type_2(4, 6))
        5^2
    """
    make_composition((a, b))
    g = gcd(a, b)
    return CyclicType(pairs=[((a + b) // g, g)])


def orbit_formula_3(a: int, b: int, c: int) -> OrbitFormula3:
    """Return the orbit formula of the composition (a, b, c).

    Example:
        >>> formula = orbit_formula_3(9, 1, 4)
        >>> formula.d, formula.quotient, formula.remainder
        (5, 2, 4)
    """
    n = make_composition((a, b, c)).n
    d = gcd(a + b, b + c)
    quotient, remainder = divmod(n, d)
    return OrbitFormula3.construct(d=d, n=n, quotient=quotient, remainder=remainder)


def cyclic_type_3(a: int, b: int, c: int) -> CyclicType:
    """Return the cyclic type of the exchange of the composition (a, b, c).

    Example:
        >>> print(cyclic_type_3(9, 1, 4))
        3^4 2^1
        >>> print(cyclic_type_3(1, 1, 1))
        2^1 1^1
    """
    formula = orbit_formula_3(a, b, c)
    q, rho, d = formula.quotient, formula.remainder, formula.d
    if rho == 0:
        return CyclicType(pairs=[(q, d)])
    return CyclicType(pairs=[(q + 1, rho), (q, d - rho)])


def orbit_of_3(a: int, b: int, c: int, x: int) -> Set[int]:
    """Return the orbit of x under the exchange of the composition (a, b, c).

    Example:
        >>> sorted(orbit_of_3(9, 1, 4, 9))
        [4, 9, 14]
    """
    return orbit_formula_3(a, b, c).orbit(x)


def cyclic_type_from_formula(c: Composition) -> Optional[CyclicType]:
    """Return the cyclic type from the closed forms for one, two and three parts, or
    None for longer compositions, which have no known closed form.

    Example:
        >>> print(cyclic_type_from_formula(make_composition((5,))))
        1^5
        >>> cyclic_type_from_formula(make_composition((1, 2, 3, 4))) is None
        True
    """
    if c.r == 1:
        return CyclicType(pairs=[(1, c.parts[0])])
    if c.r == 2:
        return cyclic_type_2(*c.parts)
    if c.r == 3:
        return cyclic_type_3(*c.parts)
    return None


def distinct_length_count(c: Composition) -> int:
    """Return the number of distinct cycle lengths of the exchange of c, computed by
    direct traversal.

    Example:
        >>> distinct_length_count(make_composition((3, 5, 4, 2)))
        2
    """
    return len(set(brute_cycle_lengths(c.parts)))


# ==================================== conjecture ======================================


def conjecture_bound(r: int) -> int:
    """Return the conjectured bound on the number of distinct cycle lengths of the
    exchange of a composition of length r, the ceiling of (r - 1) / 2.

    Example:
        >>> [conjecture_bound(r) for r in range(1, 6)]
        [0, 1, 1, 2, 2]
    """
    return r // 2


class ConjectureReport(Parseable):
    """The number of distinct cycle lengths over the compositions of one length.

    Arguments:
        int length: The number of parts.
        int max_sum: The sum bound of the scan.
        int scanned: The number of compositions scanned.
        int max_k: The largest number of distinct cycle lengths found.
        int bound: The conjectured bound.
        tuple counterexamples: The compositions exceeding the bound, in the order of
            the scan.
    """

    length: int
    max_sum: int
    scanned: int
    max_k: int
    bound: int
    counterexamples: Tuple[Composition, ...] = ()

    @property
    def violations(self) -> int:
        return len(self.counterexamples)

    def row(self) -> dict:
        """The table row of the report."""
        return {
            "length": self.length,
            "max_sum": self.max_sum,
            "max_k": self.max_k,
            "bound": self.bound,
            "violations": self.violations,
        }


def _conjecture_chunk(chunk, length, bound):
    scanned = 0
    max_k = 0
    counterexamples = []
    for task in chunk:
        for parts in iter_task(task, length):
            scanned += 1
            k = len(set(brute_cycle_lengths(parts)))
            max_k = max(max_k, k)
            if k > bound:
                counterexamples.append(parts)
    return scanned, max_k, counterexamples


def conjecture_sweep(
    r: int, max_sum: int, config: ConfigSweep = None
) -> ConjectureReport:
    """Scan every composition of length r and sum at most max_sum, and record the
    number of distinct cycle lengths of its exchange against the conjectured bound.
    The report records the data; a ConjectureBoundWarning is issued when some
    compositions exceed the bound.

    Args:
        int r: The number of parts, at least 1.
        int max_sum: The sum bound, at least r.
        ConfigSweep config: The sweep configuration.

    Example:
        >>> report = conjecture_sweep(2, 40)
        >>> report.max_k, report.bound, report.violations
        (1, 1, 0)
    """
    if r < 1:
        raise ValueError(f"The length must be at least 1, found {r}.")
    if max_sum < r:
        raise ValueError(f"The sum bound must be at least {r}, found {max_sum}.")

    bound = conjecture_bound(r)
    tasks = sweep_tasks(max_sum, r)
    results = run_sweep(_conjecture_chunk, tasks, config, length=r, bound=bound)
    counterexamples = tuple(
        Composition.trusted(parts) for result in results for parts in result[2]
    )
    report = ConjectureReport.construct(
        length=r,
        max_sum=max_sum,
        scanned=sum(result[0] for result in results),
        max_k=max(result[1] for result in results),
        bound=bound,
        counterexamples=counterexamples,
    )
    if report.violations:
        warnings.warn(
            f"{report.violations} composition(s) of length {r} exceed the bound of "
            f"{bound} distinct cycle length(s).",
            ConjectureBoundWarning,
        )
    return report


def conjecture_table(reports: Sequence[ConjectureReport]) -> pd.DataFrame:
    """Return the reports as a pandas DataFrame, one row per length, with the columns
    ``length``, ``max_sum``, ``max_k``, ``bound`` and ``violations``."""
    columns = ["length", "max_sum", "max_k", "bound", "violations"]
    return pd.DataFrame([report.row() for report in reports], columns=columns)
