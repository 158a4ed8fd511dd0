"""The recursive orbit counting function of a symmetric discrete interval exchange.

At every step the pivot t, the smallest index with :math:`\\lambda_t \\ge |s_t|`,
selects one of four reductions:

- ``Base``: a single part, contributing :math:`\\lambda_1` orbits.
- ``AddAndDrop``: :math:`s_t = 0`, the block :math:`B_t` is fixed pointwise; the part
  contributes :math:`\\lambda_t` orbits and is dropped.
- ``Drop``: :math:`\\lambda_t = |s_t|`, the part is dropped.
- ``Shrink``: :math:`\\lambda_t > |s_t|`, the part is replaced by
  :math:`\\lambda_t - |s_t|`.
"""
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import pandas as pd
from symdiet.composition import Composition
from symdiet.composition import format_composition
from symdiet.utils.parseable import Parseable
from typing_extensions import Literal

__all__ = [
    "Pivot",
    "ReductionStep",
    "TraceRow",
    "ReductionTrace",
    "pivot",
    "pivot_candidates",
    "reduce_step",
    "count_orbits",
    "trace",
    "is_minimal",
    "precedes",
]


class Pivot(Parseable):
    """The pivot of a composition.

    Arguments:
        int t: The 1-based index of the pivot.
        int abs_s: The absolute value of the translation parameter at t.
    """

    t: int
    abs_s: int


class ReductionStep(Parseable):
    """One application of the orbit counting recursion.

    Arguments:
        str tag: One of ``Base``, ``AddAndDrop``, ``Drop`` or ``Shrink``.
        int t: The pivot index. None for ``Base``.
        int contribution: The number of orbits added to the count.
        Composition successor: The reduced composition. None for ``Base``.
    """

    tag: Literal["Base", "AddAndDrop", "Drop", "Shrink"]
    t: Optional[int] = None
    contribution: int = 0
    successor: Optional[Composition] = None


class TraceRow(Parseable):
    """A row of a reduction trace: the composition, its pivot and the step taken."""

    composition: Composition
    pivot: Optional[Pivot] = None
    step: ReductionStep

    def to_text(self) -> str:
        comp = format_composition(self.composition)
        step = self.step
        if step.tag == "Base":
            return f"{comp} Base +{step.contribution}"
        return (
            f"{comp} t={self.pivot.t} |s_t|={self.pivot.abs_s} {step.tag} "
            f"+{step.contribution}"
        )


class ReductionTrace(Parseable):
    """The successive steps of the orbit count of a composition, down to the base
    case.

    Arguments:
        tuple steps: A tuple of TraceRow objects.
        int total: The number of orbits, the sum of all contributions.

    Example:
        >>> from symdiet.composition import make_composition
        >>> print(trace(make_composition((1, 1))).to_text())
        1,1 t=1 |s_t|=1 Drop +0
        1 Base +1
        total=1
    """

    steps: Tuple[TraceRow, ...]
    total: int

    def __len__(self):
        return len(self.steps)

    def compositions(self) -> List[Composition]:
        """The composition column of the trace."""
        return [row.composition for row in self.steps]

    def to_text(self) -> str:
        """One step per line, followed by the line ``total=<count>``."""
        lines = [row.to_text() for row in self.steps]
        lines.append(f"total={self.total}")
        return "\n".join(lines)

    def to_pd(self) -> pd.DataFrame:
        """Return the trace as a pandas DataFrame with the columns ``composition``,
        ``t``, ``abs_s``, ``tag`` and ``contribution``, one row per step."""
        rows = [
            {
                "composition": format_composition(row.composition),
                "t": None if row.pivot is None else row.pivot.t,
                "abs_s": None if row.pivot is None else row.pivot.abs_s,
                "tag": row.step.tag,
                "contribution": row.step.contribution,
            }
            for row in self.steps
        ]
        columns = ["composition", "t", "abs_s", "tag", "contribution"]
        df = pd.DataFrame(rows, columns=columns)
        return df.astype({"t": "Int64", "abs_s": "Int64"})

    def json(self, exclude={}) -> dict:
        steps = []
        for row in self.steps:
            record = {"composition": row.composition.json(), "tag": row.step.tag}
            if row.pivot is not None:
                record.update(t=row.pivot.t, abs_s=row.pivot.abs_s)
            record["contribution"] = row.step.contribution
            if row.step.successor is not None:
                record["successor"] = row.step.successor.json()
            steps.append(record)
        return {"steps": steps, "total": self.total}


# =============================== tuple level fast paths ===============================


def locate_pivot(parts: Sequence[int]) -> Tuple[int, int]:
    """Return the 0-based pivot index and the translation parameter at the pivot.
    The pivot is the block holding the midpoint n/2, i.e. the smallest t with
    2 (λ_1 + ... + λ_t) >= n."""
    n = sum(parts)
    before = 0
    for i, part in enumerate(parts):
        if 2 * (before + part) >= n:
            return i, n - 2 * before - part
        before += part
    raise AssertionError("A composition always has a pivot.")  # pragma: no cover


def count_parts_orbits(parts: Sequence[int]) -> int:
    """Orbit count of a tuple of parts known to be valid.

    A Shrink step keeps the pivot and :math:`s_t`, so a run of Shrink steps at the
    same pivot is applied at once, leaving a part in :math:`[1, |s_t|]`.
    """
    parts = list(parts)
    total = 0
    while len(parts) > 1:
        i, s = locate_pivot(parts)
        abs_s = abs(s)
        if abs_s == 0:
            total += parts[i]
            del parts[i]
        elif parts[i] == abs_s:
            del parts[i]
        else:
            parts[i] = (parts[i] - 1) % abs_s + 1
    return total + parts[0]


# ===================================== operations =====================================


def pivot(c: Composition) -> Pivot:
    """Return the pivot of the composition, the smallest index t with
    :math:`\\lambda_t \\ge |s_t|`.

    Example:
        >>> from symdiet.composition import make_composition
        >>> p = pivot(make_composition((3, 5, 4, 2)))
        >>> p.t, p.abs_s
        (2, 3)
    """
    i, s = locate_pivot(c.parts)
    assert c.parts[i] >= abs(s)
    return Pivot.construct(t=i + 1, abs_s=abs(s))


def pivot_candidates(c: Composition) -> List[Pivot]:
    """Return every index t with :math:`\\lambda_t \\ge |s_t|`, in increasing order.
    There are one or two of them, and two candidates are always adjacent.

    Example:
        >>> from symdiet.composition import make_composition
        >>> [p.t for p in pivot_candidates(make_composition((1, 1, 2, 4)))]
        [3, 4]
    """
    n = c.n
    before = 0
    candidates = []
    for t, part in enumerate(c.parts, start=1):
        abs_s = abs(n - 2 * before - part)
        if part >= abs_s:
            candidates.append(Pivot.construct(t=t, abs_s=abs_s))
        before += part
    return candidates


def reduce_step(c: Composition) -> ReductionStep:
    """Apply one step of the orbit counting recursion.

    Args:
        c: A Composition object.

    Returns:
        A ReductionStep object.

    Example:
        >>> from symdiet.composition import make_composition
        >>> step = reduce_step(make_composition((3, 5, 4, 2)))
        >>> step.tag, step.t, str(step.successor)
        ('Shrink', 2, '3,2,4,2')
        >>> step = reduce_step(make_composition((7,)))
        >>> step.tag, step.contribution
        ('Base', 7)
    """
    parts = c.parts
    if len(parts) == 1:
        return ReductionStep.construct(
            tag="Base", t=None, contribution=parts[0], successor=None
        )

    i, s = locate_pivot(parts)
    abs_s = abs(s)
    part = parts[i]
    if abs_s == 0:
        tag, contribution, successor = "AddAndDrop", part, parts[:i] + parts[i + 1 :]
    elif part == abs_s:
        tag, contribution, successor = "Drop", 0, parts[:i] + parts[i + 1 :]
    else:
        tag, contribution = "Shrink", 0
        successor = parts[:i] + (part - abs_s,) + parts[i + 1 :]

    return ReductionStep.construct(
        tag=tag,
        t=i + 1,
        contribution=contribution,
        successor=Composition.trusted(successor),
    )


def count_orbits(c: Composition) -> int:
    """Return the number of orbits of the symmetric discrete interval exchange of the
    composition, by iterating the reduction steps down to the base case.

    Example:
        >>> from symdiet.composition import make_composition
        >>> count_orbits(make_composition((3, 5, 4, 2)))
        3
        >>> count_orbits(make_composition((4, 6)))
        2
    """
    return count_parts_orbits(c.parts)


def trace(c: Composition) -> ReductionTrace:
    """Return every step of the orbit count of the composition.

    Example:
        >>> from symdiet.composition import make_composition
        >>> print(trace(make_composition((3, 5, 4, 2))).to_text())
        3,5,4,2 t=2 |s_t|=3 Shrink +0
        3,2,4,2 t=3 |s_t|=3 Shrink +0
        3,2,1,2 t=2 |s_t|=0 AddAndDrop +2
        3,1,2 t=1 |s_t|=3 Drop +0
        1,2 t=2 |s_t|=1 Shrink +0
        1,1 t=1 |s_t|=1 Drop +0
        1 Base +1
        total=3
    """
    rows = []
    total = 0
    current = c
    while True:
        step = reduce_step(current)
        piv = None if step.tag == "Base" else pivot(current)
        rows.append(TraceRow.construct(composition=current, pivot=piv, step=step))
        total += step.contribution
        if step.successor is None:
            break
        assert precedes(step.successor, current)
        current = step.successor
    return ReductionTrace.construct(steps=tuple(rows), total=total)


def is_minimal(c: Composition) -> bool:
    """Return True if the exchange of the composition has a single orbit.

    Example:
        >>> from symdiet.composition import make_composition
        >>> is_minimal(make_composition((3, 2, 5)))
        True
    """
    return count_parts_orbits(c.parts) == 1


def precedes(a: Composition, b: Composition) -> bool:
    """Return True if a comes strictly before b in the order in which shorter
    compositions come first and compositions of equal length compare
    lexicographically. Every reduction successor precedes its composition.

    Example:
        >>> from symdiet.composition import make_composition
        >>> precedes(make_composition((3, 1, 2)), make_composition((3, 2, 1, 2)))
        True
    """
    return a.order_key() < b.order_key()
