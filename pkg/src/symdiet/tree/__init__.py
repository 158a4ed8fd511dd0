r"""The tree of circular compositions.

The root of the tree is the composition (1,1). A circular composition
:math:`\lambda = (\lambda_1, \dots, \lambda_r)` has two kinds of children:

- ``Type1`` at :math:`t \in [1, r]`, the part :math:`\lambda_t` replaced by
  :math:`\lambda_t + |s_t|`;
- ``Type2`` at :math:`t \in [0, r]`, the part :math:`|\delta_t|` inserted after the
  first t parts, where :math:`\delta_t = n - 2 \sum_{j \le t} \lambda_j`, whenever
  :math:`\delta_t > \lambda_{t+1}` or :math:`-\delta_t > \lambda_t`. The positions
  t = 0 and t = r are always admissible.

Every circular composition of length at least two appears exactly once in the tree.
"""
from collections import deque
from itertools import accumulate
from typing import Iterator
from typing import List
from typing import Optional
from typing import Tuple

import pandas as pd
from symdiet.composition import check_index
from symdiet.composition import Composition
from symdiet.composition import format_composition
from symdiet.recursion import count_parts_orbits
from symdiet.recursion import locate_pivot
from symdiet.utils import flatten_dict
from symdiet.utils.abstract_list import AbstractList
from symdiet.utils.error import NoParentError
from symdiet.utils.error import NotCircularError
from symdiet.utils.parseable import Parseable
from typing_extensions import Literal

__all__ = [
    "ROOT",
    "DeltaVector",
    "ChildSpec",
    "TreeNode",
    "TreeNodeList",
    "delta_vector",
    "insert_delta",
    "children",
    "parent",
    "parent_spec",
    "enumerate_tree",
    "path_to_root",
    "tree_level_sizes",
    "raney_children",
    "raney_level",
]

ROOT = (1, 1)


class DeltaVector(Parseable):
    r"""The vector :math:`(\delta_0, \dots, \delta_r)` of a composition, where
    :math:`\delta_t` is the translation parameter a part inserted after position t
    would receive.

    Arguments:
        tuple entries: The r + 1 entries, from :math:`\delta_0 = n` down to
            :math:`\delta_r = -n`.
    """

    entries: Tuple[int, ...]

    def json(self, exclude={}) -> list:
        return list(self.entries)

    def __str__(self):
        return "(" + ",".join(str(d) for d in self.entries) + ")"


class ChildSpec(Parseable):
    """The rule that produced a child composition.

    Arguments:
        str kind: ``Type1`` (a part grows) or ``Type2`` (a part is inserted).
        int t: The index of the rule, in [1, r] for ``Type1`` and [0, r] for
            ``Type2``, where r is the length of the parent.
        Composition child: The child composition.
    """

    kind: Literal["Type1", "Type2"]
    t: int
    child: Composition

    @property
    def label(self) -> str:
        """Edge label, e.g. ``T1:t=2``."""
        return f"T{self.kind[-1]}:t={self.t}"


class TreeNode(Parseable):
    """A node of the tree of circular compositions.

    Arguments:
        Composition composition: The circular composition.
        int depth: The distance to the root.
        ChildSpec provenance: The rule linking the node to its parent. None for the
            root.
        Composition parent: The parent composition. None for the root.
    """

    composition: Composition
    depth: int = 0
    provenance: Optional[ChildSpec] = None
    parent: Optional[Composition] = None

    @property
    def is_root(self) -> bool:
        return self.provenance is None

    def json(self, exclude={}) -> dict:
        """Serialize the node to the record
        ``{composition, depth, parent, kind, t}``."""
        return {
            "composition": self.composition.json(),
            "depth": self.depth,
            "parent": None if self.parent is None else self.parent.json(),
            "kind": None if self.provenance is None else self.provenance.kind,
            "t": None if self.provenance is None else self.provenance.t,
        }

    @classmethod
    def parse(cls, py_dict: dict):
        composition = Composition.parse(py_dict["composition"])
        if py_dict.get("parent") is None:
            return cls(composition=composition, depth=py_dict.get("depth", 0))
        provenance = ChildSpec(kind=py_dict["kind"], t=py_dict["t"], child=composition)
        return cls(
            composition=composition,
            depth=py_dict["depth"],
            provenance=provenance,
            parent=Composition.parse(py_dict["parent"]),
        )


class TreeNodeList(AbstractList):
    """A list of TreeNode objects."""

    item_class = TreeNode

    def compositions(self) -> List[Composition]:
        return [node.composition for node in self]

    def to_pd(self) -> pd.DataFrame:
        """Return the nodes as a pandas DataFrame with the columns ``composition``,
        ``depth``, ``parent``, ``provenance.kind`` and ``provenance.t``.

        Example:
            >>> df = TreeNodeList(enumerate_tree(3)).to_pd()
            >>> df["composition"].tolist()
            ['1,1', '2,1', '1,2']
        """
        records = []
        for node in self:
            provenance = {"kind": None, "t": None}
            if node.provenance is not None:
                provenance = {"kind": node.provenance.kind, "t": node.provenance.t}
            record = {
                "composition": format_composition(node.composition),
                "depth": node.depth,
                "parent": None if node.parent is None else str(node.parent),
                "provenance": provenance,
            }
            records.append(flatten_dict(record))
        columns = ["composition", "depth", "parent", "provenance.kind", "provenance.t"]
        df = pd.DataFrame(records, columns=columns)
        return df.astype({"provenance.t": "Int64"})


# ======================================= vectors ======================================


def _deltas(parts) -> List[int]:
    n = sum(parts)
    return [n - 2 * prefix for prefix in accumulate(parts, initial=0)]


def delta_vector(c: Composition) -> DeltaVector:
    """Return the delta vector of the composition.

    Example:
        >>> from symdiet.composition import make_composition
        >>> print(delta_vector(make_composition((1, 1, 2, 4))))
        (8,6,4,0,-8)
    """
    entries = _deltas(c.parts)
    assert entries[0] == c.n and entries[-1] == -c.n
    return DeltaVector.construct(entries=tuple(entries))


def insert_delta(c: Composition, t: int) -> Composition:
    r"""Return c with the part :math:`|\delta_t|` inserted after the first t parts.
    The translation parameter of the inserted part is :math:`\delta_t`, and the
    exchange keeps its number of orbits.

    Example:
        >>> from symdiet.composition import make_composition
        >>> print(insert_delta(make_composition((1, 1, 2)), 3))
        1,1,2,4
    """
    check_index(t, 0, c.r)
    return c.insert(t, abs(_deltas(c.parts)[t]))


# ==================================== tree structure ==================================


def _require_circular(c: Composition):
    orbits = count_parts_orbits(c.parts)
    if c.r < 2 or orbits != 1:
        raise NotCircularError(format_composition(c), orbits)


def _child_specs(c: Composition) -> List[ChildSpec]:
    parts = c.parts
    r = len(parts)
    n = sum(parts)
    specs = []

    before = 0
    for t, part in enumerate(parts, start=1):
        abs_s = abs(n - 2 * before - part)
        if abs_s > 0:
            child = parts[: t - 1] + (part + abs_s,) + parts[t:]
            spec = ChildSpec.construct(kind="Type1", t=t, child=Composition(child))
            specs.append(spec)
        before += part

    for t, delta in enumerate(_deltas(parts)):
        if delta == 0:
            continue
        boundary = t == 0 or t == r
        if boundary or delta > parts[t] or -delta > parts[t - 1]:
            child = parts[:t] + (abs(delta),) + parts[t:]
            spec = ChildSpec.construct(kind="Type2", t=t, child=Composition(child))
            specs.append(spec)
    return specs


def children(c: Composition) -> List[ChildSpec]:
    """Return the children of a circular composition, the ``Type1`` children by
    increasing t followed by the ``Type2`` children by increasing t.

    Args:
        c: A circular Composition object.

    Returns:
        A list of ChildSpec objects.

    Example:
        >>> from symdiet.composition import make_composition
        >>> for spec in children(make_composition((1, 1))):
        ...     print(spec.label, spec.child)
        T1:t=1 2,1
        T1:t=2 1,2
        T2:t=0 2,1,1
        T2:t=2 1,1,2
    """
    _require_circular(c)
    return _child_specs(c)


def _parent_spec(c: Composition) -> Tuple[Composition, ChildSpec]:
    parts = c.parts
    i, s = locate_pivot(parts)
    part, abs_s = parts[i], abs(s)

    if part > abs_s:
        parent_parts = parts[:i] + (part - abs_s,) + parts[i + 1 :]
        spec = ChildSpec.construct(kind="Type1", t=i + 1, child=c)
        return Composition.trusted(parent_parts), spec

    # equality at the pivot: the next part also satisfies it, and the two differ
    assert s > 0 and part != parts[i + 1]
    if part > parts[i + 1]:
        parent_parts, t = parts[:i] + parts[i + 1 :], i
    else:
        parent_parts, t = parts[: i + 1] + parts[i + 2 :], i + 1
    spec = ChildSpec.construct(kind="Type2", t=t, child=c)
    return Composition.trusted(parent_parts), spec


def parent(c: Composition) -> Optional[Composition]:
    """Return the unique parent of a circular composition, or None for the root.

    Example:
        >>> from symdiet.composition import make_composition
        >>> print(parent(make_composition((1, 1, 2, 4))))
        1,1,2
        >>> parent(make_composition((1, 1))) is None
        True
    """
    _require_circular(c)
    if c.parts == ROOT:
        return None
    return _parent_spec(c)[0]


def parent_spec(c: Composition) -> ChildSpec:
    """Return the rule linking a circular composition to its parent.

    Example:
        >>> from symdiet.composition import make_composition
        >>> spec = parent_spec(make_composition((1, 1, 2, 4)))
        >>> spec.label
        'T2:t=3'
    """
    _require_circular(c)
    if c.parts == ROOT:
        raise NoParentError()
    return _parent_spec(c)[1]


def enumerate_tree(max_sum: int) -> Iterator[TreeNode]:
    """Yield every node of the tree whose composition sums to at most max_sum,
    breadth first, children in the order of :py:func:`children`. Every child sums
    to more than its parent, so branches are pruned at the sum bound.

    Args:
        int max_sum: The sum bound, at least 2.

    Example:
        >>> [str(node.composition) for node in enumerate_tree(3)]
        ['1,1', '2,1', '1,2']
    """
    if max_sum < 2:
        raise ValueError(f"The sum bound must be at least 2, found {max_sum}.")

    queue = deque([TreeNode.construct(composition=Composition.trusted(ROOT), depth=0)])
    while queue:
        node = queue.popleft()
        yield node
        for spec in _child_specs(node.composition):
            if spec.child.n <= max_sum:
                queue.append(
                    TreeNode.construct(
                        composition=spec.child,
                        depth=node.depth + 1,
                        provenance=spec,
                        parent=node.composition,
                    )
                )


def tree_level_sizes(max_sum: int) -> List[int]:
    """Return the number of nodes at every depth of the tree bounded by max_sum.

    Example:
        >>> tree_level_sizes(4)
        [1, 4, 2]
    """
    sizes = []
    for node in enumerate_tree(max_sum):
        if node.depth == len(sizes):
            sizes.append(0)
        sizes[node.depth] += 1
    return sizes


def path_to_root(c: Composition) -> List[Composition]:
    """Return the path c, parent(c), ..., (1,1).

    Example:
        >>> from symdiet.composition import make_composition
        >>> [str(p) for p in path_to_root(make_composition((3, 2)))]
        ['3,2', '1,2', '1,1']
    """
    _require_circular(c)
    path = [c]
    while path[-1].parts != ROOT:
        path.append(_parent_spec(path[-1])[0])
    return path


# ===================================== Raney tree =====================================


def raney_children(i: int, j: int) -> List[Tuple[int, int]]:
    """Return the children of the coprime pair (i, j) in the Raney tree,
    (i + j, j) and (i, i + j)."""
    return [(i + j, j), (i, i + j)]


def raney_level(depth: int) -> List[Tuple[int, int]]:
    """Return the pairs at the given depth of the Raney tree rooted at (1, 1), from
    left to right.

    Example:
        >>> raney_level(2)
        [(3, 1), (2, 3), (3, 2), (1, 3)]
    """
    level = [ROOT]
    for _ in range(depth):
        level = [child for i, j in level for child in raney_children(i, j)]
    return level
