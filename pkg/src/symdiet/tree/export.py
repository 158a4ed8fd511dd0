"""Text, JSON and DOT documents of a bounded tree of circular compositions."""
from typing import Iterable
from typing import List

from symdiet.composition import format_composition
from symdiet.tree import TreeNode
from symdiet.utils import dumps
from typing_extensions import Literal

__all__ = ["tree_records", "export_tree"]


def tree_records(nodes: Iterable[TreeNode]) -> List[dict]:
    """Return the list of node records ``{composition, depth, parent, kind, t}``."""
    return [node.json() for node in nodes]


def _text(nodes):
    lines = []
    for node in nodes:
        line = f"({format_composition(node.composition)})"
        if not node.is_root:
            line += (
                f" depth={node.depth} parent=({format_composition(node.parent)}) "
                f"{node.provenance.label}"
            )
        lines.append(line)
    return "\n".join(lines) + "\n"


def _dot(nodes):
    declarations = []
    edges = []
    for node in nodes:
        name = format_composition(node.composition)
        declarations.append(f'  "{name}" [label="({name})"];')
        if not node.is_root:
            source = format_composition(node.parent)
            label = node.provenance.label
            edges.append(f'  "{source}" -> "{name}" [label="{label}"];')
    return "\n".join(["digraph circular {", *declarations, *edges, "}"]) + "\n"


def export_tree(
    nodes: Iterable[TreeNode], format: Literal["text", "json", "dot"] = "dot"
) -> str:
    """Render a finite stream of tree nodes as a document.

    Args:
        nodes: An iterable of TreeNode objects, e.g. from
            :py:func:`~symdiet.tree.enumerate_tree`.
        str format: One of ``text``, ``json`` or ``dot``.

    Returns:
        The document as a string.

    Example:
        >>> from symdiet.tree import enumerate_tree
        >>> print(export_tree(enumerate_tree(3), "dot"), end="")
        digraph circular {
          "1,1" [label="(1,1)"];
          "2,1" [label="(2,1)"];
          "1,2" [label="(1,2)"];
          "1,1" -> "2,1" [label="T1:t=1"];
          "1,1" -> "1,2" [label="T1:t=2"];
        }
        >>> print(export_tree(enumerate_tree(2), "text"), end="")
        (1,1)
    """
    nodes = list(nodes)
    if format == "json":
        return dumps(tree_records(nodes))
    if format == "text":
        return _text(nodes)
    if format == "dot":
        return _dot(nodes)
    raise ValueError(f"Unknown tree format '{format}', expecting text, json or dot.")
