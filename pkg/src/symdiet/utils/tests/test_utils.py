import json

import pytest
from symdiet.composition import make_composition
from symdiet.tree import TreeNode
from symdiet.utils import dumps
from symdiet.utils import flatten_dict
from symdiet.utils.abstract_list import AbstractList


class CompositionNodes(AbstractList):
    item_class = TreeNode


def test_dumps():
    assert dumps([1, 2]) == "[1,2]\n"
    assert dumps({"a": None, "b": "x"}) == '{"a":null,"b":"x"}\n'
    text = dumps({"steps": [{"t": 2}], "total": 3})
    assert dumps(json.loads(text)) == text
    with pytest.raises(ValueError):
        dumps(float("nan"))


def test_flatten_dict():
    assert flatten_dict({"a": {"b": {"c": 1}}, "d": 2}) == {"a.b.c": 1, "d": 2}
    assert flatten_dict({}) == {}


def test_abstract_list():
    root = TreeNode(composition=make_composition((1, 1)))
    items = CompositionNodes([root])
    assert len(items) == 1
    assert items[0] is root

    items.append({"composition": [1, 1], "depth": 0})
    assert items[1] == root
    items[1] = root
    del items[0]
    assert len(items) == 1
    assert items.json() == [root.json()]
    assert str(items) == f"[{root!r}]"

    error = "Expecting a TreeNode object or an equivalent python dict object"
    with pytest.raises(ValueError, match=f".*{error}.*"):
        items.insert(0, 5)

    assert items != [root]
    assert items == CompositionNodes([root])
