"""The tree of circular compositions against the brute force search."""
import json
from fractions import Fraction
from io import StringIO

from symdiet import make_composition
from symdiet import parent
from symdiet.__main__ import main
from symdiet.oracle import all_circular
from symdiet.tree import children
from symdiet.tree import enumerate_tree
from symdiet.tree import raney_level


def test_tree_is_complete_sound_and_unique():
    nodes = list(enumerate_tree(14))
    compositions = [node.composition for node in nodes]
    assert len(compositions) == len(set(compositions))
    assert set(compositions) == set(all_circular(14))

    for node in nodes[1:]:
        assert parent(node.composition) == node.parent


def test_tree_command_matches_circular_compositions():
    out = StringIO()
    assert main(["tree", "--max-sum", "14", "--format", "json"], out, StringIO()) == 0
    records = json.loads(out.getvalue())
    found = {tuple(record["composition"]) for record in records}
    assert found == {c.parts for c in all_circular(14)}


def raney_fractions(depth):
    level = [Fraction(1, 1)]
    for _ in range(depth):
        level = [
            f
            for x in level
            for f in (
                Fraction(x.numerator, x.numerator + x.denominator),
                Fraction(x.numerator + x.denominator, x.denominator),
            )
        ]
    return level


def test_type1_edges_of_pairs_give_the_raney_tree():
    level = [make_composition((1, 1))]
    for depth in range(1, 7):
        level = [
            spec.child
            for c in level
            for spec in children(c)
            if spec.kind == "Type1"
        ]
        assert all(c.r == 2 for c in level)
        assert [c.parts for c in level] == raney_level(depth)
        fractions = {Fraction(a, b) for a, b in (c.parts for c in level)}
        assert fractions == set(raney_fractions(depth))
        assert len(fractions) == 2**depth
