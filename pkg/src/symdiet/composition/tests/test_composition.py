"""Test for the Composition, TranslationVector and IntervalBlock classes."""
import numpy as np
import pytest
from symdiet.composition import block_of
from symdiet.composition import Composition
from symdiet.composition import format_composition
from symdiet.composition import interval_blocks
from symdiet.composition import make_composition
from symdiet.composition import MAX_SUM
from symdiet.composition import parse_composition
from symdiet.composition import reverse
from symdiet.composition import translation_vector
from symdiet.composition import translations
from symdiet.utils.error import CompositionOverflowError
from symdiet.utils.error import EmptyCompositionError
from symdiet.utils.error import IndexOutOfRangeError
from symdiet.utils.error import InvalidPartTypeError
from symdiet.utils.error import NonPositivePartError
from symdiet.utils.error import ParseError
from symdiet.utils.error import SymdietError


def test_make_composition():
    c = make_composition((3, 5, 4, 2))
    assert c.parts == (3, 5, 4, 2)
    assert c.n == 14
    assert c.r == 4

    c = make_composition([1])
    assert c.n == 1
    assert c.r == 1

    # numpy integers are accepted and stored as python integers
    c = make_composition(np.array([2, 3]))
    assert c.parts == (2, 3)
    assert all(type(part) is int for part in c.parts)


def test_composition_errors():
    error = "found 0 at position 2"
    with pytest.raises(NonPositivePartError, match=f".*{error}.*"):
        make_composition((1, 0, 2))

    with pytest.raises(NonPositivePartError) as e:
        make_composition((1, 2, -4))
    assert e.value.index == 3
    assert e.value.value == -4

    error = "at least one part"
    with pytest.raises(EmptyCompositionError, match=f".*{error}.*"):
        make_composition(())

    error = "found float at position 1"
    with pytest.raises(InvalidPartTypeError, match=f".*{error}.*"):
        make_composition((2.5, 1))

    with pytest.raises(InvalidPartTypeError):
        make_composition((1, True))

    with pytest.raises(InvalidPartTypeError):
        make_composition(("3",))

    error = "exceeds the unsigned 64-bit limit"
    with pytest.raises(CompositionOverflowError, match=f".*{error}.*"):
        make_composition((MAX_SUM, 1))

    # the largest sum is valid
    assert make_composition((MAX_SUM - 1, 1)).n == MAX_SUM

    # every error is a ValueError
    for parts in [(), (0,), (1.5,), (MAX_SUM, 1)]:
        with pytest.raises(ValueError):
            make_composition(parts)
        with pytest.raises(SymdietError):
            make_composition(parts)


def test_composition_is_immutable():
    c = make_composition((1, 2))
    with pytest.raises(TypeError):
        c.parts = (2, 1)

    assert c == make_composition([1, 2])
    assert hash(c) == hash(make_composition([1, 2]))
    assert len({c, make_composition((1, 2)), make_composition((2, 1))}) == 2


def test_sum_is_computed_once():
    c = make_composition((3, 5, 4, 2))
    assert c._n == 14
    assert c.n == 14

    trusted = Composition.trusted((3, 5, 4, 2))
    assert trusted._n is None
    assert trusted.n == 14
    assert trusted._n == 14

    # the cached sum is not a field
    assert trusted == c
    assert hash(trusted) == hash(make_composition((3, 5, 4, 2)))
    assert c.json() == [3, 5, 4, 2]
    assert c.dict() == {"parts": (3, 5, 4, 2)}


def test_part_access_and_edits():
    c = make_composition((3, 5, 4, 2))
    assert c.part(1) == 3
    assert c.part(4) == 2

    error = r"Index 5 is out of range, expecting a value in \[1, 4\]"
    with pytest.raises(IndexOutOfRangeError, match=f".*{error}.*"):
        c.part(5)
    with pytest.raises(IndexOutOfRangeError):
        c.part(0)

    assert c.replace(2, 2).parts == (3, 2, 4, 2)
    assert c.remove(1).parts == (5, 4, 2)
    assert c.insert(0, 7).parts == (7, 3, 5, 4, 2)
    assert c.insert(4, 7).parts == (3, 5, 4, 2, 7)

    # edits return new objects
    assert c.parts == (3, 5, 4, 2)

    with pytest.raises(IndexOutOfRangeError):
        c.insert(5, 1)
    with pytest.raises(NonPositivePartError):
        c.replace(1, 0)


def test_order_key():
    assert make_composition((9,)).order_key() < make_composition((1, 1)).order_key()
    assert make_composition((1, 2)).order_key() < make_composition((2, 1)).order_key()
    short, long = make_composition((3, 1, 2)), make_composition((3, 2, 1, 2))
    assert short.order_key() < long.order_key()


def test_serialization():
    c = make_composition((3, 5, 4, 2))
    assert c.json() == [3, 5, 4, 2]
    assert Composition.parse([3, 5, 4, 2]) == c
    assert Composition.parse({"parts": [3, 5, 4, 2]}) == c
    assert str(c) == "3,5,4,2"
    assert repr(c) == "Composition(3,5,4,2)"


def test_parse_composition():
    assert parse_composition("3,5,4,2").parts == (3, 5, 4, 2)
    assert parse_composition(" 1, 1 ").parts == (1, 1)
    assert parse_composition("7").parts == (7,)
    assert format_composition(parse_composition("3,5,4,2")) == "3,5,4,2"

    error = "Unable to parse '3,x' at token 2"
    with pytest.raises(ParseError, match=f".*{error}.*"):
        parse_composition("3,x")

    with pytest.raises(ParseError) as e:
        parse_composition("1,2,,4")
    assert e.value.position == 3

    with pytest.raises(ParseError) as e:
        parse_composition("")
    assert e.value.position == 1

    with pytest.raises(ParseError):
        parse_composition("1.5,2")

    # well formed tokens are validated as parts
    with pytest.raises(NonPositivePartError):
        parse_composition("3,0")
    with pytest.raises(NonPositivePartError):
        parse_composition("3,-1")


def test_reverse():
    assert reverse(make_composition((3, 5, 4, 2))).parts == (2, 4, 5, 3)
    assert reverse(make_composition((1, 1))).parts == (1, 1)
    assert reverse(make_composition((5, 1, 2))).parts == (2, 1, 5)


def test_translation_vector():
    s = translation_vector(make_composition((3, 5, 4, 2)))
    assert s.entries == (11, 3, -6, -12)
    assert translation_vector(make_composition((1,))).entries == (0,)
    assert translation_vector(make_composition((1, 1, 2, 4))).entries == (7, 5, 2, -4)
    assert str(translation_vector(make_composition((1, 1)))) == "(1,-1)"
    assert translation_vector(make_composition((1, 1))).json() == [1, -1]


def test_translations_are_strictly_decreasing():
    rng = np.random.default_rng(42)
    for _ in range(200):
        parts = rng.integers(1, 20, size=rng.integers(1, 8)).tolist()
        s = translations(parts)
        n = sum(parts)
        assert all(a > b for a, b in zip(s, s[1:]))
        assert s[0] == n - parts[0]
        assert s[-1] == parts[-1] - n


def test_translations_near_the_sum_limit():
    s = translations((MAX_SUM - 1, 1))
    assert s == [1, -(MAX_SUM - 1)]


def test_interval_blocks():
    c = make_composition((3, 5, 4, 2))
    blocks = interval_blocks(c)
    assert [(b.index, b.lo, b.hi) for b in blocks] == [
        (1, 1, 3),
        (2, 4, 8),
        (3, 9, 12),
        (4, 13, 14),
    ]
    assert [b.size for b in blocks] == list(c.parts)
    assert 5 in blocks[1]
    assert 9 not in blocks[1]

    expected = [1] * 3 + [2] * 5 + [3] * 4 + [4] * 2
    assert [block_of(c, x) for x in range(1, 15)] == expected
    with pytest.raises(IndexOutOfRangeError):
        block_of(c, 15)
