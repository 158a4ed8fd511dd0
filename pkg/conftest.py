from pprint import pprint

import matplotlib
import matplotlib.pyplot as plt
import numpy as np
import pytest
from sybil import Sybil
from sybil.parsers.codeblock import PythonCodeBlockParser
from sybil.parsers.doctest import DocTestParser
from sybil.parsers.skip import skip
from symdiet import build_diet
from symdiet import Composition
from symdiet import count_orbits
from symdiet import make_composition
from symdiet import parse_composition
from symdiet import trace
from symdiet.permutation import Permutation

matplotlib.use("Agg")
font = {"weight": "light", "size": 9}
matplotlib.rc("font", **font)


def _namespace():
    return {
        "np": np,
        "plt": plt,
        "pprint": pprint,
        "Composition": Composition,
        "Permutation": Permutation,
        "make_composition": make_composition,
        "parse_composition": parse_composition,
        "build_diet": build_diet,
        "count_orbits": count_orbits,
        "trace": trace,
        "comp_3542": make_composition((3, 5, 4, 2)),
        "root": make_composition((1, 1)),
    }


@pytest.fixture(autouse=True)
def add_compositions(doctest_namespace):
    doctest_namespace.update(_namespace())


def _sybil_setup(namespace):
    namespace.update(_namespace())


pytest_collect_file = Sybil(
    parsers=[
        DocTestParser(),
        PythonCodeBlockParser(),
        skip,
    ],
    path="./docs",
    patterns=["*.rst"],
    setup=_sybil_setup,
    fixtures=["add_compositions"],
).pytest()
