"""
Symmetric discrete interval exchanges for Python
================================================

symdiet builds the symmetric discrete interval exchange of an integer composition,
the permutation of [1, n] exchanging consecutive blocks of sizes given by the parts
in reverse order. It counts the orbits of the exchange with a fast recursion that
generalizes the subtractive Euclidean algorithm, enumerates the tree of circular
compositions (the compositions whose exchange has a single orbit), and computes
cyclic types. Every fast path is checked against a brute force traversal.
"""
from datetime import datetime

# version has to be specified at the start.
__author__ = "The symdiet developers"
__copyright__ = f"Copyright 2024-{datetime.now().year}, The symdiet Project."
__license__ = "BSD License"
__status__ = "Beta"
__version__ = "0.1.0.dev0"

from .composition import Composition  # noqa:F401
from .composition import make_composition  # noqa:F401
from .composition import parse_composition  # noqa:F401
from .composition import reverse  # noqa:F401
from .composition import translation_vector  # noqa:F401
from .permutation import build_diet  # noqa:F401
from .permutation import cyclic_type  # noqa:F401
from .permutation import CyclicType  # noqa:F401
from .permutation import orbit_decomposition  # noqa:F401
from .permutation import Permutation  # noqa:F401
from .recursion import count_orbits  # noqa:F401
from .recursion import is_minimal  # noqa:F401
from .recursion import trace  # noqa:F401
from .tree import children  # noqa:F401
from .tree import enumerate_tree  # noqa:F401
from .tree import parent  # noqa:F401
from .tree import path_to_root  # noqa:F401
from .oracle import brute_orbit_count  # noqa:F401
from .sweep.config import ConfigSweep  # noqa:F401
