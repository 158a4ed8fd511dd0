"""Exhaustive checks of the orbit counting recursion against the brute force
traversal."""
from math import gcd

import numpy as np
from symdiet import count_orbits
from symdiet import make_composition
from symdiet.composition import reverse
from symdiet.composition import translations
from symdiet.oracle import all_circular
from symdiet.oracle import CompositionStream
from symdiet.permutation import build_diet
from symdiet.permutation import cyclic_type
from symdiet.permutation import diet_images
from symdiet.recursion import pivot
from symdiet.recursion import pivot_candidates
from symdiet.sweep import verify_recursion
from symdiet.sweep.config import ConfigSweep


def test_recursion_counts_every_orbit():
    report = verify_recursion(18, ConfigSweep(n_jobs=-1))
    assert report.checked == 2**18 - 1
    assert report.passed, f"mismatches: {report.mismatches}"


def test_gcd_specialization():
    for a in range(1, 61):
        for b in range(1, 61):
            assert count_orbits(make_composition((a, b))) == gcd(a, b)


def test_reversal_inverts_the_exchange():
    for c in CompositionStream(max_sum=18):
        p = build_diet(c)
        p_reverse = build_diet(reverse(c))
        # T_reverse(c) o T_c is the identity
        assert all(
            p_reverse.images[image - 1] == x for x, image in enumerate(p.images, 1)
        ), str(c)

        ctype = cyclic_type(p)
        assert ctype.weight == c.n, str(c)
        assert ctype.orbits == cyclic_type(p_reverse).orbits, str(c)
        assert count_orbits(c) == count_orbits(reverse(c)), str(c)


def test_blocks_with_zero_translation_are_fixed():
    for c in CompositionStream(max_sum=18):
        images = diet_images(c)
        start = 0
        for part, s in zip(c.parts, translations(c.parts)):
            if s == 0:
                block = np.arange(start + 1, start + part + 1)
                assert np.array_equal(images[start : start + part], block), str(c)
            start += part


def test_pivot_candidates():
    for c in CompositionStream(max_sum=18):
        candidates = [p.t for p in pivot_candidates(c)]
        assert candidates[0] == pivot(c).t
        assert len(candidates) in (1, 2), str(c)
        if len(candidates) == 2:
            assert candidates[1] == candidates[0] + 1, str(c)


def test_circular_compositions_are_closed_under_reversal():
    circular = all_circular(14)
    members = set(circular)
    assert len(members) == len(circular)
    for c in circular:
        assert reverse(c) in members, str(c)


def test_uniqueness_of_the_parent_rule():
    for c in all_circular(14):
        if c.parts == (1, 1):
            continue
        candidates = pivot_candidates(c)
        strict = [p for p in candidates if c.part(p.t) > p.abs_s]
        if strict:
            # a strict pivot is the only candidate
            assert len(candidates) == 1, str(c)
            continue
        # otherwise an adjacent pair of equalities with unequal parts
        assert len(candidates) == 2, str(c)
        first, second = candidates
        assert second.t == first.t + 1
        assert c.part(first.t) == first.abs_s
        assert c.part(second.t) == second.abs_s
        assert c.part(first.t) != c.part(second.t), str(c)
