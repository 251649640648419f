"""The Artin representation: composition law, purity shape, equality oracle."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from braidwalk.artin import (DEFAULT_IMAGE_BUDGET, FreeAutomorphism,
                             ImageBudgetError, UNDEFINED, _images, a_word,
                             apply_braid, artin_auto, braid_auto, braid_equal,
                             occurrence_ratio)
from braidwalk.braids import BraidWord, PureWord, coset_decompose
from braidwalk.words import ReducedWord, concat, invert, reduce

N = 4


def braid_words(max_size=8):
    letter = st.integers(1, N - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letter, max_size=max_size).map(
        lambda ls: BraidWord(N, tuple(ls)))


def free_words(max_size=6):
    letter = st.integers(1, N).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letter, max_size=max_size).map(lambda ls: reduce(ls, N))


def test_generator_images_are_the_calibrated_ones():
    plus = artin_auto(1, N)
    assert plus.images[0] == (1, 2, -1)   # x1 -> x1 x2 x1^-1
    assert plus.images[1] == (1,)         # x2 -> x1
    minus = artin_auto(-1, N)
    assert minus.images[0] == (2,)
    assert minus.images[1] == (-2, 1, 2)


@given(braid_words(5), braid_words(5), free_words())
@settings(max_examples=60)
def test_composition_law(u, v, t):
    # Phi(uv) = Phi(u) o Phi(v)
    assert apply_braid(u * v, t) == apply_braid(u, apply_braid(v, t))


@given(braid_words())
def test_automorphism_invertible(u):
    f, g = braid_auto(u), braid_auto(u.inverse())
    x = ReducedWord((2,), N)
    assert g.apply(f.apply(x)) == x


@given(braid_words())
def test_braid_equal_is_invariant_under_free_insertion(u):
    padded = BraidWord(N, u.letters + (2, -2))
    assert braid_equal(u, padded)


@given(braid_words(5), braid_words(5))
def test_braid_equal_separates_permutations(u, v):
    from braidwalk.braids import perm
    if perm(u) != perm(v):
        assert not braid_equal(u, v)


def test_braid_relations_hold():
    assert braid_equal(BraidWord(N, (1, 2, 1)), BraidWord(N, (2, 1, 2)))
    assert braid_equal(BraidWord(N, (1, 3)), BraidWord(N, (3, 1)))
    assert not braid_equal(BraidWord(N, (1,)), BraidWord(N, (2,)))
    assert not braid_equal(BraidWord(N, (1, 1)), BraidWord(N, ()))


@given(braid_words(6))
@settings(max_examples=40)
def test_braid_equal_fallback_agrees_with_direct(u):
    # force the normal-form fallback with a tiny budget
    v = BraidWord(N, u.letters + (3, 1, -1, -3))
    assert braid_equal(u, v, image_budget=1) == braid_equal(u, v,
                                                            image_budget=None)


def test_image_budget_raises():
    hard = BraidWord(N, (1, 2, 3) * 40)
    with pytest.raises(ImageBudgetError):
        _images(hard.letters, N, budget=50)
    assert DEFAULT_IMAGE_BUDGET > 0


def test_a_word_shape_and_conjugation():
    g = PureWord(N, (((4, 1), 1), ((3, 2), -1)))
    for i in range(1, N + 1):
        a = a_word(g, i)
        x = ReducedWord((i,), N)
        assert apply_braid(g, x) == concat(concat(a, x), invert(a))


def test_a_word_rejects_non_pure():
    with pytest.raises(ValueError):
        a_word(BraidWord(N, (1,)), 1)


def test_occurrence_ratio():
    g = PureWord(N, (((4, 1), 1), ((3, 2), -1), ((4, 2), 1)))
    a = a_word(g, 4).letters

    def count(r):
        return sum(1 for l in a if abs(l) == r)

    if count(2) > 0:
        assert occurrence_ratio(g, 4, 1, 2) == Fraction(count(1), count(2))
    # sign policies count a single sign in both numerator and denominator
    for policy, pick in (("positive", lambda r: sum(1 for l in a if l == r)),
                         ("negative", lambda r: sum(1 for l in a if l == -r))):
        got = occurrence_ratio(g, 4, 1, 2, policy)
        d = pick(2)
        assert got == (UNDEFINED if d == 0 else Fraction(pick(1), d))
    # denominator 0 yields the UNDEFINED sentinel
    missing = next((r for r in range(1, N + 1) if count(r) == 0), None)
    if missing is not None:
        assert occurrence_ratio(g, 4, 1, missing) is UNDEFINED


def test_free_automorphism_rank_checks():
    f = FreeAutomorphism(N, tuple((k,) for k in range(1, N + 1)))
    with pytest.raises(ValueError):
        f.apply(ReducedWord((1,), N + 1))


@given(braid_words(10))
@settings(max_examples=40)
def test_pure_words_fix_nothing_but_conjugate(u):
    gamma, _ = coset_decompose(u)
    for i in range(1, N + 1):
        im = apply_braid(gamma, ReducedWord((i,), N)).letters
        assert len(im) % 2 == 1
        assert im[len(im) // 2] == i
