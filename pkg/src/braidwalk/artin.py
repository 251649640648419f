"""The Artin representation B_n -> Aut(F_n): the faithful equality oracle.

Calibrated generator action (frozen; see the calibration tests):

    sigma_i   : x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
    sigma_i^-1: x_i -> x_{i+1},             x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}

composed incrementally left-to-right, so that the images of u.v are the
images of v substituted into the images of u — i.e. Phi(uv) = Phi(u) o Phi(v).
This is the unique member of the standard convention set that reproduces the
reference gamma(x_4) values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .braids import BraidWord, PureWord, is_pure, perm, to_braid
from .words import ReducedWord, _inv, _red_append

UNDEFINED = None

DEFAULT_IMAGE_BUDGET = 200_000


class ImageBudgetError(RuntimeError):
    """An Artin image computation exceeded its total-letter budget."""


def _subst(images: list[list[int]], word: Sequence[int]) -> list[int]:
    buf: list[int] = []
    for l in word:
        _red_append(buf, images[l - 1] if l > 0 else _inv(images[-l - 1]))
    return buf


def _gen_images(letter: int, n: int) -> list[list[int]]:
    i = abs(letter)
    g = [[k] for k in range(1, n + 1)]
    if letter > 0:
        g[i - 1] = [i, i + 1, -i]
        g[i] = [i]
    else:
        g[i - 1] = [i + 1]
        g[i] = [-(i + 1), i, i + 1]
    return g


def _images(sigma_letters: Sequence[int], n: int,
            budget: "int | None" = None) -> tuple[tuple[int, ...], ...]:
    """Images of x_1..x_n under the composed automorphism of the word.

    Each generator touches only two images, so only those are rebuilt; the
    rest are shared by reference (image lists are never mutated in place).
    With a budget, raises ImageBudgetError once the total letter count of
    the images passes it (image sizes can grow exponentially in word length).
    """
    ims: list[list[int]] = [[k] for k in range(1, n + 1)]
    total = n
    for l in sigma_letters:
        i = abs(l)
        a, b = ims[i - 1], ims[i]
        la, lb = len(a), len(b)
        if l > 0:  # x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
            ims[i - 1] = _red_append(_red_append(list(a), b), _inv(a))
            ims[i] = a
        else:  # x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
            ims[i - 1] = b
            ims[i] = _red_append(_red_append(_inv(b), a), b)
        if budget is not None:
            total += len(ims[i - 1]) + len(ims[i]) - la - lb
            if total > budget:
                raise ImageBudgetError(
                    f"image letters exceeded budget {budget}")
    return tuple(tuple(w) for w in ims)


@dataclass(frozen=True)
class FreeAutomorphism:
    n: int
    images: tuple[tuple[int, ...], ...]

    def apply(self, t: ReducedWord) -> ReducedWord:
        if t.rank != self.n:
            raise ValueError("rank mismatch")
        ims = [list(w) for w in self.images]
        return ReducedWord(tuple(_subst(ims, t.letters)), self.n)


def artin_auto(letter: int, n: int) -> FreeAutomorphism:
    if not 1 <= abs(letter) < n:
        raise ValueError(f"sigma index {letter} out of range for n={n}")
    return FreeAutomorphism(n, _images([letter], n))


def _sigma_letters(w: "BraidWord | PureWord") -> tuple[int, ...]:
    if isinstance(w, PureWord):
        w = to_braid(w)
    return w.letters


def apply_braid(w: "BraidWord | PureWord", t: ReducedWord) -> ReducedWord:
    if t.rank != w.n:
        raise ValueError("rank mismatch")
    ims = [list(x) for x in _images(_sigma_letters(w), w.n)]
    return ReducedWord(tuple(_subst(ims, t.letters)), w.n)


def braid_auto(w: "BraidWord | PureWord") -> FreeAutomorphism:
    return FreeAutomorphism(w.n, _images(_sigma_letters(w), w.n))


def braid_equal(u: "BraidWord | PureWord", v: "BraidWord | PureWord",
                image_budget: "int | None" = DEFAULT_IMAGE_BUDGET) -> bool:
    """Equality in B_n, decided by the (faithful) Artin representation.

    Two cheap necessary invariants (induced permutation, exponent sum) run
    first.  The image comparison is attempted within image_budget total
    letters; words whose images blow up past that fall back to comparing
    normal forms, a complete invariant whose letter-level action data is
    certified against the image oracle.  image_budget=None forces the
    direct image comparison regardless of size.
    """
    if u.n != v.n:
        raise ValueError("strand count mismatch")
    lu, lv = _sigma_letters(u), _sigma_letters(v)
    if perm(BraidWord(u.n, lu)) != perm(BraidWord(v.n, lv)):
        return False
    if sum(1 if l > 0 else -1 for l in lu) != sum(1 if l > 0 else -1
                                                  for l in lv):
        return False
    try:
        return (_images(lu, u.n, image_budget)
                == _images(lv, v.n, image_budget))
    except ImageBudgetError:
        from .combing import mi_braid
        return mi_braid(BraidWord(u.n, lu)) == mi_braid(BraidWord(v.n, lv))


def a_word(gamma: "BraidWord | PureWord", i: int) -> ReducedWord:
    """A_i(gamma): the conjugator in gamma(x_i) = A_i x_i A_i^-1."""
    n = gamma.n
    if isinstance(gamma, BraidWord) and not is_pure(gamma):
        raise ValueError("a_word requires a pure braid")
    w = _images(_sigma_letters(gamma), n)[i - 1]
    m, r = divmod(len(w), 2)
    if r != 1 or w[m] != i or w[:m] != tuple(-l for l in reversed(w[m + 1:])):
        raise AssertionError(f"gamma(x_{i}) lost the A x_i A^-1 shape: {w}")
    return ReducedWord(w[:m], n)


def occurrence_ratio(gamma: "BraidWord | PureWord", i: int, p: int, q: int,
                     count_signs: str = "both") -> Optional[Fraction]:
    """#x_p / #x_q in A_i(gamma); UNDEFINED (None) when the denominator is 0.

    count_signs: 'both' counts x_r and x_r^-1; 'positive' / 'negative'
    count a single sign only.
    """
    word = a_word(gamma, i).letters

    def count(r: int) -> int:
        if count_signs == "both":
            return sum(1 for l in word if abs(l) == r)
        if count_signs == "positive":
            return sum(1 for l in word if l == r)
        if count_signs == "negative":
            return sum(1 for l in word if l == -r)
        raise ValueError(f"unknown sign policy {count_signs!r}")

    num, den = count(p), count(q)
    if den == 0:
        return UNDEFINED
    return Fraction(num, den)
