"""Combing of the pure braid group: the normal form V_{n-1}...V_1 . pi.

Each level of the semidirect series P_m = F_{m-1} x| P_{m-1} splits a pure
word into a free top part x (over y_j := s_{mj}) and a lower remainder alpha;
recursing on alpha yields the parts V_{n-1}, ..., V_1.  The conjugation
action of P_{m-1} on F_{m-1} is realized through the rank-(m-1) braid action
on the y-alphabet (frozen calibrated form; derived by certified search):

    sigma_i   : y_i -> y_{i+1},            y_{i+1} -> y_{i+1} y_i y_{i+1}^-1
    sigma_i^-1: y_i -> y_i^-1 y_{i+1} y_i, y_{i+1} -> y_i

composed left-to-right, like the x-alphabet representation.  Note this is a
different variant than the x-action in artin.py: the two are anchored by
independent reference tables and are not interchangeable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .artin import _subst
from .braids import (BraidWord, Permutation, PureLetter, PureWord,
                     _expand_letters, _schreier_step, conjugate_pure,
                     coset_decompose, identity_perm, parse_braid_tokens,
                     perm, positive_lift, print_braid, sigma_to_pure)
from .words import ParseError, ReducedWord, _inv, _red_append

DEFAULT_LENGTH_GUARD = 10 ** 6


class LengthGuardError(RuntimeError):
    """Combing exceeded the configured total-letter budget."""


def _conj_gen_images(letter: int, m: int) -> list[list[int]]:
    i = abs(letter)
    g = [[k] for k in range(1, m + 1)]
    if letter > 0:
        g[i - 1] = [i + 1]
        g[i] = [i + 1, i, -(i + 1)]
    else:
        g[i - 1] = [-i, i + 1, i]
        g[i] = [i]
    return g


def _conj_images(sigma_letters: Sequence[int], m: int) -> list[list[int]]:
    ims: list[list[int]] = [[k] for k in range(1, m + 1)]
    for l in sigma_letters:
        i = abs(l)
        a, b = ims[i - 1], ims[i]
        if l > 0:  # y_i -> y_{i+1}, y_{i+1} -> y_{i+1} y_i y_{i+1}^-1
            ims[i - 1] = b
            ims[i] = _red_append(_red_append(list(b), a), _inv(b))
        else:  # y_i -> y_i^-1 y_{i+1} y_i, y_{i+1} -> y_i
            ims[i - 1] = _red_append(_red_append(_inv(a), b), a)
            ims[i] = a
    return ims


def _apply_pure_conj(images: list[list[int]], j: int, i: int, sg: int,
                     m: int) -> list[list[int]]:
    """Update rho images by one s_ji^sg, sharing untouched entries."""
    g = _pure_conj_images(j, i, sg, m)
    return [images[k] if g[k] == (k + 1,) else _subst(images, g[k])
            for k in range(m)]


@lru_cache(maxsize=None)
def _pure_conj_images(j: int, i: int, sg: int, m: int) -> tuple[tuple[int, ...], ...]:
    """Images of y_1..y_m under conjugation by s_ji^sg (j <= m)."""
    return tuple(tuple(w) for w in _conj_images(_expand_letters(j, i, sg), m))


def rho_action(alpha: PureWord, f: ReducedWord) -> ReducedWord:
    """The reduced word for alpha . f . alpha^-1 in F_m, m = alpha.n."""
    m = alpha.n
    if f.rank != m:
        raise ValueError("rank mismatch")
    ims = [[k] for k in range(1, m + 1)]
    for (j, i), sg in alpha.letters:
        ims = _apply_pure_conj(ims, j, i, sg, m)
    return ReducedWord(tuple(_subst(ims, f.letters)), m)


@dataclass(frozen=True)
class SplitState:
    x: ReducedWord  # over the y-alphabet of rank n-1
    alpha: PureWord  # rank n-1 remainder


def split(gamma: PureWord) -> SplitState:
    """gamma = x . alpha; alpha is gamma with the top-row letters deleted."""
    m = gamma.n - 1
    x: list[int] = []
    alpha: list[PureLetter] = []
    images = [[k] for k in range(1, m + 1)]
    for (j, i), sg in gamma.letters:
        if j == gamma.n:
            im = images[i - 1] if sg > 0 else _inv(images[i - 1])
            _red_append(x, im)
        else:
            alpha.append(((j, i), sg))
            images = _apply_pure_conj(images, j, i, sg, m)
    return SplitState(ReducedWord(tuple(x), m), PureWord(m, tuple(alpha)))


@dataclass(frozen=True)
class MIForm:
    """parts[0] = V_{n-1}, ..., parts[n-2] = V_1; V_m over {s_{(m+1)j}}."""

    n: int
    parts: tuple[ReducedWord, ...]
    coset: BraidWord

    def __post_init__(self):
        if len(self.parts) != self.n - 1:
            raise ValueError("need n-1 parts")
        for lvl, p in enumerate(self.parts):
            if p.rank != self.n - 1 - lvl:
                raise ValueError(f"part {lvl} has wrong rank {p.rank}")


def identity_form(n: int) -> MIForm:
    return MIForm(n, tuple(ReducedWord((), n - 1 - k) for k in range(n - 1)),
                  BraidWord(n, ()))


def mi_pure(gamma: PureWord,
            length_guard: int = DEFAULT_LENGTH_GUARD) -> MIForm:
    parts: list[ReducedWord] = []
    cur = gamma
    total = 0
    while cur.n >= 2:
        st = split(cur)
        total += len(st.x)
        if total > length_guard:
            raise LengthGuardError(f"combing exceeded {length_guard} letters")
        parts.append(st.x)
        cur = st.alpha
    return MIForm(gamma.n, tuple(parts), BraidWord(gamma.n, ()))


def mi_braid(beta: BraidWord,
             length_guard: int = DEFAULT_LENGTH_GUARD) -> MIForm:
    gamma, pi = coset_decompose(beta)
    form = mi_pure(sigma_to_pure(gamma), length_guard)
    return MIForm(beta.n, form.parts, pi)


def flatten(form: MIForm) -> BraidWord:
    out: list[int] = []
    for lvl, part in enumerate(form.parts):
        row = form.n - lvl
        for l in part.letters:
            out += _expand_letters(row, abs(l), 1 if l > 0 else -1)
    out += list(form.coset.letters)
    return BraidWord(form.n, tuple(out))


def central_element(n: int) -> PureWord:
    """The P_{n-1}-central element of the top free factor, as an s-word.

    Under the frozen expansion convention the commuting element carrying the
    positive sigma-palindrome sigma_{n-1}..sigma_1 sigma_1..sigma_{n-1} is
    s_{n1}^-1 s_{n2}^-1 ... s_{n(n-1)}^-1.
    """
    if n < 3:
        raise ValueError("central_element needs n >= 3")
    return PureWord(n, tuple(((n, k), -1) for k in range(1, n)))


# ---------------------------------------------------------------------------
# incremental stepping
# ---------------------------------------------------------------------------

class MIStepper:
    """Incremental combing along right multiplication by generator letters.

    One level per rank r = n..2: the free part x_r (list of signed y-letters
    over rank r-1) and the images of y_1..y_{r-1} under the conjugation
    action of everything that has passed down to lower levels so far.
    """

    def __init__(self, n: int, length_guard: int = DEFAULT_LENGTH_GUARD):
        self.n = n
        self.length_guard = length_guard
        self.coset_perm: Permutation = identity_perm(n)
        self.xs: list[list[int]] = [[] for _ in range(n - 1)]  # index 0: rank n
        self.images: list[list[list[int]]] = [
            [[k] for k in range(1, r)] for r in range(n, 1, -1)]

    def _size(self) -> int:
        # the guard bounds the normal-form letters, like mi_pure's
        return sum(len(x) for x in self.xs)

    def _push_pure(self, letters: Iterable[PureLetter]) -> None:
        for (j, i), sg in letters:
            lvl = self.n - j
            for r_lvl in range(lvl):  # levels of rank > j: alpha update
                m = self.n - 1 - r_lvl
                self.images[r_lvl] = _apply_pure_conj(
                    self.images[r_lvl], j, i, sg, m)
            im = self.images[lvl][i - 1]
            _red_append(self.xs[lvl], im if sg > 0 else _inv(im))
        if self._size() > self.length_guard:
            raise LengthGuardError(
                f"combing exceeded {self.length_guard} letters")

    def step(self, letter: "int | PureLetter") -> None:
        """Multiply on the right by sigma_i^+-1 (int) or s_ji^+-1 (PureLetter)."""
        if isinstance(letter, int):
            self.coset_perm, emitted = _schreier_step(
                self.coset_perm, letter, self.n)
            self._push_pure(emitted)
        else:
            if self.coset_perm.is_identity():
                self._push_pure([letter])
            else:
                pi = positive_lift(self.coset_perm)
                self._push_pure(conjugate_pure(pi, (letter,)))

    def form(self) -> MIForm:
        parts = tuple(ReducedWord(tuple(x), self.n - 1 - lvl)
                      for lvl, x in enumerate(self.xs))
        return MIForm(self.n, parts, positive_lift(self.coset_perm))


def mi_step(state: MIStepper, letter: "int | PureLetter") -> MIForm:
    state.step(letter)
    return state.form()


# ---------------------------------------------------------------------------
# text form: parts joined by ' | ', then ' ; ' and the coset sigma-word
# ---------------------------------------------------------------------------

def print_mi(form: MIForm) -> str:
    cols = []
    for lvl, part in enumerate(form.parts):
        row = form.n - lvl
        if part.is_empty():
            cols.append("e")
        else:
            cols.append(" ".join(
                f"s{row}.{abs(l)}" + ("^-1" if l < 0 else "")
                for l in part.letters))
    coset = print_braid(form.coset)
    return " | ".join(cols) + " ; " + coset


def parse_mi(text: str, n: int) -> MIForm:
    try:
        body, coset_text = text.rsplit(" ; ", 1)
    except ValueError:
        raise ParseError("missing ' ; ' coset separator", 0)
    cols = body.split(" | ")
    if len(cols) != n - 1:
        raise ParseError(f"expected {n - 1} parts, got {len(cols)}", 0)
    parts = []
    for lvl, col in enumerate(cols):
        row = n - lvl
        letters: list[int] = []
        for pos, (kind, j, i, sg) in enumerate(parse_braid_tokens(col)):
            if kind != "s" or j != row:
                raise ParseError(f"part {lvl} admits only s{row}.* tokens", pos)
            letters.append(i * sg)
        parts.append(ReducedWord(tuple(letters), row - 1))
    coset_letters: list[int] = []
    for pos, (kind, i, _, sg) in enumerate(parse_braid_tokens(coset_text)):
        if kind != "b":
            raise ParseError("coset must be a sigma-word", pos)
        coset_letters.append(i * sg)
    return MIForm(n, tuple(parts), BraidWord(n, tuple(coset_letters)))


def flat_tokens(form: MIForm) -> list[str]:
    """Serialization used for lcp diagnostics: part tokens with explicit
    separators, so part-boundary shifts register as divergence."""
    toks: list[str] = []
    for lvl, part in enumerate(form.parts):
        row = form.n - lvl
        toks += [f"s{row}.{abs(l)}" + ("^-1" if l < 0 else "")
                 for l in part.letters]
        toks.append("|")
    toks[-1] = ";"
    toks += [f"b{abs(l)}" + ("^-1" if l < 0 else "")
             for l in form.coset.letters]
    return toks
