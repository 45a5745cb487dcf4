"""Generator automorphisms, words of them, and the partner anti-involution.

Three primitive generator kinds act on the algebra:

* ``ShiftX(s)``   : x -> x + s'(D),  D -> D      (s a polynomial in D)
* ``ShiftD(r)``   : D -> D - r'(x),  x -> x      (r a polynomial in x)
* ``Fourier()``   : x -> D,  D -> -x, with ``FourierInverse()`` its inverse
  (x -> -D, D -> x; also reachable as the Fourier cube).

Constant terms of the stored polynomials act trivially and are dropped on
construction, so every generator has one canonical representation.

A word is a sequence of generators read like a composition chain: the LAST
entry is applied first, so ``apply_word([g, h], a) == g(h(a))``.  With this
convention ``invert_word`` reverses the sequence and inverts each entry, and
``compose(first, then)`` concatenates so that ``first`` acts first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, perm
from typing import Sequence, Tuple, Union

from .element import WeylElement, commutator
from .poly import UniPoly


@dataclass(frozen=True)
class ShiftX:
    """x -> x + poly'(D); the exponential of bracketing with poly(D)."""

    poly: UniPoly

    def __post_init__(self):
        object.__setattr__(self, "poly", self.poly.drop_constant())


@dataclass(frozen=True)
class ShiftD:
    """D -> D - poly'(x); the exponential of bracketing with poly(x)."""

    poly: UniPoly

    def __post_init__(self):
        object.__setattr__(self, "poly", self.poly.drop_constant())


@dataclass(frozen=True)
class Fourier:
    """x -> D, D -> -x."""


@dataclass(frozen=True)
class FourierInverse:
    """x -> -D, D -> x."""


Generator = Union[ShiftX, ShiftD, Fourier, FourierInverse]
AutoWord = Tuple[Generator, ...]


def _apply_fourier(e: WeylElement, inverse: bool) -> WeylElement:
    out: dict = {}
    for (i, j), c in e.terms.items():
        sign = -1 if (i if inverse else j) % 2 else 1
        # image of x^i D^j is (+-1) D^i x^j, reordered term by term
        for t in range(min(i, j) + 1):
            w = sign * perm(j, t) * comb(i, t)
            key = (j - t, i - t)
            out[key] = out.get(key, 0) + w * c
    return WeylElement._raw(out, e.side)


def _powers(base: WeylElement, n: int) -> list:
    pows = [WeylElement.one(base.side)]
    for _ in range(n):
        pows.append(pows[-1] * base)
    return pows


def apply_generator(gen: Generator, e: WeylElement) -> WeylElement:
    """Image of an element under one generator, in normal order."""
    if isinstance(gen, Fourier):
        return _apply_fourier(e, inverse=False)
    if isinstance(gen, FourierInverse):
        return _apply_fourier(e, inverse=True)
    if isinstance(gen, ShiftX):
        shift = gen.poly.derivative()
        if shift.is_zero() or e.is_zero():
            return e
        base = WeylElement({(1, 0): 1}, e.side) + WeylElement.from_d_poly(shift, e.side)
        pows = _powers(base, e.x_degree)
        out: dict = {}
        for (i, j), c in e.terms.items():
            for (a, b), pc in pows[i].terms.items():
                key = (a, b + j)
                out[key] = out.get(key, 0) + pc * c
        return WeylElement._raw(out, e.side)
    if isinstance(gen, ShiftD):
        shift = gen.poly.derivative()
        if shift.is_zero() or e.is_zero():
            return e
        base = WeylElement({(0, 1): 1}, e.side) - WeylElement.from_x_poly(shift, e.side)
        pows = _powers(base, e.order)
        out = {}
        for (i, j), c in e.terms.items():
            for (a, b), pc in pows[j].terms.items():
                key = (a + i, b)
                out[key] = out.get(key, 0) + pc * c
        return WeylElement._raw(out, e.side)
    raise TypeError(f"unknown generator {gen!r}")


def apply_word(word: Sequence[Generator], e: WeylElement) -> WeylElement:
    """Apply a word, last entry first (composition-chain reading)."""
    for gen in reversed(word):
        e = apply_generator(gen, e)
    return e


def invert_generator(gen: Generator) -> Generator:
    if isinstance(gen, ShiftX):
        return ShiftX(-gen.poly)
    if isinstance(gen, ShiftD):
        return ShiftD(-gen.poly)
    if isinstance(gen, Fourier):
        return FourierInverse()
    if isinstance(gen, FourierInverse):
        return Fourier()
    raise TypeError(f"unknown generator {gen!r}")


def invert_word(word: Sequence[Generator]) -> AutoWord:
    """Reversed sequence of inverted generators; a two-sided inverse."""
    return tuple(invert_generator(g) for g in reversed(word))


def compose(first: Sequence[Generator], then: Sequence[Generator]) -> AutoWord:
    """Word acting as ``first`` followed by ``then``."""
    return tuple(then) + tuple(first)


def is_identity_generator(gen: Generator) -> bool:
    return isinstance(gen, (ShiftX, ShiftD)) and gen.poly.is_zero()


def ccr_preserved(word: Sequence[Generator], side: str = "x") -> bool:
    """Self-check that [word(D), word(x)] == 1."""
    wd = apply_word(word, WeylElement({(0, 1): 1}, side))
    wx = apply_word(word, WeylElement({(1, 0): 1}, side))
    return commutator(wd, wx) == WeylElement.one(side)


def anti_involution(e: WeylElement) -> WeylElement:
    """Order-reversing swap between the x and z copies of the algebra.

    Sends ``x^i D^j`` on one side to ``x^j D^i`` on the other, preserving
    coefficients; anti-multiplicativity makes the image normal-ordered as is.
    """
    other = "z" if e.side == "x" else "x"
    return WeylElement({(j, i): c for (i, j), c in e.terms.items()}, other)


def describe_generator(gen: Generator) -> str:
    if isinstance(gen, ShiftX):
        return f"shiftX({gen.poly.format('D')})"
    if isinstance(gen, ShiftD):
        return f"shiftD({gen.poly.format('x')})"
    if isinstance(gen, Fourier):
        return "fourier"
    return "fourier^-1"
