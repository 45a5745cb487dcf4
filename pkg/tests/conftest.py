"""Shared strategies and seeded sampling helpers.

Words of shift automorphisms can grow operator images multiplicatively, so
both the hypothesis strategy and the seeded sampler bound the shape of the
composed image; unbounded towers make exact tests intractable, not wrong.
"""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from weylnil import Fourier, FourierInverse, ShiftD, ShiftX, UniPoly, WeylElement


def shape_bound(word, x_deg: int, order: int) -> int:
    """Upper bound for max(x-degree, order) of the image of an element with
    the given shape under the word (last entry applied first)."""
    for gen in reversed(word):
        if isinstance(gen, (Fourier, FourierInverse)):
            x_deg, order = order, x_deg
        elif isinstance(gen, ShiftD):
            x_deg += order * max(gen.poly.degree - 1, 0)
        elif isinstance(gen, ShiftX):
            order += x_deg * max(gen.poly.degree - 1, 0)
    return max(x_deg, order)


@st.composite
def weyl_elements(draw, max_terms=5, max_exp=4, side="x"):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        i = draw(st.integers(0, max_exp))
        j = draw(st.integers(0, max_exp))
        num = draw(st.integers(-9, 9))
        den = draw(st.integers(1, 4))
        terms[(i, j)] = terms.get((i, j), Fraction(0)) + Fraction(num, den)
    return WeylElement(terms, side)


@st.composite
def shift_polys(draw, max_deg=4):
    deg = draw(st.integers(1, max_deg))
    coeffs = [0] + [draw(st.integers(-4, 4)) for _ in range(deg)]
    return UniPoly(coeffs)


@st.composite
def auto_words(draw, max_len=3, max_deg=4, max_image=16, start=(3, 3)):
    """Generator words kept small enough for exact whole-image comparisons."""
    n = draw(st.integers(0, max_len))
    word: list = []
    for _ in range(n):
        kind = draw(st.sampled_from(["shiftX", "shiftD", "fourier"]))
        if kind == "fourier":
            candidate = Fourier()
        elif kind == "shiftX":
            candidate = ShiftX(draw(shift_polys(max_deg)))
        else:
            candidate = ShiftD(draw(shift_polys(max_deg)))
        if shape_bound([candidate] + word, *start) > max_image:
            break
        word.insert(0, candidate)
    return tuple(word)


def rand_element(rng: random.Random, max_terms=8, max_exp=6, max_num=100, max_den=100, side="x"):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        key = (rng.randint(0, max_exp), rng.randint(0, max_exp))
        c = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        terms[key] = terms.get(key, Fraction(0)) + c
    return WeylElement(terms, side)


def rand_shift_poly(rng: random.Random, min_deg=1, max_deg=5):
    deg = rng.randint(min_deg, max_deg)
    coeffs = [0] + [rng.randint(-3, 3) for _ in range(deg - 1)]
    coeffs.append(rng.choice((-3, -2, -1, 1, 2, 3)))
    return UniPoly(coeffs)


def rand_word(rng: random.Random, max_len=4, max_deg=5, max_image=16):
    """Seeded word with length <= max_len and degrees <= max_deg whose
    composed image of small elements stays within max_image."""
    while True:
        word = []
        for _ in range(rng.randint(0, max_len)):
            kind = rng.choice(("shiftX", "shiftD", "fourier"))
            if kind == "fourier":
                word.append(Fourier())
            elif kind == "shiftX":
                word.append(ShiftX(rand_shift_poly(rng, 1, max_deg)))
            else:
                word.append(ShiftD(rand_shift_poly(rng, 1, max_deg)))
        if shape_bound(word, 3, 3) <= max_image:
            return tuple(word)
