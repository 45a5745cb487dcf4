"""Independent brute-force oracle: normal ordering by single swaps.

Monomial products are represented as letter words over {"x", "d"} and
rewritten one adjacent ``d x -> x d + 1`` swap at a time until no ``d``
stands left of an ``x``.  Deliberately naive; kept independent of the
closed-form exchange rule used by the package.
"""

from __future__ import annotations

from functools import lru_cache

from weylnil import WeylElement


@lru_cache(maxsize=None)
def _normalize_word(word: tuple) -> tuple:
    """Map a letter word to a sorted tuple of ((i, j), integer coeff)."""
    for idx in range(len(word) - 1):
        if word[idx] == "d" and word[idx + 1] == "x":
            swapped = word[:idx] + ("x", "d") + word[idx + 2 :]
            dropped = word[:idx] + word[idx + 2 :]
            acc = {}
            for w in (swapped, dropped):
                for key, c in _normalize_word(w):
                    acc[key] = acc.get(key, 0) + c
            return tuple(sorted((k, c) for k, c in acc.items() if c != 0))
    return (((word.count("x"), word.count("d")), 1),)


def slow_monomial_product(i1: int, j1: int, i2: int, j2: int) -> WeylElement:
    """Normal-ordered product of x^i1 d^j1 and x^i2 d^j2, by single swaps."""
    word = ("x",) * i1 + ("d",) * j1 + ("x",) * i2 + ("d",) * j2
    return WeylElement(dict(_normalize_word(word)))
