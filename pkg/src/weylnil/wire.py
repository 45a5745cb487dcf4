"""JSON wire formats for elements, automorphism words, and certificates.

Element document::

    {"side": "x"|"z", "terms": [{"xexp": int, "dexp": int, "coeff": "p/q"}]}

with terms sorted ascending by (xexp, dexp) and coefficients as exact
rational strings.  Word document: ordered list (first entry applied last,
matching composition notation) of::

    {"kind": "shiftX"|"shiftD", "poly": ["c0", "c1", ...]}   or
    {"kind": "fourier"}

where shift polynomials are coefficient strings ascending by degree with the
constant term required to be zero; the inverse Fourier swap is encoded as
three consecutive fourier entries.  Certificate document::

    {"word": [...], "q": ["c0", ...], "side": "x"|"d"}

Serialization followed by parsing is the identity on all three kinds.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List

from .automorphism import Fourier, FourierInverse, Generator, ShiftD, ShiftX
from .descent import (
    Certificate,
    NotStrictlyNilpotent,
    StageRecord,
    StrictlyNilpotent,
    TriviallyConstant,
    Verdict,
)
from .element import WeylElement
from .errors import WireFormatError
from .poly import UniPoly

_RATIONAL = re.compile(r"-?\d+(/\d+)?\Z")


def _coeff_from_str(s) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.match(s):
        raise WireFormatError(f"coefficient must be a rational string 'p' or 'p/q', got {s!r}")
    return Fraction(s)


def element_to_doc(e: WeylElement) -> dict:
    terms = [
        {"xexp": i, "dexp": j, "coeff": str(e.terms[(i, j)])}
        for i, j in sorted(e.terms)
    ]
    return {"side": e.side, "terms": terms}


def element_from_doc(doc) -> WeylElement:
    if not isinstance(doc, dict) or set(doc) != {"side", "terms"}:
        raise WireFormatError("element document must have exactly 'side' and 'terms'")
    side = doc["side"]
    if side not in ("x", "z"):
        raise WireFormatError(f"element side must be 'x' or 'z', got {side!r}")
    if not isinstance(doc["terms"], list):
        raise WireFormatError("element terms must be a list")
    terms = {}
    for entry in doc["terms"]:
        if not isinstance(entry, dict) or set(entry) != {"xexp", "dexp", "coeff"}:
            raise WireFormatError("term entry must have exactly xexp, dexp, coeff")
        i, j = entry["xexp"], entry["dexp"]
        if not isinstance(i, int) or not isinstance(j, int) or i < 0 or j < 0:
            raise WireFormatError("term exponents must be nonnegative integers")
        if (i, j) in terms:
            raise WireFormatError(f"duplicate term ({i}, {j})")
        terms[(i, j)] = _coeff_from_str(entry["coeff"])
    return WeylElement(terms, side)


def _poly_to_strings(p: UniPoly) -> List[str]:
    if p.is_zero():
        return ["0"]
    return [str(c) for c in p.coeffs]


def _poly_from_strings(items, *, zero_constant: bool) -> UniPoly:
    if not isinstance(items, list) or not items:
        raise WireFormatError("polynomial must be a nonempty list of coefficient strings")
    coeffs = [_coeff_from_str(s) for s in items]
    if zero_constant and coeffs[0] != 0:
        raise WireFormatError("shift polynomial requires constant term '0'")
    return UniPoly(coeffs)


def word_to_doc(word) -> list:
    out = []
    for gen in word:
        if isinstance(gen, ShiftX):
            out.append({"kind": "shiftX", "poly": _poly_to_strings(gen.poly)})
        elif isinstance(gen, ShiftD):
            out.append({"kind": "shiftD", "poly": _poly_to_strings(gen.poly)})
        elif isinstance(gen, Fourier):
            out.append({"kind": "fourier"})
        elif isinstance(gen, FourierInverse):
            # inverse swap is the threefold swap
            out.extend({"kind": "fourier"} for _ in range(3))
        else:
            raise WireFormatError(f"unknown generator {gen!r}")
    return out


def word_from_doc(doc) -> tuple:
    if not isinstance(doc, list):
        raise WireFormatError("word document must be a list")
    word: List[Generator] = []
    for entry in doc:
        if not isinstance(entry, dict) or "kind" not in entry:
            raise WireFormatError("word entry must be an object with a 'kind'")
        kind = entry["kind"]
        if kind == "fourier":
            if set(entry) - {"kind"}:
                raise WireFormatError("fourier entry carries no other fields")
            word.append(Fourier())
        elif kind in ("shiftX", "shiftD"):
            if set(entry) != {"kind", "poly"}:
                raise WireFormatError("shift entry must have exactly 'kind' and 'poly'")
            poly = _poly_from_strings(entry["poly"], zero_constant=True)
            word.append(ShiftX(poly) if kind == "shiftX" else ShiftD(poly))
        else:
            raise WireFormatError(f"unknown generator kind {kind!r}")
    return tuple(word)


def certificate_to_doc(cert: Certificate) -> dict:
    return {
        "word": word_to_doc(cert.word),
        "q": _poly_to_strings(cert.gen_poly),
        "side": cert.side,
    }


def certificate_from_doc(doc) -> Certificate:
    if not isinstance(doc, dict) or set(doc) != {"word", "q", "side"}:
        raise WireFormatError("certificate document must have exactly word, q, side")
    side = doc["side"]
    if side not in ("x", "d"):
        raise WireFormatError(f"certificate side must be 'x' or 'd', got {side!r}")
    q = _poly_from_strings(doc["q"], zero_constant=False)
    if q.is_constant():
        raise WireFormatError("certificate polynomial must be nonconstant")
    return Certificate(word_from_doc(doc["word"]), q, side)


def _stage_to_doc(rec: StageRecord) -> dict:
    return {
        "stage": rec.stage,
        "order": rec.order,
        "weight": list(rec.weight),
        "value": rec.value,
        "support_point": list(rec.support_point),
        "assoc": rec.assoc,
        "form": {
            "y_power": rec.form.y_power,
            "ratio": rec.form.ratio,
            "multiplicity": rec.form.multiplicity,
            "scale": str(rec.form.scale),
        },
        "shift_image": rec.shift_image,
        "generators": list(rec.generators),
        "scale": str(rec.scale),
        "order_after": rec.order_after,
    }


def verdict_to_doc(verdict: Verdict) -> dict:
    if isinstance(verdict, StrictlyNilpotent):
        return {
            "verdict": "strictly-nilpotent",
            "certificate": certificate_to_doc(verdict.certificate),
            "prologue": list(verdict.prologue),
            "stages": [_stage_to_doc(r) for r in verdict.stages],
        }
    if isinstance(verdict, NotStrictlyNilpotent):
        return {
            "verdict": "not-strictly-nilpotent",
            "reason": verdict.reason.value,
            "stage": verdict.stage,
            "detail": verdict.detail,
            "prologue": list(verdict.prologue),
            "stages": [_stage_to_doc(r) for r in verdict.stages],
        }
    if isinstance(verdict, TriviallyConstant):
        return {"verdict": "trivially-constant", "value": str(verdict.value)}
    raise TypeError(f"unknown verdict {verdict!r}")
