"""Weight filtrations and the Newton-polygon data used by the descent.

A weight pair assigns ``x_weight*i + d_weight*j`` to the monomial
``x^i * D^j``.  For an operator the terms of maximal weight form a
commutative bivariate polynomial in ``X`` (for the coordinate) and ``Y``
(for the derivative); the descent needs exactly one structural fact about
it, namely whether it is a pure power ``(Y^r - c*X)^k``.  This module
computes the weight data, selects the weights from the upper Newton edge
through ``(0, order)``, and recognizes that factored shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, gcd
from typing import Dict, Optional, Tuple, Union

from .element import WeylElement, profile
from .errors import ConstantCoefficientsSignal, InvariantViolation, NotNormalizableError

BiPoly = Dict[Tuple[int, int], Fraction]


@dataclass(frozen=True)
class Weight:
    """Primitive positive integer weight pair for the (x, D) grading."""

    x_weight: int
    d_weight: int

    def __post_init__(self):
        if self.x_weight < 1 or self.d_weight < 1:
            raise ValueError("weights must be positive integers")
        if gcd(self.x_weight, self.d_weight) != 1:
            raise ValueError("weight pair must be coprime")

    def of(self, i: int, j: int) -> int:
        return self.x_weight * i + self.d_weight * j

    def as_tuple(self) -> Tuple[int, int]:
        return (self.x_weight, self.d_weight)


def weight_value(e: WeylElement, w: Weight) -> int:
    """Maximal weight over the support; undefined for the zero element."""
    if e.is_zero():
        raise ValueError("weight value of the zero element is undefined")
    return max(w.of(i, j) for i, j in e.terms)


@dataclass(frozen=True, eq=False)
class NewtonData:
    """Top-weight data of one element for one weight pair.

    ``assoc`` collects the coefficients of the maximal-weight terms as a
    commutative polynomial in X (coordinate direction) and Y (derivative
    direction); it is weight-homogeneous of weight ``value`` by construction.
    """

    weight: Weight
    value: int
    top_support: frozenset
    assoc: BiPoly

    def __eq__(self, other):
        if not isinstance(other, NewtonData):
            return NotImplemented
        return (
            self.weight == other.weight
            and self.value == other.value
            and self.top_support == other.top_support
            and dict(self.assoc) == dict(other.assoc)
        )


def associated_poly(e: WeylElement, w: Weight) -> NewtonData:
    """Collect the top-weight terms of ``e`` into a commutative polynomial."""
    v = weight_value(e, w)
    assoc = {k: c for k, c in e.terms.items() if w.of(*k) == v}
    return NewtonData(w, v, frozenset(assoc), assoc)


def format_bivariate(assoc: BiPoly) -> str:
    """Render an associated polynomial like ``Y^4 + 2*X*Y^2 + X^2``."""
    if not assoc:
        return "0"
    parts = []
    for i, j in sorted(assoc, key=lambda k: (-k[1], k[0])):
        c = assoc[(i, j)]
        mag = abs(c)
        factors = []
        if i == 1:
            factors.append("X")
        elif i > 1:
            factors.append(f"X^{i}")
        if j == 1:
            factors.append("Y")
        elif j > 1:
            factors.append(f"Y^{j}")
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)


def choose_weights(e: WeylElement) -> Tuple[Weight, Tuple[int, int]]:
    """Weights from the upper Newton edge anchored at ``(0, order)``.

    Draws the line through ``(0, N)`` and a support point ``(k0, m0)`` with
    ``k0 > 0`` such that all support lies on or below it, then returns the
    primitive positive solution of ``N*sigma == k0*rho + m0*sigma`` together
    with the anchor point.  Among points on the line the one with the
    greatest coordinate exponent is reported.
    """
    prof = profile(e)
    n = prof.order
    if n < 1 or not prof.leading.is_constant():
        raise NotNormalizableError("operator must have a constant nonzero top coefficient")
    if not e.depends_on_x():
        raise ConstantCoefficientsSignal()

    best: Optional[Tuple[int, int]] = None
    for i, j in e.terms:
        if i == 0:
            continue
        if best is None:
            best = (i, j)
            continue
        k0, m0 = best
        # shallower drop wins: (n - j)/i < (n - m0)/k0, compared exactly
        lhs = (n - j) * k0
        rhs = (n - m0) * i
        if lhs < rhs or (lhs == rhs and i > k0):
            best = (i, j)
    assert best is not None
    k0, m0 = best
    g = gcd(n - m0, k0)
    w = Weight((n - m0) // g, k0 // g)
    limit = n * w.d_weight
    if any(w.of(i, j) > limit for i, j in e.terms):
        raise InvariantViolation("support escapes above the chosen Newton edge")
    return w, (k0, m0)


class FormIssue(Enum):
    """Why the top-weight polynomial is not a usable pure binomial power."""

    MONOMIAL = "monomial"
    RATIO_NOT_INTEGER = "ratio-not-integer"
    LAMBDA_INCONSISTENT = "lambda-inconsistent"
    POSITIVE_Y_POWER = "positive-y-power"


@dataclass(frozen=True)
class FactoredForm:
    """Exact presentation ``Y^y_power * (Y^ratio - scale*X)^multiplicity``."""

    y_power: int
    ratio: int
    multiplicity: int
    scale: Fraction

    def expand(self) -> BiPoly:
        out: BiPoly = {}
        for s in range(self.multiplicity + 1):
            c = comb(self.multiplicity, s) * (-self.scale) ** s
            out[(s, self.y_power + self.ratio * (self.multiplicity - s))] = Fraction(c)
        return out

    def format(self) -> str:
        y = "Y" if self.ratio == 1 else f"Y^{self.ratio}"
        c = self.scale
        if c > 0:
            inner = f"{y} - {c}*X" if c != 1 else f"{y} - X"
        else:
            inner = f"{y} + {-c}*X" if c != -1 else f"{y} + X"
        body = f"({inner})^{self.multiplicity}" if self.multiplicity != 1 else f"({inner})"
        if self.y_power == 0:
            return body
        yy = "Y" if self.y_power == 1 else f"Y^{self.y_power}"
        return f"{yy}*{body}"


@dataclass(frozen=True)
class FormDiagnostic:
    """Structured reason why recognition failed.

    ``equal_weights`` marks the degenerate ``x_weight == d_weight`` edge
    (two independent linear factors are then possible), and
    ``strictly_semisimple`` marks the harmonic-oscillator shape
    ``Y^2 + c*X^2``, whose operator acts diagonally rather than nilpotently.
    ``partial`` carries the factorization that was found when the shape is
    correct except for a positive Y power.
    """

    issue: FormIssue
    message: str
    equal_weights: bool = False
    strictly_semisimple: bool = False
    partial: Optional[FactoredForm] = None


def factor_form(nd: NewtonData, order: int) -> Union[FactoredForm, FormDiagnostic]:
    """Recognize ``assoc == Y^n * (Y^r - scale*X)^k`` exactly.

    The candidate parameters are forced: ``k`` is the X-degree, ``r`` the
    weight ratio, ``n = order - r*k``, and ``scale`` is read off the
    coefficient of ``X * Y^(n + r*(k-1))``.  A full expansion comparison
    then accepts or rejects.  Success requires ``n == 0``; a matching shape
    with ``n > 0`` is reported as a diagnostic carrying the factorization.
    """
    f = nd.assoc
    if f.get((0, order)) != 1:
        raise ValueError("top-weight polynomial must have monic Y^order term")
    equal = nd.weight.x_weight == nd.weight.d_weight
    if len(f) == 1:
        return FormDiagnostic(
            FormIssue.MONOMIAL, "top-weight part is a single monomial", equal_weights=equal
        )
    rho, sigma = nd.weight.x_weight, nd.weight.d_weight
    if rho % sigma != 0:
        return FormDiagnostic(
            FormIssue.RATIO_NOT_INTEGER,
            f"weight ratio {rho}/{sigma} is not an integer",
            equal_weights=equal,
        )
    r = rho // sigma
    k = max(i for i, _ in f)
    n = order - r * k
    if n < 0:
        return FormDiagnostic(
            FormIssue.LAMBDA_INCONSISTENT,
            "X-degree exceeds what the weight ratio allows",
            equal_weights=equal,
        )
    semisimple = equal and order == 2 and k == 2 and (2, 0) in f and (1, 1) not in f
    cross = (1, n + r * (k - 1))
    scale = -f.get(cross, Fraction(0)) / k
    if scale == 0:
        return FormDiagnostic(
            FormIssue.LAMBDA_INCONSISTENT,
            f"cross term at X*Y^{cross[1]} absent",
            equal_weights=equal,
            strictly_semisimple=semisimple,
        )
    candidate = FactoredForm(n, r, k, scale)
    if candidate.expand() != f:
        return FormDiagnostic(
            FormIssue.LAMBDA_INCONSISTENT,
            "expansion of the candidate binomial power does not match",
            equal_weights=equal,
            strictly_semisimple=semisimple,
        )
    if n > 0:
        return FormDiagnostic(
            FormIssue.POSITIVE_Y_POWER,
            f"positive Y power: factors as {candidate.format()}",
            equal_weights=equal,
            partial=candidate,
        )
    return candidate
