"""Strict-nilpotency decision procedure and the constructions built on it.

``decide`` classifies an operator by infinite descent on its order.  After
scaling monic and killing the next-to-top coefficient, each stage reads the
Newton-edge weights, demands that the top-weight polynomial is a pure
binomial power ``(Y^r - c*X)^k``, and applies a shift along the derivative
that collapses the operator onto coordinate degree ``k``.  A second shift
clears the ``x^(k-1)`` slice, an inverse Fourier swap returns to a monic
derivative-side operator of order ``k = N/r <= N/2``, and the stage repeats
until the iterate is free of the coordinate.  Inverting the accumulated
generators yields a certificate: an automorphism word and a polynomial whose
evaluation at the derivative reproduces the input exactly.  Failure of the
shape test at any stage is a sound rejection, because a nilpotently acting
operator admits the binomial-power presentation at every stage.

Everything is exact rational arithmetic; every certificate is re-verified by
recomputation before it is returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from enum import Enum
from typing import List, Optional, Sequence, Tuple, Union

from .automorphism import (
    AutoWord,
    Fourier,
    FourierInverse,
    Generator,
    ShiftD,
    ShiftX,
    apply_generator,
    apply_word,
    anti_involution,
    describe_generator,
    invert_generator,
    invert_word,
    is_identity_generator,
)
from .element import (
    WeylElement,
    commutator,
    coordinate,
    derivative,
    poly_at,
    profile,
)
from .errors import (
    InvariantViolation,
    NotNormalizableError,
    NotStrictlyNilpotentError,
    UnsupportedSideError,
)
from .filtration import (
    FactoredForm,
    FormDiagnostic,
    FormIssue,
    Weight,
    associated_poly,
    choose_weights,
    factor_form,
    format_bivariate,
    weight_value,
)
from .poly import UniPoly


class Reason(Enum):
    """Enumerated causes for a negative verdict."""

    NONCONSTANT_LEADING = "nonconstant-leading"
    ASSOC_NOT_FACTORED = "assoc-not-factored"
    POSITIVE_Y_MULTIPLICITY = "positive-y-multiplicity"
    STRICTLY_SEMISIMPLE = "strictly-semisimple"
    IRRATIONAL_DATA_REQUIRED = "irrational-data-required"


@dataclass(frozen=True)
class Certificate:
    """Witness that an operator is an automorphism image of a polynomial.

    ``side`` is ``"d"`` when the generator polynomial is evaluated at the
    derivative and ``"x"`` when at the coordinate;
    ``apply_word(word, gen_poly(side generator))`` reproduces the operator.
    """

    word: AutoWord
    gen_poly: UniPoly
    side: str

    def __post_init__(self):
        if self.side not in ("x", "d"):
            raise ValueError("certificate side must be 'x' or 'd'")
        if self.gen_poly.is_constant():
            raise ValueError("certificate polynomial must be nonconstant")


@dataclass(frozen=True)
class StageRecord:
    """Audit log of one descent stage."""

    stage: int
    order: int
    weight: Tuple[int, int]
    value: int
    support_point: Tuple[int, int]
    assoc: str
    form: FactoredForm
    shift_image: str
    generators: Tuple[str, ...]
    scale: Fraction
    order_after: int


@dataclass(frozen=True)
class StrictlyNilpotent:
    certificate: Certificate
    prologue: Tuple[str, ...] = ()
    stages: Tuple[StageRecord, ...] = ()

    @property
    def stage_count(self) -> int:
        return len(self.stages)


@dataclass(frozen=True)
class NotStrictlyNilpotent:
    reason: Reason
    stage: int
    detail: str
    diagnostic: Optional[FormDiagnostic] = None
    prologue: Tuple[str, ...] = ()
    stages: Tuple[StageRecord, ...] = ()


@dataclass(frozen=True)
class TriviallyConstant:
    value: Fraction


Verdict = Union[StrictlyNilpotent, NotStrictlyNilpotent, TriviallyConstant]


def verify_certificate(e: WeylElement, cert: Certificate) -> bool:
    """Recompute the certified image and compare exactly."""
    base = derivative(e.side) if cert.side == "d" else coordinate(e.side)
    return apply_word(cert.word, poly_at(cert.gen_poly, base)) == e


def normalize_subleading(e: WeylElement) -> Tuple[WeylElement, Generator]:
    """Clear the coefficient of D^(order-1) with one coordinate shift.

    For an order-N operator with constant top coefficient c the image of
    ``ShiftD(r)`` has next-to-top coefficient ``V - N*c*r'``, so
    ``r' = V/(N*c)`` forces it to vanish; the vanishing is re-checked on the
    computed image.  Returns the image and the generator used (a zero shift
    when nothing had to be done).
    """
    prof = profile(e)
    if prof.order < 1 or not prof.leading.is_constant():
        raise NotNormalizableError("operator must have constant top coefficient of order >= 1")
    if prof.subleading.is_zero():
        return e, ShiftD(UniPoly.zero())
    lead = prof.leading.constant_value()
    gen = ShiftD((prof.subleading / (prof.order * lead)).antiderivative())
    image = apply_generator(gen, e)
    if not profile(image).subleading.is_zero():
        raise InvariantViolation("next-to-top coefficient survived normalization")
    return image, gen


@dataclass(frozen=True)
class DescentStep:
    """Successful stage: ``generators`` applied to the input (first entry
    first) equal ``scale`` times the monic, normalized ``element``."""

    element: WeylElement
    generators: Tuple[Generator, ...]
    scale: Fraction
    record: StageRecord


@dataclass(frozen=True)
class DescentRejection:
    reason: Reason
    detail: str
    diagnostic: Optional[FormDiagnostic]


def _reason_for(diag: FormDiagnostic) -> Reason:
    if diag.issue is FormIssue.POSITIVE_Y_POWER:
        return Reason.POSITIVE_Y_MULTIPLICITY
    return Reason.ASSOC_NOT_FACTORED


def descent_step(e: WeylElement, stage: int = 1) -> Union[DescentStep, DescentRejection]:
    """One order-reducing stage of the descent.

    Requires a monic operator of order >= 1 with vanishing next-to-top
    coefficient that depends on the coordinate.  On success the returned
    operator is monic of order ``multiplicity = order/ratio``, normalized the
    same way, ready for the next stage.
    """
    prof = profile(e)
    n = prof.order
    if n < 1 or prof.leading != UniPoly.one():
        raise NotNormalizableError("descent stage requires a monic operator of order >= 1")
    if not prof.subleading.is_zero():
        raise ValueError("descent stage requires a vanishing next-to-top coefficient")
    if not e.depends_on_x():
        raise ValueError("descent stage requires dependence on the coordinate")

    w, point = choose_weights(e)
    nd = associated_poly(e, w)
    ff = factor_form(nd, n)
    if isinstance(ff, FormDiagnostic):
        return DescentRejection(_reason_for(ff), ff.message, ff)
    r, k, lam = ff.ratio, ff.multiplicity, ff.scale
    if r < 2:
        raise InvariantViolation(
            "weight ratio 1 after normalization contradicts the vanishing next-to-top coefficient"
        )

    gens: List[Generator] = []
    total = Fraction(1)

    # collapse the derivative structure: x -> x + lam^-1 D^r
    g_main = ShiftX(UniPoly.monomial(r + 1, Fraction(1, r + 1) / lam))
    cur = apply_generator(g_main, e)
    gens.append(g_main)
    shift_image = str(cur)

    c_top = (-lam) ** k
    if cur.x_degree != k or cur.x_slice(k) != UniPoly.const(c_top):
        raise InvariantViolation("collapse did not produce the expected top coordinate slice")
    cur = cur / c_top
    total *= c_top

    # clear the x^(k-1) slice; its degree must sit strictly below the ratio
    edge = cur.x_slice(k - 1)
    if not edge.is_zero():
        if edge.degree >= r:
            raise InvariantViolation("next-to-top coordinate slice exceeds the weight bound")
        g_edge = ShiftX((edge / -k).antiderivative())
        cur = apply_generator(g_edge, cur)
        gens.append(g_edge)
        if not cur.x_slice(k - 1).is_zero():
            raise InvariantViolation("next-to-top coordinate slice survived the clearing shift")

    # swap back to a derivative-side operator and rescale monic
    g_swap = FourierInverse()
    cur = apply_generator(g_swap, cur)
    gens.append(g_swap)
    sign = Fraction((-1) ** k)
    new_prof = profile(cur)
    if new_prof.order != k or new_prof.leading != UniPoly.const(sign):
        raise InvariantViolation("swapped operator is not monic of the predicted order")
    if sign != 1:
        cur = cur / sign
        total *= sign

    cur, g_norm = normalize_subleading(cur)
    if not is_identity_generator(g_norm):
        gens.append(g_norm)

    record = StageRecord(
        stage=stage,
        order=n,
        weight=w.as_tuple(),
        value=nd.value,
        support_point=point,
        assoc=format_bivariate(nd.assoc),
        form=ff,
        shift_image=shift_image,
        generators=tuple(describe_generator(g) for g in gens),
        scale=total,
        order_after=k,
    )
    return DescentStep(cur, tuple(gens), total, record)


def decide(e: WeylElement) -> Verdict:
    """Classify an operator, producing a verified certificate or a reason.

    Constants are reported separately; pure coordinate or pure derivative
    polynomials certify immediately with an empty word.  Otherwise the input
    is scaled monic (switching representation through an inverse Fourier
    swap if only the coordinate-leading side is constant), normalized, and
    descended stage by stage.  The certificate word is the inverse of the
    accumulated generators and the certificate polynomial absorbs all scale
    factors, so the reconstruction is exact; it is re-verified before being
    returned.
    """
    if e.is_constant():
        return TriviallyConstant(e.constant_value())
    if not e.depends_on_d():
        return StrictlyNilpotent(
            Certificate((), e.to_x_poly(), "x"),
            prologue=("input is a polynomial in the coordinate alone",),
        )
    if not e.depends_on_x():
        return StrictlyNilpotent(
            Certificate((), e.to_d_poly(), "d"),
            prologue=("input is a polynomial in the derivative alone",),
        )

    prologue: List[str] = []
    chrono: List[Generator] = []
    scale = Fraction(1)
    cur = e

    prof = profile(cur)
    if not prof.leading.is_constant():
        swapped = apply_generator(FourierInverse(), cur)
        if profile(swapped).leading.is_constant():
            chrono.append(FourierInverse())
            cur = swapped
            prof = profile(cur)
            prologue.append("top coefficient depends on the coordinate; representation swapped")
        else:
            return NotStrictlyNilpotent(
                Reason.NONCONSTANT_LEADING,
                stage=0,
                detail="top coefficient is nonconstant in both representations",
                prologue=tuple(prologue),
            )

    lead = prof.leading.constant_value()
    if lead != 1:
        cur = cur / lead
        scale *= lead
        prologue.append(f"scaled monic by {1 / lead}")

    cur, g_norm = normalize_subleading(cur)
    if not is_identity_generator(g_norm):
        chrono.append(g_norm)
        prologue.append(f"next-to-top coefficient cleared by {describe_generator(g_norm)}")
    prologue.append(
        "stagewise soundness uses invariance of the nilpotency class under the generator maps"
    )

    stages: List[StageRecord] = []
    stage = 0
    while True:
        if not cur.depends_on_x():
            side, q_base = "d", cur.to_d_poly()
            break
        if not cur.depends_on_d():
            side, q_base = "x", cur.to_x_poly()
            break
        stage += 1
        out = descent_step(cur, stage)
        if isinstance(out, DescentRejection):
            return NotStrictlyNilpotent(
                out.reason,
                stage=stage,
                detail=out.detail,
                diagnostic=out.diagnostic,
                prologue=tuple(prologue),
                stages=tuple(stages),
            )
        chrono.extend(out.generators)
        scale *= out.scale
        cur = out.element
        stages.append(out.record)

    word = tuple(invert_generator(g) for g in chrono)
    cert = Certificate(word, q_base * scale, side)
    if not verify_certificate(e, cert):
        raise InvariantViolation("assembled certificate failed re-verification")
    return StrictlyNilpotent(cert, tuple(prologue), tuple(stages))


# ----------------------------------------------------------------------
# bracket-iteration probe
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class NilpotentAt:
    """Iterated bracket vanished: step ``steps`` is zero, step-1 was not."""

    steps: int


@dataclass(frozen=True)
class EigenObstruction:
    """The bracket fixed a scalar direction, certifying non-nilpotence."""

    eigenvalue: Fraction


@dataclass(frozen=True)
class BoundExhausted:
    """No conclusion within the cap; carries the total degree of the last
    iterate as a coarse progress indicator."""

    cap: int
    last_weight: int


AdTestResult = Union[NilpotentAt, EigenObstruction, BoundExhausted]


def _proportional(a: WeylElement, b: WeylElement) -> Optional[Fraction]:
    """Scalar c with a == c*b, when one exists (b nonzero)."""
    if a.terms.keys() != b.terms.keys():
        return None
    ratio = None
    for k, c in a.terms.items():
        r = c / b.terms[k]
        if ratio is None:
            ratio = r
        elif r != ratio:
            return None
    return ratio


def ad_nilpotency_test(op: WeylElement, target: WeylElement, cap: int = 64) -> AdTestResult:
    """Iterate the bracket with ``op`` on ``target`` up to ``cap`` steps."""
    if cap < 1:
        raise ValueError("cap must be positive")
    cur = target
    for m in range(1, cap + 1):
        nxt = commutator(op, cur)
        if nxt.is_zero():
            return NilpotentAt(m)
        if not cur.is_zero():
            ratio = _proportional(nxt, cur)
            if ratio is not None:
                return EigenObstruction(ratio)
        cur = nxt
    return BoundExhausted(cap, weight_value(cur, Weight(1, 1)))


# ----------------------------------------------------------------------
# constructions on top of a certificate
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class BispectralPartner:
    """Partner operator in the spectral variable together with its data.

    ``lambda_op`` lives on the z side; for the certified operator L with
    certificate (word, q) the eigenvalue polynomial is ``f(z) = q(z)`` and
    the dual eigenvalue function is ``theta(x) = x``.
    """

    lambda_op: WeylElement
    f_poly: UniPoly
    theta: WeylElement


def _require_certified(e: WeylElement) -> StrictlyNilpotent:
    verdict = decide(e)
    if not isinstance(verdict, StrictlyNilpotent):
        raise NotStrictlyNilpotentError(verdict)
    return verdict


def bispectral_partner(e: WeylElement) -> BispectralPartner:
    """Partner of a certified derivative-side operator on the x side.

    The partner is the anti-involution image of the inverse word applied to
    the coordinate.  Operators certified on the coordinate side are refused;
    their partners are not ordinary differential operators.
    """
    if e.side != "x":
        raise UnsupportedSideError("partner construction expects an x-side operator")
    verdict = _require_certified(e)
    cert = verdict.certificate
    if cert.side == "x":
        raise UnsupportedSideError(
            "partner construction is unsupported for coordinate-side certificates"
        )
    pre_image = apply_word(invert_word(cert.word), coordinate("x"))
    return BispectralPartner(anti_involution(pre_image), cert.gen_poly, coordinate("x"))


def centralizer_generator(e: WeylElement) -> WeylElement:
    """Element generating the centralizer of a certified operator.

    Returns the word applied to the derivative; the input is the certificate
    polynomial evaluated at the result, and the two commute.
    """
    verdict = _require_certified(e)
    cert = verdict.certificate
    if cert.side != "d":
        raise UnsupportedSideError(
            "centralizer generator is unsupported for coordinate-side certificates"
        )
    gen = apply_word(cert.word, derivative(e.side))
    if commutator(e, gen) != WeylElement.zero(e.side):
        raise InvariantViolation("centralizer generator does not commute with the input")
    return gen


def ccr_check(a: WeylElement, b: WeylElement) -> bool:
    """Exact test of the commutation identity [a, b] == 1."""
    return commutator(a, b) == WeylElement.one(a.side)


@dataclass(frozen=True)
class GenerationWitness:
    """Constructive proof that a commutation pair generates the algebra.

    The first element is ``word(a*D + b)`` and the second is
    ``word(x/a + tail(D))``; since D and x generate, so do the images.
    """

    word: AutoWord
    a: Fraction
    b: Fraction
    tail: UniPoly


@dataclass(frozen=True)
class CounterexampleCandidate:
    """A commutation pair whose first member failed the decision procedure.

    Any genuine instance would separate the commutation identity from
    generation of the algebra; the full verdict is kept for audit.
    """

    verdict: Verdict


def ccr_to_generators(
    op: WeylElement, mate: WeylElement
) -> Union[GenerationWitness, CounterexampleCandidate]:
    """Reduce a commutation pair to the standard generating pair.

    Runs the decision procedure on ``op``; with a certificate (word, q) in
    hand, q must be linear and the preimage of ``mate`` must be
    ``x/a + tail(D)``, which yields the witness.  A rejection of ``op`` is
    returned as a counterexample candidate instead.
    """
    if not ccr_check(op, mate):
        raise ValueError("inputs do not satisfy the commutation identity [a, b] == 1")
    verdict = decide(op)
    if not isinstance(verdict, StrictlyNilpotent):
        return CounterexampleCandidate(verdict)
    cert = verdict.certificate
    word = cert.word
    if cert.side == "x":
        # fold the coordinate evaluation into the word: q(x) == q(swap(D))
        word = word + (FourierInverse(),)
    q = cert.gen_poly
    if q.degree != 1:
        raise InvariantViolation(
            "certificate polynomial of a commutation-pair member must be linear"
        )
    a, b = q.coeff(1), q.coeff(0)
    m = apply_word(invert_word(word), mate)
    if m.x_degree != 1 or m.x_slice(1) != UniPoly.const(1 / a):
        raise InvariantViolation("commutation mate does not reduce to the standard form")
    tail = m.x_slice(0)
    witness = GenerationWitness(word, a, b, tail)
    side = op.side
    first = apply_word(word, a * derivative(side) + WeylElement.scalar(b, side))
    second = apply_word(
        word, coordinate(side) / a + WeylElement.from_d_poly(tail, side)
    )
    if first != op or second != mate:
        raise InvariantViolation("generation witness failed to reproduce the pair")
    return witness


# ----------------------------------------------------------------------
# seeded sampling of certified operators
# ----------------------------------------------------------------------


def _random_shift_poly(rng: random.Random, degree: int) -> UniPoly:
    coeffs = [Fraction(0)] + [Fraction(rng.randint(-3, 3)) for _ in range(degree - 1)]
    lead = rng.choice((-3, -2, -1, 1, 2, 3))
    coeffs.append(Fraction(lead))
    return UniPoly(coeffs)


def _draw_word_and_poly(
    rng: random.Random, word_len: int, max_deg: int, max_q_deg: int
) -> Tuple[AutoWord, UniPoly]:
    start_with_d = rng.random() < 0.5
    word: List[Generator] = []
    for idx in range(word_len):
        degree = rng.randint(3, max_deg)
        kind = ShiftD if (idx % 2 == 0) == start_with_d else ShiftX
        word.append(kind(_random_shift_poly(rng, degree)))
    if word_len > 0 and rng.random() < 0.5:
        word.append(Fourier())
    q_deg = rng.randint(1, max_q_deg)
    q_coeffs = [Fraction(rng.randint(-3, 3)) for _ in range(q_deg)]
    q_coeffs.append(Fraction(rng.choice((-3, -2, -1, 1, 2, 3))))
    return tuple(word), UniPoly(q_coeffs)


def _order_bound(word: Sequence[Generator], q_degree: int) -> int:
    """Upper bound for the order of ``apply_word(word, q(D))``."""
    x_deg, order = 0, q_degree
    for gen in reversed(word):
        if isinstance(gen, (Fourier, FourierInverse)):
            x_deg, order = order, x_deg
        elif isinstance(gen, ShiftD):
            x_deg += order * max(gen.poly.degree - 1, 0)
        elif isinstance(gen, ShiftX):
            order += x_deg * max(gen.poly.degree - 1, 0)
    return order


def random_orbit_element(
    seed: int,
    word_len: int = 3,
    max_deg: int = 5,
    max_q_deg: int = 4,
    max_order: Optional[int] = None,
) -> Tuple[WeylElement, Certificate]:
    """Deterministically sample a certified operator with its ground truth.

    Draws a word of ``word_len`` alternating coordinate/derivative shifts
    with polynomial degrees in ``3..max_deg`` (optionally with a trailing
    Fourier swap) plus a nonconstant polynomial of degree <= ``max_q_deg``,
    and returns the word applied to the polynomial in the derivative along
    with the generating certificate.  With ``max_order`` set, draws are
    redone (still deterministically) until the resulting order provably
    stays within the bound, which keeps corpus generation cheap.

    Bounds: 0 <= word_len <= 8, 3 <= max_deg <= 9, 1 <= max_q_deg <= 8.
    """
    if not (0 <= word_len <= 8):
        raise ValueError("word_len must be in 0..8")
    if not (3 <= max_deg <= 9):
        raise ValueError("max_deg must be in 3..9")
    if not (1 <= max_q_deg <= 8):
        raise ValueError("max_q_deg must be in 1..8")
    rng = random.Random(seed)
    for _ in range(1000):
        word, q = _draw_word_and_poly(rng, word_len, max_deg, max_q_deg)
        if max_order is None or _order_bound(word, q.degree) <= max_order:
            element = apply_word(word, poly_at(q, derivative("x")))
            return element, Certificate(word, q, "d")
    raise ValueError("no draw satisfied the order bound; relax max_order")
