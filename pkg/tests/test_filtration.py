"""Weight values, Newton-edge selection, and factored-form recognition."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylnil import (
    ConstantCoefficientsSignal,
    FactoredForm,
    FormDiagnostic,
    FormIssue,
    NotNormalizableError,
    Weight,
    WeylElement,
    associated_poly,
    choose_weights,
    commutator,
    factor_form,
    format_bivariate,
    generators,
    weight_value,
)

from conftest import weyl_elements

x, d = generators()


def test_weight_requires_primitive_positive_pair():
    with pytest.raises(ValueError):
        Weight(0, 1)
    with pytest.raises(ValueError):
        Weight(2, 4)
    assert Weight(2, 1).of(1, 1) == 3


def test_weight_value_examples():
    assert weight_value(x**2 * d**3 + x, Weight(1, 2)) == 8
    assert weight_value(x, Weight(3, 5)) == 3
    assert weight_value(d**2 - x, Weight(2, 1)) == 2


def test_weight_value_zero_rejected():
    with pytest.raises(ValueError):
        weight_value(WeylElement.zero(), Weight(1, 1))


def test_associated_poly_quartic():
    e = d**4 + 2 * x * d**2 + 2 * d + x**2
    nd = associated_poly(e, Weight(2, 1))
    assert nd.value == 4
    assert nd.top_support == frozenset({(0, 4), (1, 2), (2, 0)})
    assert nd.assoc == {(0, 4): 1, (1, 2): 2, (2, 0): 1}
    assert format_bivariate(nd.assoc) == "Y^4 + 2*X*Y^2 + X^2"


def test_associated_poly_airy():
    nd = associated_poly(d**2 - x, Weight(2, 1))
    assert nd.assoc == {(0, 2): 1, (1, 0): -1}


def test_associated_poly_single_term():
    nd = associated_poly(x, Weight(1, 1))
    assert nd.assoc == {(1, 0): 1}


def test_choose_weights_airy():
    w, point = choose_weights(d**2 - x)
    assert w.as_tuple() == (2, 1)
    assert point == (1, 0)


def test_choose_weights_cubic():
    w, point = choose_weights(d**3 + x * d)
    assert w.as_tuple() == (2, 1)
    assert point == (1, 1)


def test_choose_weights_greatest_coordinate_tiebreak():
    w, point = choose_weights(d**4 + 2 * x * d**2 + 2 * d + x**2)
    assert w.as_tuple() == (2, 1)
    assert point == (2, 0)


def test_choose_weights_signals_constant_coefficients():
    with pytest.raises(ConstantCoefficientsSignal):
        choose_weights(d**3 + 2 * d)


def test_choose_weights_rejects_nonconstant_leading():
    with pytest.raises(NotNormalizableError):
        choose_weights(x * d)


def test_choose_weights_bounds_support():
    rng = random.Random(7)
    for _ in range(50):
        terms = {(0, 5): Fraction(1)}
        for _ in range(rng.randint(1, 6)):
            terms[(rng.randint(0, 4), rng.randint(0, 4))] = Fraction(rng.randint(-5, 5))
        e = WeylElement(terms)
        if not e.depends_on_x() or e.order != 5:
            continue
        w, _ = choose_weights(e)
        limit = 5 * w.d_weight
        assert all(w.of(i, j) <= limit for i, j in e.terms)


def test_factor_form_quartic():
    e = d**4 + 2 * x * d**2 + 2 * d + x**2
    nd = associated_poly(e, Weight(2, 1))
    ff = factor_form(nd, 4)
    assert ff == FactoredForm(y_power=0, ratio=2, multiplicity=2, scale=Fraction(-1))
    assert ff.expand() == nd.assoc


def test_factor_form_positive_y_power():
    nd = associated_poly(d**3 + x * d, Weight(2, 1))
    out = factor_form(nd, 3)
    assert isinstance(out, FormDiagnostic)
    assert out.issue is FormIssue.POSITIVE_Y_POWER
    assert out.partial == FactoredForm(1, 2, 1, Fraction(-1))


def test_factor_form_lambda_inconsistency():
    nd = associated_poly(d**2 + x**2, Weight(1, 1))
    out = factor_form(nd, 2)
    assert isinstance(out, FormDiagnostic)
    assert out.issue is FormIssue.LAMBDA_INCONSISTENT
    assert "cross term" in out.message and "absent" in out.message
    assert out.equal_weights
    assert out.strictly_semisimple


def test_factor_form_scaled_oscillator_keeps_flag():
    nd = associated_poly(d**2 + 5 * x**2, Weight(1, 1))
    out = factor_form(nd, 2)
    assert isinstance(out, FormDiagnostic)
    assert out.strictly_semisimple


def test_factor_form_ratio_not_integer():
    nd = associated_poly(d**2 + x**3, Weight(2, 3))
    out = factor_form(nd, 2)
    assert isinstance(out, FormDiagnostic)
    assert out.issue is FormIssue.RATIO_NOT_INTEGER


def test_factor_form_monomial():
    nd = associated_poly(d**2 + x, Weight(1, 1))
    out = factor_form(nd, 2)
    assert isinstance(out, FormDiagnostic)
    assert out.issue is FormIssue.MONOMIAL


def test_factor_form_expansion_mismatch():
    # (Y^2 - X)(Y^2 - 2X) has the right corner data but distinct roots
    e = d**4 - 3 * x * d**2 + 2 * x**2
    nd = associated_poly(e, Weight(2, 1))
    out = factor_form(nd, 4)
    assert isinstance(out, FormDiagnostic)
    assert out.issue is FormIssue.LAMBDA_INCONSISTENT


def test_factor_form_requires_monic_corner():
    nd = associated_poly(2 * d**2 - x, Weight(2, 1))
    with pytest.raises(ValueError):
        factor_form(nd, 2)


@given(e=weyl_elements(max_terms=6), rho=st.integers(1, 4), sigma=st.integers(1, 4))
def test_homogeneity_of_top_part(e, rho, sigma):
    from math import gcd

    g = gcd(rho, sigma)
    w = Weight(rho // g, sigma // g)
    if e.is_zero():
        return
    nd = associated_poly(e, w)
    assert all(w.of(i, j) == nd.value for i, j in nd.assoc)
    assert all(w.of(i, j) == nd.value for i, j in nd.top_support)


@given(a=weyl_elements(max_terms=4), b=weyl_elements(max_terms=4))
def test_weight_multiplicativity(a, b):
    w = Weight(2, 3)
    if a.is_zero() or b.is_zero():
        return
    assert weight_value(a * b, w) == weight_value(a, w) + weight_value(b, w)


@given(a=weyl_elements(max_terms=4), b=weyl_elements(max_terms=4))
def test_commutator_weight_drop(a, b):
    w = Weight(1, 2)
    c = commutator(a, b)
    if a.is_zero() or b.is_zero() or c.is_zero():
        return
    assert weight_value(c, w) <= weight_value(a, w) + weight_value(b, w) - 1 - 2


def test_edge_inequality_for_multiple_points():
    # accepted operators with coordinate exponent above 1 at the edge point
    # keep the top weight strictly above the weight sum
    from weylnil import random_orbit_element

    checked = 0
    for seed in range(40):
        e, _ = random_orbit_element(seed, word_len=seed % 3, max_deg=4, max_q_deg=3, max_order=12)
        try:
            w, (k0, _) = choose_weights(e / e.d_slice(e.order).constant_value())
        except (ConstantCoefficientsSignal, NotNormalizableError, ValueError):
            continue
        if k0 <= 1:
            continue
        nd = associated_poly(e / e.d_slice(e.order).constant_value(), w)
        if isinstance(factor_form(nd, e.order), FormDiagnostic):
            continue
        assert nd.value > w.x_weight + w.d_weight
        checked += 1
    assert checked >= 3
