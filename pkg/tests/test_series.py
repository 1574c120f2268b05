"""Laurent series kernel: exact ring axioms, calculus rules, precision
certificates and ramified base change."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from operslope import LaurentScalar, NonUnit, PrecisionExhausted, ZeroSeries
from operslope.errors import RamificationMismatch

F = Fraction

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def exact_series(draw, lo=-4, hi=4, max_terms=4):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        terms[draw(st.integers(lo, hi))] = draw(rationals)
    return LaurentScalar.from_terms(terms)


@settings(max_examples=60, deadline=None)
@given(exact_series(), exact_series(), exact_series())
def test_ring_axioms(a, b, c):
    assert ((a + b) + c).same(a + (b + c))
    assert (a + b).same(b + a)
    assert ((a * b) * c).same(a * (b * c))
    assert (a * b).same(b * a)
    assert (a * (b + c)).same(a * b + a * c)
    one = LaurentScalar.one()
    assert (a * one).same(a)
    assert (a - a).is_exact_zero()


@settings(max_examples=60, deadline=None)
@given(exact_series(), exact_series())
def test_derivative_is_a_derivation(a, b):
    lhs = (a * b).derivative()
    rhs = a.derivative() * b + a * b.derivative()
    assert lhs.same(rhs)


@settings(max_examples=40, deadline=None)
@given(exact_series(max_terms=3), st.integers(1, 3))
def test_reramify_is_a_ring_homomorphism(a, m):
    b = LaurentScalar.from_terms({0: F(2), 1: F(-1, 3)})
    assert (a * b).reramify(m).same(a.reramify(m) * b.reramify(m))
    assert (a + b).reramify(m).same(a.reramify(m) + b.reramify(m))
    # d/ds = m s^{m-1} d/du under u = s^m
    lhs = a.derivative().reramify(m).shift(m - 1).scale(m)
    assert a.reramify(m).derivative().same(lhs)


def test_invert_roundtrip_certified():
    f = LaurentScalar.from_terms({-2: F(3), 0: F(1, 2), 1: F(-5)})
    g = f.invert(prec=20)
    prod = f * g
    assert prod.coefficient(0) == 1
    for e in range(prod._val_floor(), prod.prec):
        assert prod.coefficient(e) == (1 if e == 0 else 0)


def test_invert_monomial_exact():
    f = LaurentScalar.monomial(F(2, 3), -5)
    g = f.invert()
    assert g.prec is None and (f * g).is_one()


def test_invert_requires_unit():
    with pytest.raises(NonUnit):
        LaurentScalar.zero().invert()


def test_log_derivative_of_product():
    f = LaurentScalar.from_terms({-1: F(1), 2: F(3)})
    g = LaurentScalar.from_terms({0: F(2), 1: F(1, 7)})
    lhs = (f * g).log_derivative()
    rhs = f.log_derivative() + g.log_derivative()
    common = min(lhs.prec, rhs.prec)
    assert lhs.truncate(common).same(rhs.truncate(common))


def test_precision_certificate_blocks_reads_past_it():
    f = LaurentScalar.from_terms({-1: F(1)}, prec=3)
    assert f.coefficient(2) == 0
    with pytest.raises(PrecisionExhausted):
        f.coefficient(3)


def test_precision_propagates_through_addition_and_product():
    a = LaurentScalar.from_terms({0: F(1)}, prec=4)
    b = LaurentScalar.from_terms({1: F(1), 5: F(9)})
    assert (a + b).prec == 4
    assert 5 not in (a + b).coeffs
    # product precision: input certificate shifted by the other valuation
    assert (a * b).prec == 5


def test_certified_zero_vs_exact_zero():
    z = LaurentScalar.zero(prec=2)
    assert z.is_certified_zero() and not z.is_exact_zero()
    assert LaurentScalar.zero().is_exact_zero()
    with pytest.raises(ZeroSeries):
        z.valuation_leading()


def test_ramification_mismatch_rejected():
    a = LaurentScalar.one(ram=2)
    with pytest.raises(RamificationMismatch):
        a + LaurentScalar.one()


def test_truncate_tightens_only():
    f = LaurentScalar.from_terms({0: F(1), 3: F(2)}, prec=5)
    g = f.truncate(2)
    assert g.prec == 2 and g.coeffs == {0: F(1)}
    assert f.truncate(9).prec == 5
