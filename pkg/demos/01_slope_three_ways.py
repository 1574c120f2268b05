"""Slope of an irregular oper, computed three independent ways.

We take the simplest irregular example on the punctured disk: for sl2,

    d/dt + f/t + e/t^2

(f, e the lowering/raising generators).  Its slope -- the irregularity
exponent governing how fast flat sections grow -- is 1/2, and the three
routes below must agree exactly:

  1. the sup-formula on the canonical-form coefficients,
  2. a constructive ramified reduction to a connection with a
     non-nilpotent polar part, and
  3. the Newton polygon of the scalar ODE obtained by cyclic-vector
     elimination in the standard representation.
"""

from fractions import Fraction

from operslope import (LaurentScalar, LoopElement, OperGeneral, canonicalize,
                       get_type_A, reduced_form_via_oper, slope_of_oper,
                       typeA_newton_slope)

alg = get_type_A(1)

# d/dt + phi * f + q with phi = 1/t and q = e/t^2
oper = OperGeneral(
    alg,
    (LaurentScalar.monomial(1, -1),),
    LoopElement.tensor(alg.element(e=1), LaurentScalar.monomial(1, -2)),
)

chi, word = canonicalize(oper)
print("canonical form coefficients v_1:", dict(chi.v[0].coeffs))
print("gauge certificate length:", len(word.factors), "factors")
print()

s1 = slope_of_oper(chi)
print("route 1, sup-formula on the canonical form:   slope =", s1)

conn, info = reduced_form_via_oper(chi)
print("route 2, ramified reduction:                  slope =", info.slope,
      f"(ramification {info.ram}, pole order {info.order}, "
      f"polar part {info.polar})")

s3 = typeA_newton_slope(chi)
print("route 3, Newton polygon via cyclic vector:    slope =", s3)

assert s1 == info.slope == s3 == Fraction(1, 2)
print("\nall three routes agree: slope = 1/2")

# the same game for a higher-rank algebra: d/dt + p_{-1}/t + p_k/t^2 has
# slope 1/(d_k + 1) where d_k is the exponent of the slice component hit
print("\nhigher rank (A3): pole on each slice component in turn")
alg3 = get_type_A(3)
for k, (pk, dk) in enumerate(alg3.vcan):
    phis = tuple(LaurentScalar.monomial(1, -1) for _ in range(3))
    q = LoopElement.tensor(pk, LaurentScalar.monomial(1, -2))
    chi3, _ = canonicalize(OperGeneral(alg3, phis, q))
    print(f"  exponent d_{k + 1} = {dk}:  slope = {slope_of_oper(chi3)}"
          f"  (expected 1/{dk + 1})")
    assert slope_of_oper(chi3) == Fraction(1, dk + 1)
