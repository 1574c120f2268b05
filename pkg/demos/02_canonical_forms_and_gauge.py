"""Canonical forms are genuine invariants: gauge the same oper around and
it re-canonicalizes to the identical coefficient tuple.

The canonicalization is the Drinfeld-Sokolov elimination: a torus factor
normalizes the simple-lowering coefficients to 1, then degree by degree a
unipotent factor deletes everything outside the canonical slice.  The
algorithm returns the full gauge word, so the reduction is a checkable
certificate, not a claim.
"""

import random
from fractions import Fraction

from operslope import (GaugeWord, LaurentScalar, LieElement, OperCanonical,
                       UnipExp, as_oper_general, canonicalize, cocharacter,
                       gauge_apply, get_type_A, to_connection)

alg = get_type_A(2)
rng = random.Random(0)

chi = OperCanonical(alg, (
    LaurentScalar.from_terms({-2: Fraction(3), 0: Fraction(1, 2)}),
    LaurentScalar.from_terms({-5: Fraction(-1)}),
))
print("starting canonical tuple:")
for j, v in enumerate(chi.v):
    print(f"  v_{j + 1} =", dict(v.coeffs))

conn = to_connection(chi)

# scramble it with a random Borel gauge word
nil_idx = [i for i, b in enumerate(alg.basis) if b.height > 0]
factors = []
for _ in range(4):
    if rng.random() < 0.7:
        i = rng.choice(nil_idx)
        f = LaurentScalar.from_terms(
            {rng.randint(-3, 2): Fraction(rng.randint(1, 5), rng.randint(1, 3))})
        factors.append(UnipExp(LieElement(alg, {i: Fraction(1)}), f))
    else:
        factors.append(cocharacter(alg, [rng.randint(-1, 1) for _ in range(2)]))
word = GaugeWord(tuple(factors))
moved = gauge_apply(word, conn)
print("\nafter a random 4-factor gauge word the connection has",
      len(moved.A.comps), "nonzero components")

# canonicalize the scrambled connection: exact same tuple comes back
chi2, cert = canonicalize(as_oper_general(moved))
assert chi2.same(chi)
print("re-canonicalized tuple is identical:", all(
    a.same(b) for a, b in zip(chi.v, chi2.v)))

# and the certificate really transports the scrambled oper to canonical form
check = gauge_apply(cert, moved)
assert check.A.same(to_connection(chi2).A)
print("gauge certificate verified:", len(cert.factors),
      "factors transport the scrambled oper back onto the slice")
