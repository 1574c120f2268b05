"""Sugawara fields at the critical level: exact annihilation bounds.

The quadratic Sugawara vector S generates the center of the critical-level
vertex algebra.  Acting on the depth-r induced module attached to an
apartment point x, its Fourier modes [S]_m must kill the generating vector
for all m >= 2(r+1), and the cutoff is sharp.  Everything here is computed
in exact rational arithmetic through PBW straightening with certified
truncation of the infinite mode sums.
"""

from fractions import Fraction

from operslope import (ApartmentPoint, Level, act, annihilation_check,
                       fourier_apply, get_type_A, induced_module,
                       mode_commutator, quadratic_sugawara, u_gen,
                       vacuum_vector)

F = Fraction

alg = get_type_A(1)
S = quadratic_sugawara(alg)
print("quadratic Sugawara vector for sl2:")
for mono, c in sorted(S.items()):
    print("  ", c, "*", " ".join(f"{alg.basis[i].label}_{n}" for i, n in mono))

print("\nannihilation profile on the depth-1/2 module at the barycentre:")
x = ApartmentPoint(alg, (F(1, 2),))
rep = annihilation_check(x, F(1, 2), S, 1, list(range(0, 6)))
print(f"  depth bound (d+1)(r+1) = {rep.theorem_bound}, "
      f"per-monomial bound = {rep.monomial_bound}, "
      f"enforced = {rep.enforced_bound}")
for m, killed in sorted(rep.annihilated.items()):
    print(f"  [S]_{m} v = {'0' if killed else 'nonzero'}")

print("\nsharpness at the origin, depth 0 (bound = 2):")
spec = induced_module(ApartmentPoint(alg, (F(0),)), F(0), Level.critical())
for m in (1, 2, 3):
    out = fourier_apply(S, m, vacuum_vector(), spec)
    print(f"  [S]_{m} v: {'0' if not out else 'nonzero -- just below the bound'}")

print("\ncentrality: [ [S]_m , x_n ] on module vectors")
w = act(u_gen(alg.index_of["e"], -1), vacuum_vector(), spec)
comm_crit = mode_commutator(S, 1, (alg.index_of["f"], -1), w, spec)
print("  at the critical level:", "0" if not comm_crit else comm_crit)

# away from the critical level the same commutator is a Virasoro action
from operslope.kacmoody import InducedModuleSpec
from operslope.moyprasad import lattice

vac_spec = InducedModuleSpec(alg, Level.of(F(1, 4)),
                             lattice(ApartmentPoint(alg, (F(0),)), 0, plus=False))
w1 = act(u_gen(alg.index_of["e"], -1), vacuum_vector(), vac_spec)
comm_one = mode_commutator(S, 1, (alg.index_of["f"], -1), w1, vac_spec)
print("  at level 1 (non-critical): nonzero =", bool(comm_one))
print("\nthe Sugawara modes are central exactly at the critical level.")
