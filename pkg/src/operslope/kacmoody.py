"""The affine Kac-Moody algebra, PBW normal ordering, and induced modules.

Elements of the enveloping algebra are finite rational combinations of
monomials in loop generators (basis_index, mode).  The central element is
evaluated to 1 immediately (we only ever act on smooth modules), so the
two-cocycle contributes plain scalars:

    [x (x) t^m, y (x) t^n] = [x,y] (x) t^{m+n} - kappa(x,y) * n * delta_{m+n,0}

with kappa = c_factor * Killing; c_factor = -1/2 is the critical level.

A module vector of U_{x,r} is a combination of creation-only monomials
applied to the generating vector.  The action straightens with annihilators
ordered to the right of all creation generators, so "rightmost generator
annihilates" is the exact deletion rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .liealg import SimpleLieAlgebra
from .moyprasad import ApartmentPoint, MPLattice, cocycle_split_check, lattice

Rat = Fraction | int
Gen = tuple[int, int]             # (basis index, mode)
Monomial = tuple[Gen, ...]
UElement = dict[Monomial, Fraction]

CRITICAL = Fraction(-1, 2)


@dataclass(frozen=True)
class Level:
    c_factor: Fraction

    @property
    def is_critical(self) -> bool:
        return self.c_factor == CRITICAL

    @classmethod
    def critical(cls) -> "Level":
        return cls(CRITICAL)

    @classmethod
    def of(cls, c: Rat) -> "Level":
        return cls(Fraction(c))


def u_zero() -> UElement:
    return {}


def u_scalar(c: Rat) -> UElement:
    c = Fraction(c)
    return {(): c} if c else {}


def u_gen(i: int, n: int, c: Rat = 1) -> UElement:
    return {((i, n),): Fraction(c)}


def u_add(*elems: UElement) -> UElement:
    out: dict[Monomial, Fraction] = {}
    for u in elems:
        for m, c in u.items():
            out[m] = out.get(m, Fraction(0)) + c
    return {m: c for m, c in out.items() if c}


def u_scale(u: UElement, c: Rat) -> UElement:
    c = Fraction(c)
    if not c:
        return {}
    return {m: c * x for m, x in u.items()}


def u_mul(a: UElement, b: UElement) -> UElement:
    out: dict[Monomial, Fraction] = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = m1 + m2
            out[m] = out.get(m, Fraction(0)) + c1 * c2
    return {m: c for m, c in out.items() if c}


def km_bracket(alg: SimpleLieAlgebra, lvl: Level, a: Gen, b: Gen) -> UElement:
    """[x (x) t^m, y (x) t^n] as a UElement (loop part plus central scalar)."""
    (i, m), (j, n) = a, b
    out: dict[Monomial, Fraction] = {}
    for k, c in alg.struct.get((i, j), {}).items():
        out[((k, m + n),)] = c
    if m + n == 0 and n != 0:
        central = -lvl.c_factor * alg.killing[i][j] * n
        if central:
            out[()] = out.get((), Fraction(0)) + central
    return {mo: c for mo, c in out.items() if c}


def _default_key(alg: SimpleLieAlgebra, g: Gen) -> tuple:
    return (g[1], g[0])


def normal_order(alg: SimpleLieAlgebra, lvl: Level, u: UElement,
                 key=None) -> UElement:
    """PBW straightening: sort each monomial's generators by the key
    (default: mode ascending, ties by basis index), inserting commutator
    terms for each adjacent swap."""
    if key is None:
        key = lambda g: _default_key(alg, g)
    result: dict[Monomial, Fraction] = {}
    work: list[tuple[Monomial, Fraction]] = list(u.items())
    while work:
        mono, coeff = work.pop()
        if not coeff:
            continue
        pos = None
        for idx in range(len(mono) - 1):
            if key(mono[idx]) > key(mono[idx + 1]):
                pos = idx
                break
        if pos is None:
            result[mono] = result.get(mono, Fraction(0)) + coeff
            continue
        g1, g2 = mono[pos], mono[pos + 1]
        swapped = mono[:pos] + (g2, g1) + mono[pos + 2:]
        work.append((swapped, coeff))
        br = km_bracket(alg, lvl, g1, g2)
        for bm, bc in br.items():
            work.append((mono[:pos] + bm + mono[pos + 2:], coeff * bc))
    return {m: c for m, c in result.items() if c}


@dataclass(frozen=True)
class InducedModuleSpec:
    """U_{x,r} = Ind from the trivial character of g_{x,r+} (+) C.1."""

    algebra: SimpleLieAlgebra
    level: Level
    annihilator: MPLattice

    def threshold(self, i: int) -> int:
        """r_alpha for generator basis index i: modes >= r_alpha kill the
        generating vector."""
        return self.annihilator.power(self.algebra.basis[i].weight)

    def is_annihilator(self, g: Gen) -> bool:
        return g[1] >= self.threshold(g[0])

    def module_key(self, g: Gen):
        return (1 if self.is_annihilator(g) else 0, g[1], g[0])


ModuleVector = UElement  # creation-only normal monomials applied to the generator


def induced_module(x: ApartmentPoint, r: Rat, lvl: Level) -> InducedModuleSpec:
    alg = x.algebra
    lat = lattice(x, Fraction(r), plus=True)
    # superadditivity of the annihilation thresholds (needed for the
    # annihilation bounds) and splitness of the central extension
    weights = set(alg.weights_star)
    for wa in weights:
        for wb in weights:
            wc = tuple(a + b for a, b in zip(wa, wb))
            if wc in weights:
                assert lat.power(wa) + lat.power(wb) >= lat.power(wc)
    report = cocycle_split_check(x, 200, r=Fraction(r), plus=True)
    assert report.ok, "central extension fails to split on the annihilator"
    return InducedModuleSpec(alg, lvl, lat)


def vacuum_vector() -> ModuleVector:
    return u_scalar(1)


def act(u: UElement, w: ModuleVector, spec: InducedModuleSpec) -> ModuleVector:
    """Apply u to the module vector w: straighten with annihilators rightmost
    and delete every monomial whose rightmost generator annihilates."""
    product = u_mul(u, w)
    ordered = normal_order(spec.algebra, spec.level, product,
                           key=spec.module_key)
    out: dict[Monomial, Fraction] = {}
    for mono, coeff in ordered.items():
        if mono and spec.is_annihilator(mono[-1]):
            continue
        out[mono] = out.get(mono, Fraction(0)) + coeff
    return {m: c for m, c in out.items() if c}
