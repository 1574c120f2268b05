"""Apartment points, Moy-Prasad lattices, filtration jumps and strata.

An apartment point is recorded by its simple-root values; every root value
follows by linearity.  The depth-r lattices are stored as one power of the
maximal ideal per weight: 1 - ceil(alpha(x) - r) for the open ("plus")
lattice and ceil(r - alpha(x)) for the closed one.

Dual lattices are realized through the Killing form and the residue
pairing: a one-form D dt lies in the depth -r dual lattice iff
Res kappa(D, Z) dt vanishes for every Z in the plus lattice, which is a
componentwise valuation bound.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .connection import Connection, LoopElement
from .errors import PrecisionExhausted
from .liealg import LieElement, SimpleLieAlgebra
from .series import LaurentScalar

Rat = Fraction | int


@dataclass(frozen=True)
class ApartmentPoint:
    algebra: SimpleLieAlgebra
    simple_values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.simple_values) != self.algebra.rank:
            raise ValueError("need one value per simple root")
        object.__setattr__(self, "simple_values",
                           tuple(Fraction(v) for v in self.simple_values))

    def root_value(self, weight: tuple[int, ...]) -> Fraction:
        return sum((Fraction(m) * v
                    for m, v in zip(weight, self.simple_values)), Fraction(0))

    def cartan_element(self) -> LieElement:
        """The Cartan element x with alpha_i(x) = simple_values[i]."""
        out = self.algebra.zero()
        for v, omega in zip(self.simple_values, self.algebra.fund_coweights):
            out = out + omega.scale(v)
        return out


@dataclass(frozen=True)
class MPLattice:
    x: ApartmentPoint
    r: Fraction
    plus: bool
    powers: dict[tuple[int, ...], int] = field(compare=False)

    @property
    def algebra(self) -> SimpleLieAlgebra:
        return self.x.algebra

    def power(self, weight: tuple[int, ...]) -> int:
        return self.powers[weight]


def lattice(x: ApartmentPoint, r: Rat, plus: bool) -> MPLattice:
    r = Fraction(r)
    if r < 0:
        raise ValueError("depth must be non-negative")
    powers = {}
    for w in x.algebra.weights_star:
        a = x.root_value(w)
        if plus:
            powers[w] = 1 - math.ceil(a - r)
        else:
            powers[w] = math.ceil(r - a)
    return MPLattice(x, r, plus, powers)


def member(z: LoopElement, lat: MPLattice) -> bool:
    if z.ram != 1:
        raise ValueError("lattice membership is defined over the base parameter")
    for i, s in z.comps.items():
        m = lat.power(z.algebra.basis[i].weight)
        if s.coeffs and min(s.coeffs) < m:
            return False
        if s.prec is not None and s.prec < m:
            raise PrecisionExhausted(
                "not enough precision to certify lattice membership")
    return True


def jumps(x: ApartmentPoint, lo: Rat, hi: Rat) -> list[Fraction]:
    """Filtration jump depths {alpha(x) + n} in [lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not 0 <= lo <= hi:
        raise ValueError("need 0 <= lo <= hi")
    out = set()
    for w in x.algebra.weights_star:
        a = x.root_value(w)
        n = math.ceil(lo - a)
        while a + n <= hi:
            if a + n >= lo:
                out.add(a + n)
            n += 1
    return sorted(out)


@dataclass
class CocycleReport:
    trials: int
    failures: list[tuple]

    @property
    def ok(self) -> bool:
        return not self.failures


def cocycle_split_check(x: ApartmentPoint, trials: int,
                        r: Rat = 0, plus: bool = False,
                        rng: random.Random | None = None,
                        exponent_window: int = 5) -> CocycleReport:
    """Sample pairs (a (x) t^p, b (x) t^q) from opposite-weight components of
    the lattice and verify the central two-cocycle -kappa(a,b) Res f dg
    vanishes on them."""
    rng = rng or random.Random(0)
    alg = x.algebra
    lat = lattice(x, r, plus)
    by_weight: dict[tuple[int, ...], list[int]] = {}
    for i, b in enumerate(alg.basis):
        by_weight.setdefault(b.weight, []).append(i)
    failures = []
    for _ in range(trials):
        w = rng.choice(alg.weights_star)
        neg = tuple(-c for c in w)
        i = rng.choice(by_weight[w])
        j = rng.choice(by_weight[neg])
        p = lat.power(w) + rng.randrange(exponent_window)
        q = lat.power(neg) + rng.randrange(exponent_window)
        # Res t^p d(t^q) = q if p + q = 0 else 0
        residue = q if p + q == 0 else 0
        value = -alg.killing[i][j] * residue
        if value:
            failures.append((alg.basis[i].label, p, alg.basis[j].label, q, value))
    return CocycleReport(trials, failures)


def contains_stratum(conn: Connection, x: ApartmentPoint, r: Rat
                     ) -> tuple[bool, LoopElement | None]:
    """Bremer-Sage containment of the stratum (x, r, beta) in the given
    trivialization; when it holds, returns a representative of beta as the
    relevant truncation of A - x/t."""
    r = Fraction(r)
    if conn.ram != 1:
        raise ValueError("stratum containment is defined for unramified input")
    alg = conn.algebra
    xc = x.cartan_element()
    D = conn.A - LoopElement.tensor(xc, LaurentScalar.monomial(1, -1))
    beta_comps: dict[int, LaurentScalar] = {}
    for i, s in D.comps.items():
        a = x.root_value(alg.basis[i].weight)
        # dual of the plus lattice: valuation >= ceil(-alpha(x) - r) - 1
        bound = math.ceil(-a - r) - 1
        if s.prec is not None and s.prec < bound:
            raise PrecisionExhausted("cannot certify stratum containment")
        if s.coeffs and min(s.coeffs) < bound:
            return False, None
        # beta lives in the quotient by the dual of the closed lattice:
        # coefficients at exponents < -ceil(alpha(x) + r) survive
        cut = -math.ceil(a + r)
        kept = {e: c for e, c in s.coeffs.items() if e < cut}
        if kept:
            beta_comps[i] = LaurentScalar(kept, None, 1)
    return True, LoopElement(alg, beta_comps, 1)
