"""Lie-algebra-valued connections on the punctured disk and the gauge action.

A ``Connection`` is the operator ``d/du + A(u)`` where ``A`` is a
``LoopElement``: a finite table of Laurent scalars indexed by the Chevalley
basis, all over a common local parameter ``u`` with ``t = u**ram``.

Loop-group elements enter only as ``GaugeWord``s: finite sequences of
elementary factors — exponentials of nilpotent carriers and points of the
adjoint torus stored by their simple-root characters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (MismatchedAlgebra, NotNilpotent, NotReduced,
                     PrecisionExhausted, RamificationMismatch)
from .liealg import LieElement, SimpleLieAlgebra
from .series import LaurentScalar


class LoopElement:
    """Map from basis index to LaurentScalar over a common parameter."""

    __slots__ = ("algebra", "comps", "ram")

    def __init__(self, algebra: SimpleLieAlgebra,
                 comps: dict[int, LaurentScalar], ram: int = 1):
        clean: dict[int, LaurentScalar] = {}
        for i, s in comps.items():
            if s.ram != ram:
                raise RamificationMismatch("component ramification differs")
            if not s.is_exact_zero():
                clean[i] = s
        self.algebra = algebra
        self.comps = clean
        self.ram = ram

    @classmethod
    def from_constant(cls, x: LieElement, ram: int = 1) -> "LoopElement":
        return cls(x.algebra,
                   {i: LaurentScalar.const(c, ram=ram) for i, c in x.coeffs.items()},
                   ram)

    @classmethod
    def tensor(cls, x: LieElement, f: LaurentScalar) -> "LoopElement":
        return cls(x.algebra, {i: f.scale(c) for i, c in x.coeffs.items()}, f.ram)

    def component(self, i: int) -> LaurentScalar:
        return self.comps.get(i, LaurentScalar.zero(ram=self.ram))

    def __add__(self, other: "LoopElement") -> "LoopElement":
        if self.algebra is not other.algebra:
            raise MismatchedAlgebra("loop elements over different algebras")
        comps = dict(self.comps)
        for i, s in other.comps.items():
            comps[i] = comps[i] + s if i in comps else s
        return LoopElement(self.algebra, comps, self.ram)

    def __neg__(self) -> "LoopElement":
        return LoopElement(self.algebra, {i: -s for i, s in self.comps.items()},
                           self.ram)

    def __sub__(self, other: "LoopElement") -> "LoopElement":
        return self + (-other)

    def scale_series(self, f: LaurentScalar) -> "LoopElement":
        return LoopElement(self.algebra, {i: s * f for i, s in self.comps.items()},
                           self.ram)

    def bracket_with(self, x: LieElement, f: LaurentScalar) -> "LoopElement":
        """[x (x) f, self] computed componentwise."""
        out: dict[int, LaurentScalar] = {}
        for j, s in self.comps.items():
            br = self.algebra.bracket_basis(x, j)
            for k, c in br.coeffs.items():
                term = (f * s).scale(c)
                out[k] = out[k] + term if k in out else term
        return LoopElement(self.algebra, out, self.ram)

    def derivative(self) -> "LoopElement":
        return LoopElement(self.algebra,
                           {i: s.derivative() for i, s in self.comps.items()},
                           self.ram)

    def reramify(self, m: int) -> "LoopElement":
        return LoopElement(self.algebra,
                           {i: s.reramify(m) for i, s in self.comps.items()},
                           self.ram * m)

    def same(self, other: "LoopElement") -> bool:
        if self.algebra is not other.algebra or self.ram != other.ram:
            return False
        for i in set(self.comps) | set(other.comps):
            if not self.component(i).same(other.component(i)):
                return False
        return True

    def coefficient_element(self, exp: int) -> LieElement:
        """The constant Lie element sitting at exponent ``exp``."""
        return LieElement(self.algebra,
                          {i: s.coefficient(exp) for i, s in self.comps.items()})

    def __repr__(self) -> str:
        parts = [f"{self.algebra.basis[i].label}: {s!r}"
                 for i, s in sorted(self.comps.items())]
        return "LoopElement{" + ", ".join(parts) + "}"


@dataclass(frozen=True)
class Connection:
    """The operator d/du + A(u), with t = u**ram."""

    A: LoopElement

    @property
    def algebra(self) -> SimpleLieAlgebra:
        return self.A.algebra

    @property
    def ram(self) -> int:
        return self.A.ram


# -- gauge words ------------------------------------------------------------

@dataclass(frozen=True)
class UnipExp:
    """exp(x (x) f) for an ad-nilpotent carrier x."""

    x: LieElement
    f: LaurentScalar

    def __post_init__(self):
        if not self.x.algebra.is_ad_nilpotent(self.x):
            raise NotNilpotent("UnipExp carrier must be ad-nilpotent")

    def inverse(self) -> "UnipExp":
        return UnipExp(self.x, -self.f)


@dataclass(frozen=True)
class TorusChar:
    """Adjoint-torus point recorded by its simple-root characters chi_i."""

    chis: tuple[LaurentScalar, ...]

    def inverse(self) -> "TorusChar":
        return TorusChar(tuple(c.invert() for c in self.chis))


GaugeFactor = UnipExp | TorusChar


@dataclass(frozen=True)
class GaugeWord:
    factors: tuple[GaugeFactor, ...] = ()

    def __mul__(self, other: "GaugeWord") -> "GaugeWord":
        """Composite word: self applied first, then other."""
        return GaugeWord(self.factors + other.factors)

    def inverse(self) -> "GaugeWord":
        return GaugeWord(tuple(f.inverse() for f in reversed(self.factors)))

    def reramify(self, m: int) -> "GaugeWord":
        out: list[GaugeFactor] = []
        for f in self.factors:
            if isinstance(f, UnipExp):
                out.append(UnipExp(f.x, f.f.reramify(m)))
            else:
                out.append(TorusChar(tuple(c.reramify(m) for c in f.chis)))
        return GaugeWord(tuple(out))


def cocharacter(algebra: SimpleLieAlgebra, pairings: list[int], ram: int = 1,
                prec: int | None = None) -> TorusChar:
    """The point u**lam with alpha_i(lam) = pairings[i]."""
    return TorusChar(tuple(LaurentScalar.monomial(1, m, prec=prec, ram=ram)
                           for m in pairings))


def _apply_unip(factor: UnipExp, A: LoopElement) -> LoopElement:
    x, f = factor.x, factor.f
    if f.ram != A.ram:
        raise RamificationMismatch("gauge factor over a different parameter")
    # Ad part: sum ad^k / k! applied to A; finite by nilpotency of x.
    total = A
    term = A
    k = 0
    while True:
        k += 1
        term = term.bracket_with(x, f)
        if not term.comps:
            break
        total = total + term.scale_series(
            LaurentScalar.const(Fraction(1, math.factorial(k)), ram=A.ram))
        if k > A.algebra.dim:
            raise NotNilpotent("ad-series did not terminate")
    # (dg) g^{-1} = x (x) f' since the carrier is constant.
    return total - LoopElement.tensor(x, f.derivative())


def _apply_torus(factor: TorusChar, A: LoopElement) -> LoopElement:
    alg = A.algebra
    if len(factor.chis) != alg.rank:
        raise MismatchedAlgebra("torus factor has wrong rank")
    for chi in factor.chis:
        if chi.ram != A.ram:
            raise RamificationMismatch("gauge factor over a different parameter")
    inv = [chi.invert() for chi in factor.chis]
    comps: dict[int, LaurentScalar] = {}
    for i, s in A.comps.items():
        weight = alg.basis[i].weight
        out = s
        for m, chi, chi_inv in zip(weight, factor.chis, inv):
            if m > 0:
                for _ in range(m):
                    out = out * chi
            elif m < 0:
                for _ in range(-m):
                    out = out * chi_inv
        comps[i] = comps[i] + out if i in comps else out
    result = LoopElement(alg, comps, A.ram)
    for chi, chi_inv, omega in zip(factor.chis, inv, alg.fund_coweights):
        logd = chi.derivative() * chi_inv
        result = result - LoopElement.tensor(omega, logd)
    return result


def gauge_apply(word: GaugeWord, conn: Connection) -> Connection:
    """Apply the word's factors left-to-right: d/du + A -> d/du + gAg^-1 - (dg)g^-1."""
    A = conn.A
    for factor in word.factors:
        if isinstance(factor, UnipExp):
            A = _apply_unip(factor, A)
        else:
            A = _apply_torus(factor, A)
    return Connection(A)


# -- order of singularity and slope ----------------------------------------

def order_and_polar(conn: Connection) -> tuple[int, LieElement] | None:
    """(order n, leading element A_{-n}) in the current parameter, or None
    for a regular connection."""
    vals: list[int] = []
    floor = None
    for s in conn.A.comps.values():
        if s.coeffs:
            vals.append(min(s.coeffs))
        if s.prec is not None:
            floor = s.prec if floor is None else min(floor, s.prec)
    v_min = min(vals) if vals else 0
    if floor is not None and floor <= v_min:
        raise PrecisionExhausted(
            f"leading exponent not certified (precision floor {floor})")
    if v_min >= 0:
        return None
    polar = conn.A.coefficient_element(v_min)
    return -v_min, polar


def is_reduced(conn: Connection) -> bool:
    """True iff the connection is singular with non-nilpotent polar part."""
    op = order_and_polar(conn)
    if op is None:
        return False
    _, polar = op
    return not conn.algebra.is_ad_nilpotent(polar)


def ramify_connection(conn: Connection, m: int) -> Connection:
    """Pull back along u = s**m: d/du + A(u) -> d/ds + m s^(m-1) A(s**m)."""
    if m == 1:
        return conn
    A = conn.A.reramify(m)
    A = LoopElement(conn.algebra,
                    {i: s.shift(m - 1).scale(m) for i, s in A.comps.items()},
                    A.ram)
    return Connection(A)


def slope_from_reduced(conn: Connection) -> Fraction:
    """Katz slope a/b read off a reduced representative of pole order a+1."""
    op = order_and_polar(conn)
    if op is None or op[0] <= 1:
        return Fraction(0)
    n, polar = op
    if conn.algebra.is_ad_nilpotent(polar):
        raise NotReduced("polar part is ad-nilpotent; slope is not readable")
    return Fraction(n - 1, conn.ram)
