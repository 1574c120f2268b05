"""Exact Laurent scalars with certified precision and ramified base change.

A ``LaurentScalar`` is a finite table of rational coefficients in a local
parameter ``u`` together with a precision bound ``prec``: every coefficient
at an exponent strictly below ``prec`` is certified (stored or zero), and
nothing is known at or above ``prec``.  ``prec is None`` means the series is
exact (a Laurent polynomial).  The ramification index ``ram`` records that
``u`` satisfies ``t = u**ram`` over the base parameter ``t``.

Reading a coefficient at or beyond the certified window raises
``PrecisionExhausted``; nothing is ever silently truncated to zero.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonUnit, PrecisionExhausted, RamificationMismatch, ZeroSeries

#: Default number of certified terms past the valuation for inverses of
#: exact series and for CLI-constructed data.
DEFAULT_EXTRA_PREC = 40

Rat = Fraction | int


def _min_prec(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class LaurentScalar:
    __slots__ = ("coeffs", "prec", "ram")

    def __init__(self, coeffs: dict[int, Fraction], prec: int | None = None,
                 ram: int = 1):
        if ram < 1:
            raise ValueError("ramification index must be positive")
        clean = {e: Fraction(c) for e, c in coeffs.items() if c}
        if prec is not None:
            bad = [e for e in clean if e >= prec]
            if bad:
                raise ValueError(f"stored exponent {max(bad)} >= precision {prec}")
        self.coeffs = clean
        self.prec = prec
        self.ram = ram

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, prec: int | None = None, ram: int = 1) -> "LaurentScalar":
        return cls({}, prec, ram)

    @classmethod
    def const(cls, c: Rat, prec: int | None = None, ram: int = 1) -> "LaurentScalar":
        return cls({0: Fraction(c)}, prec, ram)

    @classmethod
    def one(cls, ram: int = 1) -> "LaurentScalar":
        return cls.const(1, ram=ram)

    @classmethod
    def monomial(cls, c: Rat, exp: int, prec: int | None = None,
                 ram: int = 1) -> "LaurentScalar":
        return cls({exp: Fraction(c)}, prec, ram)

    @classmethod
    def from_terms(cls, terms, prec: int | None = None, ram: int = 1) -> "LaurentScalar":
        coeffs: dict[int, Fraction] = {}
        if isinstance(terms, dict):
            terms = terms.items()
        for exp, c in terms:
            coeffs[exp] = coeffs.get(exp, Fraction(0)) + Fraction(c)
        return cls(coeffs, prec, ram)

    # -- inspection ---------------------------------------------------------

    def is_certified_zero(self) -> bool:
        return not self.coeffs

    def is_exact_zero(self) -> bool:
        return not self.coeffs and self.prec is None

    def is_one(self) -> bool:
        return self.coeffs == {0: Fraction(1)}

    def coefficient(self, exp: int) -> Fraction:
        if self.prec is not None and exp >= self.prec:
            raise PrecisionExhausted(
                f"coefficient at exponent {exp} beyond certified precision {self.prec}")
        return self.coeffs.get(exp, Fraction(0))

    def valuation_leading(self) -> tuple[int, Fraction]:
        """(least exponent, its coefficient); raises ZeroSeries if none known."""
        if not self.coeffs:
            raise ZeroSeries(
                f"series has no known nonzero coefficient (precision {self.prec})")
        v = min(self.coeffs)
        return v, self.coeffs[v]

    def valuation(self) -> int:
        return self.valuation_leading()[0]

    def _val_floor(self) -> int | None:
        """A certified lower bound for the valuation: min stored exponent,
        else the precision for a certified-zero series, else None (exact 0)."""
        if self.coeffs:
            return min(self.coeffs)
        return self.prec

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "LaurentScalar") -> None:
        if self.ram != other.ram:
            raise RamificationMismatch(
                f"ramification {self.ram} vs {other.ram}")

    def __add__(self, other: "LaurentScalar") -> "LaurentScalar":
        self._check(other)
        prec = _min_prec(self.prec, other.prec)
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            coeffs[e] = coeffs.get(e, Fraction(0)) + c
        if prec is not None:
            coeffs = {e: c for e, c in coeffs.items() if e < prec}
        return LaurentScalar(coeffs, prec, self.ram)

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar({e: -c for e, c in self.coeffs.items()},
                             self.prec, self.ram)

    def __sub__(self, other: "LaurentScalar") -> "LaurentScalar":
        return self + (-other)

    def scale(self, c: Rat) -> "LaurentScalar":
        c = Fraction(c)
        if not c:
            return LaurentScalar({}, self.prec, self.ram)
        return LaurentScalar({e: c * x for e, x in self.coeffs.items()},
                             self.prec, self.ram)

    def __mul__(self, other: "LaurentScalar") -> "LaurentScalar":
        self._check(other)
        # min(N_a + val_b, N_b + val_a), valuations bounded below by the
        # certified floor of the other factor.
        prec: int | None = None
        if self.prec is not None or other.prec is not None:
            cands = []
            if self.prec is not None:
                vb = other._val_floor()
                cands.append(None if vb is None else self.prec + vb)
            if other.prec is not None:
                va = self._val_floor()
                cands.append(None if va is None else other.prec + va)
            cands = [c for c in cands if c is not None]
            prec = min(cands) if cands else None
        coeffs: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if prec is None or e < prec:
                    coeffs[e] = coeffs.get(e, Fraction(0)) + c1 * c2
        return LaurentScalar(coeffs, prec, self.ram)

    def shift(self, k: int) -> "LaurentScalar":
        """Multiply by u**k."""
        return LaurentScalar({e + k: c for e, c in self.coeffs.items()},
                             None if self.prec is None else self.prec + k,
                             self.ram)

    def invert(self, prec: int | None = None) -> "LaurentScalar":
        """Multiplicative inverse.

        For a single-term series the inverse is exact.  Otherwise the result
        is certified up to ``N - 2v`` for input precision N and valuation v;
        an exact multi-term input is inverted to ``prec`` certified terms
        past the valuation of the result (default DEFAULT_EXTRA_PREC).
        """
        if not self.coeffs:
            raise NonUnit("cannot invert a series with no known nonzero coefficient")
        v, lead = self.valuation_leading()
        if len(self.coeffs) == 1:
            out_prec = None if self.prec is None else self.prec - 2 * v
            if prec is not None:
                out_prec = prec if out_prec is None else min(out_prec, prec)
            return LaurentScalar({-v: 1 / lead}, out_prec, self.ram)
        if self.prec is None:
            out_prec = -v + (DEFAULT_EXTRA_PREC if prec is None else 0)
            if prec is not None:
                out_prec = prec
        else:
            out_prec = self.prec - 2 * v
            if prec is not None:
                out_prec = min(out_prec, prec)
        # Write self = lead * u^v * (1 + x) and expand the geometric series.
        nterms = out_prec + v  # certified terms of (1+x)^-1 beyond exponent 0
        if nterms <= 0:
            raise PrecisionExhausted("not enough precision to invert")
        x = {e - v: c / lead for e, c in self.coeffs.items() if e != v}
        inv_lead = 1 / lead
        out = {0: Fraction(1)}
        power = {0: Fraction(1)}  # (-x)^k, truncated below nterms
        for _ in range(nterms - 1):
            nxt: dict[int, Fraction] = {}
            for e1, c1 in power.items():
                for e2, c2 in x.items():
                    e = e1 + e2
                    if e < nterms:
                        nxt[e] = nxt.get(e, Fraction(0)) - c1 * c2
            power = {e: c for e, c in nxt.items() if c}
            if not power:
                break
            for e, c in power.items():
                out[e] = out.get(e, Fraction(0)) + c
        coeffs = {e - v: c * inv_lead for e, c in out.items() if c}
        coeffs = {e: c for e, c in coeffs.items() if e < out_prec}
        return LaurentScalar(coeffs, out_prec, self.ram)

    def derivative(self) -> "LaurentScalar":
        """d/du in the current local parameter."""
        coeffs = {e - 1: e * c for e, c in self.coeffs.items() if e != 0}
        prec = None if self.prec is None else self.prec - 1
        return LaurentScalar(coeffs, prec, self.ram)

    def log_derivative(self) -> "LaurentScalar":
        """u-logarithmic-free derivative quotient f'/f."""
        return self.derivative() * self.invert()

    def reramify(self, m: int) -> "LaurentScalar":
        """Base change u = s**m: exponents and ramification multiply by m."""
        if m < 1:
            raise ValueError("ramification multiplier must be positive")
        if m == 1:
            return self
        return LaurentScalar({e * m: c for e, c in self.coeffs.items()},
                             None if self.prec is None else self.prec * m,
                             self.ram * m)

    def truncate(self, prec: int) -> "LaurentScalar":
        new_prec = prec if self.prec is None else min(prec, self.prec)
        return LaurentScalar({e: c for e, c in self.coeffs.items() if e < new_prec},
                             new_prec, self.ram)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return (self.ram == other.ram and self.prec == other.prec
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ram, self.prec, tuple(sorted(self.coeffs.items()))))

    def same(self, other: "LaurentScalar") -> bool:
        """Agreement of all coefficients certified on both sides."""
        if self.ram != other.ram:
            return False
        prec = _min_prec(self.prec, other.prec)
        if prec is None:
            return self.coeffs == other.coeffs
        for e in set(self.coeffs) | set(other.coeffs):
            if e < prec and self.coeffs.get(e, 0) != other.coeffs.get(e, 0):
                return False
        return True

    def __repr__(self) -> str:
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for e in sorted(self.coeffs):
                c = self.coeffs[e]
                if e == 0:
                    parts.append(f"{c}")
                elif e == 1:
                    parts.append(f"{c}*u")
                else:
                    parts.append(f"{c}*u^{e}")
            body = " + ".join(parts)
        tail = "" if self.prec is None else f" + O(u^{self.prec})"
        ram = "" if self.ram == 1 else f" [t=u^{self.ram}]"
        return f"<{body}{tail}{ram}>"
