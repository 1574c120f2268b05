"""Built-in verification suite.

Each check returns (name, ok, detail) and is deterministic for a fixed
seed.  The checks cross-validate independent computation routes — the
defining sup-formula for the slope against the constructive ramified
reduction and the Newton-polygon oracle, gauge invariance of the
singularity order, uniqueness of canonical forms, filtration anchors, and
the exact annihilation bounds for Sugawara Fourier modes — so a silent
convention error in any one route shows up as a cross-check failure.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from .connection import (Connection, GaugeWord, LoopElement, TorusChar,
                         UnipExp, cocharacter, gauge_apply, order_and_polar)
from .kacmoody import (InducedModuleSpec, Level, act, induced_module, u_gen,
                       u_mul, vacuum_vector)
from .liealg import LieElement, SimpleLieAlgebra, get_type_A
from .moyprasad import ApartmentPoint, cocycle_split_check, lattice
from .oper import (OperCanonical, OperGeneral, as_oper_general, canonicalize,
                   reduced_form_via_oper, slope_of_oper, to_connection,
                   typeA_newton_slope)
from .series import LaurentScalar
from .sugawara import (fourier_apply, mode_commutator, mode_kill_bound,
                       monomial_bound, quadratic_sugawara,
                       sharp_bound_applicable, validate_ss_vector)

Check = tuple[str, bool, str]


def _rand_rational(rng: random.Random, zero_ok: bool = True) -> Fraction:
    num = rng.randint(-6, 6)
    if not zero_ok:
        while num == 0:
            num = rng.randint(-6, 6)
    return Fraction(num, rng.randint(1, 4))


def _rand_series(rng: random.Random, lo: int, hi: int, max_terms: int = 3,
                 nonzero: bool = False) -> LaurentScalar:
    terms = {}
    for _ in range(rng.randint(1 if nonzero else 0, max_terms)):
        terms[rng.randint(lo, hi)] = _rand_rational(rng, zero_ok=False)
    if nonzero and not terms:
        terms[rng.randint(lo, hi)] = Fraction(1)
    return LaurentScalar.from_terms(terms.items())


def _rand_unit(rng: random.Random, lo: int, hi: int) -> LaurentScalar:
    """A unit: nonzero leading coefficient, a few higher terms."""
    v = rng.randint(lo, hi)
    terms = {v: _rand_rational(rng, zero_ok=False)}
    for _ in range(rng.randint(0, 2)):
        terms[v + rng.randint(1, 3)] = _rand_rational(rng)
    return LaurentScalar.from_terms(terms.items())


def _rand_canonical(rng: random.Random, alg: SimpleLieAlgebra,
                    max_pole: int = 8) -> OperCanonical:
    v = []
    for _ in range(alg.rank):
        v.append(_rand_series(rng, -max_pole, 0))
    return OperCanonical(alg, tuple(v))


# -- 1: the degree-d_k example opers, both computation paths -----------------

def example_slopes(seed: int = 0) -> Check:
    t0 = time.monotonic()
    for rank in (1, 2, 3):
        alg = get_type_A(rank)
        for k in range(alg.rank):
            d_k = alg.vcan[k][1]
            # d/dt + p_{-1}/t + p_k/t^2
            phis = tuple(LaurentScalar.monomial(1, -1) for _ in range(alg.rank))
            q = LoopElement.tensor(alg.vcan[k][0], LaurentScalar.monomial(1, -2))
            chi, _ = canonicalize(OperGeneral(alg, phis, q))
            # expected canonical form: d/dt + p_{-1} + p_k/t^{d_k+2} - p_1 rank/(4 t^2)
            for j in range(alg.rank):
                want = {}
                if j == k:
                    want[-(d_k + 2)] = Fraction(1)
                if alg.vcan[j][1] == 1:
                    want[-2] = want.get(-2, Fraction(0)) - Fraction(rank, 4)
                want = {e: c for e, c in want.items() if c}
                if chi.v[j].coeffs != want:
                    return ("example-slopes", False,
                            f"A{rank} k={k}: canonical v[{j}] = "
                            f"{chi.v[j].coeffs}, expected {want}")
            expected = Fraction(1, d_k + 1)
            s1 = slope_of_oper(chi)
            _, info = reduced_form_via_oper(chi)
            s3 = typeA_newton_slope(chi)
            if not (s1 == info.slope == s3 == expected):
                return ("example-slopes", False,
                        f"A{rank} k={k}: slopes {s1}, {info.slope}, {s3} "
                        f"!= {expected}")
    return ("example-slopes", True,
            f"A1..A3, all exponents, three slope routes agree "
            f"({time.monotonic() - t0:.1f}s)")


# -- 2+3: random slope agreement and denominator divisibility ----------------

def _random_oper_corpus(seed: int):
    rng = random.Random(seed)
    for name in ("A1", "A2"):
        alg = get_type_A(int(name[1]))
        for _ in range(200):
            phis = tuple(_rand_unit(rng, -3, 2) for _ in range(alg.rank))
            q_comps = {}
            for i, b in enumerate(alg.basis):
                if b.height >= 0 and rng.random() < 0.5:
                    s = _rand_series(rng, -8, 1)
                    if s.coeffs:
                        q_comps[i] = s
            yield alg, OperGeneral(alg, phis, LoopElement(alg, q_comps, 1))


def slope_agreement(seed: int = 0) -> Check:
    t0 = time.monotonic()
    n = 0
    for alg, og in _random_oper_corpus(seed):
        chi, _ = canonicalize(og)
        s1 = slope_of_oper(chi)
        _, info = reduced_form_via_oper(chi)
        s3 = typeA_newton_slope(chi)
        if not (s1 == info.slope == s3):
            return ("slope-agreement", False,
                    f"{alg.name} oper #{n}: {s1}, {info.slope}, {s3}")
        n += 1
    return ("slope-agreement", True,
            f"{n} random opers, three routes agree "
            f"({time.monotonic() - t0:.1f}s)")


def slope_denominators(seed: int = 0) -> Check:
    n = 0
    for alg, og in _random_oper_corpus(seed):
        chi, _ = canonicalize(og)
        s = slope_of_oper(chi)
        degrees = [d + 1 for _, d in alg.vcan]
        if s and not any(d % s.denominator == 0 for d in degrees):
            return ("slope-denominators", False,
                    f"{alg.name} oper #{n}: slope {s}, degrees {degrees}")
        n += 1
    return ("slope-denominators", True,
            f"{n} random opers, every slope denominator divides a degree")


# -- 4: gauge stability of the singularity order -----------------------------

def order_stability(seed: int = 0) -> Check:
    rng = random.Random(seed)
    t0 = time.monotonic()
    for trial in range(100):
        alg = get_type_A(rng.choice((1, 2)))
        order = rng.randint(2, 6)
        # non-nilpotent polar part: a nonzero Cartan element
        cart = {i: _rand_rational(rng, zero_ok=False) for i in alg.cartan_idx}
        A = LoopElement.tensor(LieElement(alg, cart),
                               LaurentScalar.monomial(1, -order))
        for i in range(alg.dim):
            if rng.random() < 0.4:
                A = A + LoopElement(alg, {i: _rand_series(rng, 1 - order, 2)}, 1)
        conn = Connection(A)
        op = order_and_polar(conn)
        if op is None or op[0] != order or alg.is_ad_nilpotent(op[1]):
            return ("order-stability", False, f"trial {trial}: bad test datum")
        for _ in range(5):
            factors = []
            for _ in range(rng.randint(1, 2)):
                if rng.random() < 0.5:
                    factors.append(cocharacter(
                        alg, [rng.randint(-2, 2) for _ in range(alg.rank)]))
                else:
                    i = rng.choice([j for j, b in enumerate(alg.basis)
                                    if b.height != 0])
                    factors.append(UnipExp(
                        LieElement(alg, {i: _rand_rational(rng, zero_ok=False)}),
                        LaurentScalar.const(_rand_rational(rng, zero_ok=False))))
            out = gauge_apply(GaugeWord(tuple(factors)), conn)
            op2 = order_and_polar(out)
            if op2 is None or op2[0] < order:
                return ("order-stability", False,
                        f"trial {trial}: order dropped {order} -> "
                        f"{op2[0] if op2 else 0}")
    return ("order-stability", True,
            f"100 reduced connections x 5 gauge words, order never dropped "
            f"({time.monotonic() - t0:.1f}s)")


# -- 5: canonical-form uniqueness --------------------------------------------

def canonical_uniqueness(seed: int = 0) -> Check:
    rng = random.Random(seed)
    for trial in range(100):
        alg = get_type_A(rng.choice((1, 2)))
        chi = _rand_canonical(rng, alg, max_pole=5)
        conn = to_connection(chi)
        factors = []
        for _ in range(rng.randint(1, 3)):
            if rng.random() < 0.7:
                i = rng.choice([j for j, b in enumerate(alg.basis)
                                if b.height > 0])
                factors.append(UnipExp(
                    LieElement(alg, {i: Fraction(1)}),
                    _rand_series(rng, -3, 3, nonzero=True)))
            else:
                factors.append(TorusChar(tuple(
                    _rand_unit(rng, -2, 2) for _ in range(alg.rank))))
        moved = gauge_apply(GaugeWord(tuple(factors)), conn)
        chi2, _ = canonicalize(as_oper_general(moved))
        if not chi2.same(chi):
            return ("canonical-uniqueness", False,
                    f"trial {trial} ({alg.name}): canonical tuples differ")
    return ("canonical-uniqueness", True,
            "100 perturbed canonical opers re-canonicalize identically")


# -- 6: filtration anchors and cocycle splitness -----------------------------

def filtration_anchors(seed: int = 0) -> Check:
    alg = get_type_A(1)
    x0 = ApartmentPoint(alg, (Fraction(0),))
    for n in range(5):
        lat = lattice(x0, n, plus=True)
        if any(p != n + 1 for p in lat.powers.values()):
            return ("filtration-anchors", False,
                    f"depth {n} open lattice is not t^{n + 1}g[[t]]")
    alg2 = get_type_A(2)
    configs = [
        (x0, Fraction(0), True),
        (ApartmentPoint(alg, (Fraction(1, 2),)), Fraction(1, 2), True),
        (ApartmentPoint(alg2, (Fraction(1, 3), Fraction(1, 3))), Fraction(1, 3), True),
        (ApartmentPoint(alg2, (Fraction(1, 2), Fraction(1, 3))), Fraction(0), False),
        (x0, Fraction(0), False),
    ]
    rng = random.Random(seed)
    for x, r, plus in configs:
        rep = cocycle_split_check(x, 1000, r=r, plus=plus, rng=rng)
        if not rep.ok:
            return ("filtration-anchors", False,
                    f"cocycle failure at {x.simple_values}, r={r}, "
                    f"plus={plus}: {rep.failures[:3]}")
    return ("filtration-anchors", True,
            "hyperspecial anchors exact; 5x1000 cocycle trials split")


# -- 7: annihilation bounds for Sugawara Fourier modes -----------------------

def _rand_module_vector(rng: random.Random, spec: InducedModuleSpec):
    w = vacuum_vector()
    for _ in range(rng.randint(0, 2)):
        i = rng.randrange(spec.algebra.dim)
        n = spec.threshold(i) - rng.randint(1, 3)
        w = u_mul(u_gen(i, n), w)
    return w


def annihilation_bounds(seed: int = 0) -> Check:
    t0 = time.monotonic()
    lvl = Level.critical()
    for rank in (1, 2):
        alg = get_type_A(rank)
        S = quadratic_sugawara(alg)
        rep = validate_ss_vector(alg, S, 1)
        if not rep.ok:
            return ("annihilation-bounds", False, str(rep.violations))
        h = alg.coxeter
        points = [
            ApartmentPoint(alg, (Fraction(0),) * rank),
            ApartmentPoint(alg, (Fraction(1, h),) * rank),
            ApartmentPoint(alg, tuple(Fraction(1, 3 + 2 * i)
                                      for i in range(rank))),
        ]
        for x in points:
            for r in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2)):
                spec = induced_module(x, r, lvl)
                vac = vacuum_vector()
                lo = -int(-2 * (r + 1) // 1)  # ceil(2(r+1))
                for n in range(lo, lo + 5):
                    z = fourier_apply(S, n, vac, spec)
                    if z:
                        return ("annihilation-bounds", False,
                                f"{alg.name} x={x.simple_values} r={r}: "
                                f"[S]_{n} vac != 0")
    # per-monomial and module-vector bounds on random creation monomials.
    # The sharp per-monomial threshold is provable only on modules with
    # strict collision slack (sharp_bound_applicable); the looser certified
    # cutoff mode_kill_bound is checked on every module, including the
    # boundary ones where the sharp threshold has counterexamples.
    rng = random.Random(seed)
    tested = 0
    while tested < 200:
        alg = get_type_A(rng.choice((1, 2)))
        x = ApartmentPoint(alg, tuple(
            rng.choice([Fraction(0), Fraction(1, 2), Fraction(1, 3)])
            for _ in range(alg.rank)))
        r = rng.choice([Fraction(0), Fraction(1, 2), Fraction(1)])
        spec = induced_module(x, r, Level.critical())
        mono = tuple((rng.randrange(alg.dim), -rng.randint(1, 3))
                     for _ in range(rng.randint(1, 3)))
        state = {mono: Fraction(1)}
        vac = vacuum_vector()
        w = _rand_module_vector(rng, spec)
        wmono = next(iter(w))
        kb = mode_kill_bound(spec, mono, w)
        for s in (kb, kb + 1):
            if fourier_apply(state, s, w, spec):
                return ("annihilation-bounds", False,
                        f"certified cutoff {kb} fails at mode {s}")
        if not sharp_bound_applicable(spec):
            continue
        b0 = monomial_bound(spec, state)
        for s in (b0, b0 + 1, b0 + 2):
            if fourier_apply(state, s, vac, spec):
                return ("annihilation-bounds", False,
                        f"trial {tested}: mode {s} >= bound {b0} "
                        f"fails on the generating vector")
        b1 = (sum(spec.threshold(i) - n for i, n in mono)
              + sum(spec.threshold(i) - p for i, p in wmono)
              - (len(mono) + len(wmono)))
        for s in (b1, b1 + 2):
            if fourier_apply(state, s, w, spec):
                return ("annihilation-bounds", False,
                        f"trial {tested}: mode {s} >= bound {b1} "
                        f"fails on a module vector")
        tested += 1
    return ("annihilation-bounds", True,
            f"theorem modes + 200 random monomial bounds exact "
            f"({time.monotonic() - t0:.1f}s)")


# -- 8: centrality detector --------------------------------------------------

def centrality_detector(seed: int = 0) -> Check:
    rng = random.Random(seed)
    alg = get_type_A(1)
    S = quadratic_sugawara(alg)
    x = ApartmentPoint(alg, (Fraction(0),))
    spec_c = induced_module(x, Fraction(0), Level.critical())
    spec_0 = induced_module(x, Fraction(0), Level.of(0))
    nonzero_at_zero = False
    for trial in range(50):
        w = _rand_module_vector(rng, spec_c)
        gen = (rng.randrange(alg.dim), rng.randint(-2, 1))
        n = rng.randint(-1, 3)
        if mode_commutator(S, n, gen, w, spec_c):
            return ("centrality-detector", False,
                    f"trial {trial}: [S_[{n}], x_{gen}] != 0 at critical level")
        if mode_commutator(S, n, gen, w, spec_0):
            nonzero_at_zero = True
    if not nonzero_at_zero:
        return ("centrality-detector", False,
                "commutators vanished at level 0 in all 50 samples")
    return ("centrality-detector", True,
            "central at critical level, non-central at level 0 (50 samples)")


ALL_CHECKS = [example_slopes, slope_agreement, slope_denominators,
              order_stability, canonical_uniqueness, filtration_anchors,
              annihilation_bounds, centrality_detector]


def run_all(seed: int = 0) -> list[Check]:
    return [check(seed) for check in ALL_CHECKS]
