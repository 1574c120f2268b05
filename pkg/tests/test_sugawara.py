"""Sugawara fields: the Virasoro oracle at a non-critical level, exact
annihilation bounds at the critical level, the sharp-bound boundary
counterexample, and centrality."""

import random
from fractions import Fraction

import pytest

from operslope import (AnnihilationReport, ApartmentPoint, BoundViolation,
                       Level, act, annihilation_check, fourier_apply,
                       get_type_A, induced_module, mode_commutator,
                       mode_kill_bound, monomial_bound, quadratic_sugawara,
                       sharp_bound_applicable, u_gen, u_mul,
                       validate_ss_vector, vacuum_vector)
from operslope.kacmoody import InducedModuleSpec
from operslope.moyprasad import lattice

F = Fraction


def _true_vacuum_spec(alg, level):
    """The level-k vertex vacuum module: annihilators are all modes >= 0."""
    x0 = ApartmentPoint(alg, (F(0),) * alg.rank)
    return InducedModuleSpec(alg, level, lattice(x0, 0, plus=False))


def test_quadratic_vector_shape():
    alg = get_type_A(1)
    S = quadratic_sugawara(alg)
    e, f, h = alg.index_of["e"], alg.index_of["f"], alg.index_of["h"]
    assert S == {((e, -1), (f, -1)): F(1, 2),
                 ((f, -1), (e, -1)): F(1, 2),
                 ((h, -1), (h, -1)): F(1, 4)}
    assert validate_ss_vector(alg, S, 1).ok
    S2 = quadratic_sugawara(get_type_A(2))
    assert len(S2) == 10
    assert validate_ss_vector(get_type_A(2), S2, 1).ok


def test_virasoro_oracle_at_level_one():
    """At level k = 1 (k + h-dual = 3 for sl2) the Sugawara modes satisfy
    the vacuum axiom, the translation identity and the loop-Virasoro
    commutation relation -- an end-to-end check of the Fourier calculus,
    the PBW straightening and the central terms."""
    alg = get_type_A(1)
    kh = 3
    spec = _true_vacuum_spec(alg, Level.of(F(1, 4)))
    S = quadratic_sugawara(alg)
    vac = vacuum_vector()
    e = alg.index_of["e"]
    for m in range(0, 4):
        assert fourier_apply(S, m, vac, spec) == {}
    w = act(u_gen(e, -1), vac, spec)
    assert fourier_apply(S, 0, w, spec) == {((e, -2),): F(kh)}
    assert fourier_apply(S, 1, w, spec) == {((e, -1),): F(kh)}
    rng = random.Random(6)
    for _ in range(12):
        v = vacuum_vector()
        for _ in range(rng.randint(0, 2)):
            v = act(u_gen(rng.randrange(alg.dim), -rng.randint(1, 2)), v, spec)
        gen = (rng.randrange(alg.dim), rng.randint(-2, 2))
        m = rng.randint(-1, 2)
        got = mode_commutator(S, m + 1, gen, v, spec)
        want = act(u_gen(gen[0], m + gen[1], F(-gen[1] * kh)), v, spec)
        assert got == want


def test_critical_annihilation_theorem_modes():
    lvl = Level.critical()
    for rank in (1, 2):
        alg = get_type_A(rank)
        S = quadratic_sugawara(alg)
        x = ApartmentPoint(alg, (F(1, alg.coxeter),) * rank)
        for r in (F(0), F(1, 2)):
            spec = induced_module(x, r, lvl)
            vac = vacuum_vector()
            bound = 2 * (r + 1)
            m0 = int(bound) if bound.denominator == 1 else int(bound) + 1
            for m in range(m0, m0 + 4):
                assert fourier_apply(S, m, vac, spec) == {}


def test_annihilation_report():
    alg = get_type_A(1)
    x = ApartmentPoint(alg, (F(0),))
    S = quadratic_sugawara(alg)
    rep = annihilation_check(x, F(1, 2), S, 1, list(range(0, 6)))
    assert isinstance(rep, AnnihilationReport)
    assert rep.theorem_bound == 3
    assert rep.ok
    # every mode at or past the enforced bound annihilated
    for m, killed in rep.annihilated.items():
        if m >= rep.enforced_bound:
            assert killed


def test_sharpness_below_the_bound():
    """The bound is exact: at x = 0, r = 0 the mode just below the monomial
    bound does not annihilate the generating vector."""
    alg = get_type_A(1)
    x = ApartmentPoint(alg, (F(0),))
    spec = induced_module(x, F(0), Level.critical())
    S = quadratic_sugawara(alg)
    b = monomial_bound(spec, S)
    assert b == 2
    assert fourier_apply(S, b - 1, vacuum_vector(), spec) != {}
    assert fourier_apply(S, b, vacuum_vector(), spec) == {}


def test_boundary_counterexample_to_the_sharp_monomial_bound():
    """On the barycentre depth-0 module the per-monomial threshold fails:
    e_0 f_0 acts as h_0, which survives, even though the naive count says
    mode 0 of the field e_{-1}f_{-1}-type monomial should kill the
    generator.  The applicability predicate must flag this module."""
    alg = get_type_A(1)
    e, f, h = alg.index_of["e"], alg.index_of["f"], alg.index_of["h"]
    spec = induced_module(ApartmentPoint(alg, (F(1, 2),)), F(0),
                          Level.critical())
    assert not sharp_bound_applicable(spec)
    out = act(u_mul(u_gen(e, 0), u_gen(f, 0)), vacuum_vector(), spec)
    assert out == {((h, 0),): F(1)}
    # the full Sugawara sum still obeys the depth bound (d+1)(r+1) = 2
    S = quadratic_sugawara(alg)
    for m in (2, 3, 4):
        assert fourier_apply(S, m, vacuum_vector(), spec) == {}


def test_applicability_predicate():
    lvl = Level.critical()
    alg = get_type_A(1)
    assert sharp_bound_applicable(
        induced_module(ApartmentPoint(alg, (F(0),)), F(0), lvl))
    assert sharp_bound_applicable(
        induced_module(ApartmentPoint(alg, (F(1, 2),)), F(1, 2), lvl))
    assert not sharp_bound_applicable(
        induced_module(ApartmentPoint(alg, (F(1, 2),)), F(0), lvl))


def test_certified_kill_bound_on_random_monomials():
    rng = random.Random(17)
    lvl = Level.critical()
    for _ in range(40):
        alg = get_type_A(rng.choice((1, 2)))
        x = ApartmentPoint(alg, tuple(
            rng.choice([F(0), F(1, 2), F(1, 3)]) for _ in range(alg.rank)))
        spec = induced_module(x, rng.choice([F(0), F(1, 2)]), lvl)
        mono = tuple((rng.randrange(alg.dim), -rng.randint(1, 3))
                     for _ in range(rng.randint(1, 3)))
        w = vacuum_vector()
        for _ in range(rng.randint(0, 2)):
            i = rng.randrange(alg.dim)
            w = act(u_gen(i, spec.threshold(i) - rng.randint(1, 2)), w, spec)
        if not w:
            continue
        kb = mode_kill_bound(spec, mono, w)
        for s in (kb, kb + 1):
            assert fourier_apply({mono: F(1)}, s, w, spec) == {}


def test_bound_violation_raised_for_false_claims():
    alg = get_type_A(1)
    x = ApartmentPoint(alg, (F(0),))
    e = alg.index_of["e"]
    # a deep creation mode cannot satisfy the depth bound claimed for a
    # degree-0 field: the check must refuse the configuration
    bad = {((e, -3),): F(1)}
    with pytest.raises(BoundViolation):
        annihilation_check(x, F(0), bad, 0, [1, 2, 3])


def test_centrality_only_at_critical_level():
    alg = get_type_A(1)
    S = quadratic_sugawara(alg)
    x = ApartmentPoint(alg, (F(0),))
    spec_c = induced_module(x, F(0), Level.critical())
    spec_1 = _true_vacuum_spec(alg, Level.of(F(1, 4)))
    e = alg.index_of["e"]
    w = act(u_gen(e, -1), vacuum_vector(), spec_c)
    assert mode_commutator(S, 1, (e, -1), w, spec_c) == {}
    w1 = act(u_gen(e, -1), vacuum_vector(), spec_1)
    assert mode_commutator(S, 1, (e, -1), w1, spec_1) != {}
