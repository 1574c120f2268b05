"""Central extension of the loop algebra and smooth induced modules:
bracket identities, PBW normal ordering and the module action."""

import random
from fractions import Fraction

from operslope import (ApartmentPoint, Level, act, get_type_A, induced_module,
                       km_bracket, normal_order, u_add, u_gen, u_mul, u_scale,
                       vacuum_vector)

F = Fraction


def _bracket_lin(alg, lvl, u, g):
    """[u, x_g] for u a combination of single generators and scalars;
    scalars are central."""
    out = []
    for mono, c in u.items():
        if not mono:
            continue
        out.append(u_scale(km_bracket(alg, lvl, mono[0], g), c))
    return u_add(*out)


def test_sl2_critical_bracket_examples():
    alg = get_type_A(1)
    lvl = Level.critical()
    e, f, h = alg.index_of["e"], alg.index_of["f"], alg.index_of["h"]
    out = km_bracket(alg, lvl, (e, 1), (f, -1))
    assert out == {((h, 0),): F(1), (): F(-2)}
    assert km_bracket(alg, lvl, (h, 3), (h, -3)) == {(): F(-12)}
    assert km_bracket(alg, lvl, (h, 3), (h, -2)) == {}
    assert km_bracket(alg, lvl, (e, 2), (h, -1)) == {((e, 1),): F(-2)}


def test_central_term_scales_with_level():
    alg = get_type_A(1)
    e, f = alg.index_of["e"], alg.index_of["f"]
    h = alg.index_of["h"]
    out = km_bracket(alg, Level.of(F(1, 4)), (e, 1), (f, -1))
    assert out == {((h, 0),): F(1), (): F(1)}
    out0 = km_bracket(alg, Level.of(0), (e, 1), (f, -1))
    assert out0 == {((h, 0),): F(1)}


def test_bracket_antisymmetry_and_jacobi():
    rng = random.Random(4)
    lvl = Level.critical()
    for rank in (1, 2):
        alg = get_type_A(rank)
        for _ in range(25):
            gens = [(rng.randrange(alg.dim), rng.randint(-3, 3))
                    for _ in range(3)]
            a, b, c = gens
            lhs = km_bracket(alg, lvl, a, b)
            rhs = u_scale(km_bracket(alg, lvl, b, a), -1)
            assert lhs == rhs
            jac = u_add(
                _bracket_lin(alg, lvl, km_bracket(alg, lvl, a, b), c),
                _bracket_lin(alg, lvl, km_bracket(alg, lvl, b, c), a),
                _bracket_lin(alg, lvl, km_bracket(alg, lvl, c, a), b))
            assert jac == {}


def test_normal_order_preserves_the_module_action():
    rng = random.Random(8)
    lvl = Level.critical()
    for rank in (1, 2):
        alg = get_type_A(rank)
        x = ApartmentPoint(alg, (F(1, 3),) * rank)
        spec = induced_module(x, F(1, 2), lvl)
        for _ in range(15):
            mono = tuple((rng.randrange(alg.dim), rng.randint(-2, 2))
                         for _ in range(rng.randint(1, 3)))
            u = {mono: F(rng.randint(1, 3))}
            vac = vacuum_vector()
            assert act(u, vac, spec) == act(
                normal_order(alg, lvl, u), vac, spec)


def test_action_is_a_representation():
    rng = random.Random(15)
    lvl = Level.critical()
    alg = get_type_A(1)
    spec = induced_module(ApartmentPoint(alg, (F(0),)), F(1), lvl)
    for _ in range(20):
        def rand_u():
            out = []
            for _ in range(rng.randint(1, 2)):
                mono = tuple((rng.randrange(alg.dim), rng.randint(-2, 2))
                             for _ in range(rng.randint(1, 2)))
                out.append({mono: F(rng.randint(-2, 2))})
            return u_add(*out)
        a, b = rand_u(), rand_u()
        w = act(u_gen(rng.randrange(alg.dim), -rng.randint(1, 2)),
                vacuum_vector(), spec)
        assert act(u_mul(a, b), w, spec) == act(a, act(b, w, spec), spec)


def test_annihilator_thresholds():
    alg = get_type_A(1)
    lvl = Level.critical()
    # x = 0, depth 1, open lattice: every generator mode >= 2 annihilates
    spec = induced_module(ApartmentPoint(alg, (F(0),)), F(1), lvl)
    vac = vacuum_vector()
    for i in range(alg.dim):
        assert spec.threshold(i) == 2
        assert act(u_gen(i, 2), vac, spec) == {}
        assert act(u_gen(i, 1), vac, spec) != {}
    # barycentre, depth 0: thresholds follow the root values
    bspec = induced_module(ApartmentPoint(alg, (F(1, 2),)), F(0), lvl)
    e, f, h = alg.index_of["e"], alg.index_of["f"], alg.index_of["h"]
    assert bspec.threshold(e) == 0
    assert bspec.threshold(f) == 1
    assert bspec.threshold(h) == 1
    assert act(u_gen(e, 0), vac, bspec) == {}
    assert act(u_gen(f, 0), vac, bspec) != {}


def test_straightening_produces_pbw_order():
    alg = get_type_A(1)
    lvl = Level.critical()
    e, f, h = alg.index_of["e"], alg.index_of["f"], alg.index_of["h"]
    # e_1 f_{-1} = f_{-1} e_1 + h_0 - 2 at critical level
    u = u_mul(u_gen(e, 1), u_gen(f, -1))
    nf = normal_order(alg, lvl, u)
    assert nf == {((f, -1), (e, 1)): F(1), ((h, 0),): F(1), (): F(-2)}
