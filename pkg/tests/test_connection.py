"""Gauge action on connections, checked against an independent oracle:
conjugation of the defining matrix representation by explicit series
matrices, g A g^{-1} - (dg/du) g^{-1}."""

import random
from fractions import Fraction

from operslope import (Connection, GaugeWord, LaurentScalar, LieElement,
                       LoopElement, TorusChar, UnipExp, cocharacter,
                       gauge_apply, get_type_A, is_reduced, order_and_polar,
                       ramify_connection, slope_from_reduced)

F = Fraction


# -- series-matrix helpers for the defining-representation oracle ------------

def _smat(n, val=None):
    return [[val if val is not None else LaurentScalar.zero()
             for _ in range(n)] for _ in range(n)]


def _smat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _smat_mul(a, b):
    n = len(a)
    out = _smat(n)
    for i in range(n):
        for j in range(n):
            acc = LaurentScalar.zero()
            for k in range(n):
                acc = acc + a[i][k] * b[k][j]
            out[i][j] = acc
    return out


def _smat_deriv(a):
    return [[x.derivative() for x in row] for row in a]


def _rho(alg, A):
    """Loop element -> matrix of series in the defining representation."""
    n = alg.rank + 1
    out = _smat(n)
    for i, s in A.comps.items():
        for a in range(n):
            for b in range(n):
                c = alg.std_rep[i][a][b]
                if c:
                    out[a][b] = out[a][b] + s.scale(c)
    return out


def _unip_matrix(alg, factor: UnipExp):
    """exp(f rho(x)) as a series matrix; exact because rho(x) is nilpotent."""
    n = alg.rank + 1
    x = _smat(n)
    for a in range(n):
        for b in range(n):
            c = sum(factor.x.coeffs.get(i, F(0)) * alg.std_rep[i][a][b]
                    for i in range(alg.dim))
            x[a][b] = LaurentScalar.const(c) * factor.f
    out = [[LaurentScalar.const(1 if a == b else 0) for b in range(n)]
           for a in range(n)]
    power = [row[:] for row in out]
    fact = 1
    for k in range(1, n):
        power = _smat_mul(power, x)
        fact *= k
        out = _smat_add(out, [[e.scale(F(1, fact)) for e in row]
                              for row in power])
    return out


def _torus_matrix(alg, factor: TorusChar):
    """diag(u^{l_1}..u^{l_n}) with l_i - l_{i+1} the character exponents."""
    n = alg.rank + 1
    ms = [c.valuation() for c in factor.chis]
    ls = [sum(ms[j:]) for j in range(n - 1)] + [0]
    out = _smat(n)
    for a in range(n):
        out[a][a] = LaurentScalar.monomial(1, ls[a])
    return out


def _apply_matrix_gauge(alg, g, ginv, conn):
    """g rho(A) g^{-1} - (dg) g^{-1}, projected back to trace zero."""
    m = _rho(alg, conn.A)
    out = _smat_add(_smat_mul(_smat_mul(g, m), ginv),
                    [[e.scale(-1) for e in row]
                     for row in _smat_mul(_smat_deriv(g), ginv)])
    n = len(out)
    tr = LaurentScalar.zero()
    for a in range(n):
        tr = tr + out[a][a]
    for a in range(n):
        out[a][a] = out[a][a] - tr.scale(F(1, n))
    return out


def _rand_series(rng, lo, hi):
    terms = {rng.randint(lo, hi): F(rng.randint(-4, 4), rng.randint(1, 3))
             for _ in range(rng.randint(1, 3))}
    return LaurentScalar.from_terms({e: c for e, c in terms.items() if c})


def _rand_connection(rng, alg):
    comps = {}
    for i in range(alg.dim):
        if rng.random() < 0.6:
            s = _rand_series(rng, -3, 2)
            if s.coeffs:
                comps[i] = s
    return Connection(LoopElement(alg, comps, 1))


def test_unipotent_gauge_matches_matrix_conjugation():
    rng = random.Random(21)
    for rank in (1, 2):
        alg = get_type_A(rank)
        nil_idx = [i for i, b in enumerate(alg.basis) if b.height != 0]
        for _ in range(8):
            conn = _rand_connection(rng, alg)
            factor = UnipExp(
                LieElement(alg, {rng.choice(nil_idx): F(rng.randint(1, 3))}),
                _rand_series(rng, -2, 2))
            out = gauge_apply(GaugeWord((factor,)), conn)
            g = _unip_matrix(alg, factor)
            ginv = _unip_matrix(alg, factor.inverse())
            want = _apply_matrix_gauge(alg, g, ginv, conn)
            got = _rho(alg, out.A)
            for ra, rb in zip(got, want):
                for x, y in zip(ra, rb):
                    assert x.same(y)


def test_cocharacter_gauge_matches_matrix_conjugation():
    rng = random.Random(22)
    for rank in (1, 2):
        alg = get_type_A(rank)
        for _ in range(8):
            conn = _rand_connection(rng, alg)
            factor = cocharacter(alg, [rng.randint(-2, 2)
                                       for _ in range(rank)])
            out = gauge_apply(GaugeWord((factor,)), conn)
            g = _torus_matrix(alg, factor)
            ginv = _torus_matrix(alg, factor.inverse())
            want = _apply_matrix_gauge(alg, g, ginv, conn)
            got = _rho(alg, out.A)
            for ra, rb in zip(got, want):
                for x, y in zip(ra, rb):
                    assert x.same(y)


def test_gauge_word_inverse_roundtrip():
    rng = random.Random(5)
    alg = get_type_A(2)
    nil_idx = [i for i, b in enumerate(alg.basis) if b.height != 0]
    for _ in range(10):
        conn = _rand_connection(rng, alg)
        factors = []
        for _ in range(rng.randint(1, 3)):
            if rng.random() < 0.5:
                factors.append(UnipExp(
                    LieElement(alg, {rng.choice(nil_idx): F(1)}),
                    _rand_series(rng, -2, 2)))
            else:
                factors.append(cocharacter(alg, [rng.randint(-1, 1), 0]))
        word = GaugeWord(tuple(factors))
        back = gauge_apply(word.inverse(), gauge_apply(word, conn))
        assert back.A.same(conn.A)


def test_order_and_polar():
    alg = get_type_A(1)
    A = LoopElement.tensor(alg.element(h=1), LaurentScalar.monomial(1, -3))
    A = A + LoopElement.tensor(alg.element(e=1), LaurentScalar.monomial(1, -1))
    conn = Connection(A)
    order, polar = order_and_polar(conn)
    assert order == 3 and polar == alg.element(h=1)
    assert is_reduced(conn)
    # no pole at all
    reg = Connection(LoopElement.tensor(alg.element(e=1), LaurentScalar.one()))
    assert order_and_polar(reg) is None


def test_nilpotent_polar_is_not_reduced():
    alg = get_type_A(1)
    conn = Connection(LoopElement.tensor(alg.element(e=1),
                                         LaurentScalar.monomial(1, -2)))
    assert not is_reduced(conn)


def test_ramified_slope_from_reduced_form():
    alg = get_type_A(1)
    # d/dt + h/t^2 has slope 1; after t = s^2 the order becomes 3 over s
    conn = Connection(LoopElement.tensor(alg.element(h=1),
                                         LaurentScalar.monomial(1, -2)))
    assert slope_from_reduced(conn) == 1
    ram = ramify_connection(conn, 2)
    assert ram.ram == 2
    order, polar = order_and_polar(ram)
    assert order == 3
    assert slope_from_reduced(ram) == 1
