"""Opers on the punctured disk.

Canonicalization follows the Drinfeld-Sokolov elimination: a torus step
normalizes the simple-negative-root coefficients to 1, then for each
principal degree j the degree-j component is split along
g_j = (slice)_j (+) [p_{-1}, g_{j+1}] and the image part is deleted by a
unipotent gauge factor of carrier degree j+1.  Each such factor changes the
degree-j component by exactly -[p_{-1}, carrier], so the elimination is
exact per degree.

Three independent slope computations live here: the defining sup-formula on
the canonical coefficients, the constructive ramified reduced form, and (in
type A) the Newton-polygon slope of the scalar operator produced by
cyclic-vector elimination from the last coordinate of the standard
representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .connection import (Connection, GaugeWord, LoopElement, TorusChar,
                         UnipExp, gauge_apply, order_and_polar,
                         ramify_connection)
from .errors import CyclicVectorFailure, PrecisionExhausted
from .liealg import LieElement, SimpleLieAlgebra
from .series import LaurentScalar


@dataclass(frozen=True)
class OperCanonical:
    """Canonical form d/dt + p_{-1} + sum v_j p_j over the slice basis."""

    algebra: SimpleLieAlgebra
    v: tuple[LaurentScalar, ...]

    def __post_init__(self):
        if len(self.v) != self.algebra.rank:
            raise ValueError("canonical tuple length must equal the rank")

    def same(self, other: "OperCanonical") -> bool:
        return (self.algebra is other.algebra
                and all(a.same(b) for a, b in zip(self.v, other.v)))


@dataclass(frozen=True)
class OperGeneral:
    """Operator d/dt + sum phi_i f_i + q with phi_i units and q upper-triangular."""

    algebra: SimpleLieAlgebra
    phis: tuple[LaurentScalar, ...]
    q: LoopElement

    def __post_init__(self):
        if len(self.phis) != self.algebra.rank:
            raise ValueError("need one phi per simple root")
        for i in self.q.comps:
            if self.algebra.basis[i].height < 0:
                raise ValueError("q must be supported on the Borel")

    def as_connection(self) -> Connection:
        A = self.q
        for phi, fi in zip(self.phis, self.algebra.simple_f_idx):
            A = A + LoopElement(self.algebra, {fi: phi}, A.ram)
        return Connection(A)


def to_connection(chi: OperCanonical) -> Connection:
    alg = chi.algebra
    A = LoopElement.from_constant(alg.p_minus)
    for vj, (pj, _) in zip(chi.v, alg.vcan):
        A = A + LoopElement.tensor(pj, vj)
    return Connection(A)


def as_oper_general(conn: Connection) -> OperGeneral:
    """View a Borel-plus-p_{-1} shaped connection as an OperGeneral."""
    alg = conn.algebra
    phis = []
    q_comps: dict[int, LaurentScalar] = {}
    f_idx = set(alg.simple_f_idx)
    for i, s in conn.A.comps.items():
        if i in f_idx:
            continue
        if alg.basis[i].height < 0:
            raise ValueError("connection is not oper-shaped")
        q_comps[i] = s
    for fi in alg.simple_f_idx:
        phis.append(conn.A.component(fi))
    return OperGeneral(alg, tuple(phis), LoopElement(alg, q_comps, conn.ram))


# -- Drinfeld-Sokolov canonicalization --------------------------------------

def _degree_split_data(alg: SimpleLieAlgebra):
    """Per principal degree j >= 0: basis index lists and the inverse of the
    change-of-basis matrix expressing g_j in terms of slice vectors and
    [p_{-1}, (degree j+1 basis)]."""
    by_height: dict[int, list[int]] = {}
    for i, b in enumerate(alg.basis):
        by_height.setdefault(b.height, []).append(i)
    vcan_by_deg: dict[int, list[int]] = {}
    for k, (_, d) in enumerate(alg.vcan):
        vcan_by_deg.setdefault(d, []).append(k)
    data = {}
    for j in range(0, alg.max_height + 1):
        deg_j = by_height.get(j, [])
        deg_j1 = by_height.get(j + 1, [])
        slice_ks = vcan_by_deg.get(j, [])
        cols: list[list[Fraction]] = []
        for k in slice_ks:
            pj = alg.vcan[k][0]
            cols.append([pj.coeffs.get(i, Fraction(0)) for i in deg_j])
        for i1 in deg_j1:
            img = alg.bracket_basis(alg.p_minus, i1)
            cols.append([img.coeffs.get(i, Fraction(0)) for i in deg_j])
        mat = linalg.transpose(cols) if cols else []
        inv = linalg.inverse(mat) if mat else []
        data[j] = (deg_j, deg_j1, slice_ks, inv)
    return data


def canonicalize(oper: OperGeneral) -> tuple[OperCanonical, GaugeWord]:
    alg = oper.algebra
    if oper.q.ram != 1 or any(p.ram != 1 for p in oper.phis):
        raise ValueError("opers live over the base parameter t")
    factors = []
    conn = oper.as_connection()
    if not all(p.is_one() for p in oper.phis):
        torus = TorusChar(tuple(oper.phis))
        conn = gauge_apply(GaugeWord((torus,)), conn)
        factors.append(torus)

    split = _degree_split_data(alg)
    v_out: list[LaurentScalar] = [LaurentScalar.zero(ram=1)] * alg.rank
    for j in range(0, alg.max_height + 1):
        deg_j, deg_j1, slice_ks, inv = split[j]
        comp = [conn.A.component(i) for i in deg_j]
        if not deg_j:
            continue
        # coordinates: first len(slice_ks) are slice coefficients, the rest
        # are the carrier series of the unipotent factors for degree j+1
        coords = [None] * len(deg_j)
        for r in range(len(deg_j)):
            acc = LaurentScalar.zero(ram=1)
            for cidx in range(len(deg_j)):
                entry = inv[r][cidx]
                if entry:
                    acc = acc + comp[cidx].scale(entry)
            coords[r] = acc
        for pos, k in enumerate(slice_ks):
            v_out[k] = coords[pos]
        step_factors = []
        for pos, i1 in enumerate(deg_j1):
            g = coords[len(slice_ks) + pos]
            if g.coeffs:
                step_factors.append(
                    UnipExp(LieElement(alg, {i1: Fraction(1)}), g))
        if step_factors:
            conn = gauge_apply(GaugeWord(tuple(step_factors)), conn)
            factors.extend(step_factors)
    return OperCanonical(alg, tuple(v_out)), GaugeWord(tuple(factors))


# -- slope ------------------------------------------------------------------

def _component_pole(vj: LaurentScalar) -> int | None:
    """Certified pole order n_j = -valuation, or None when the component
    certifiably contributes nothing to the slope sup."""
    if vj.coeffs:
        return -min(vj.coeffs)
    if vj.prec is None or vj.prec >= 0:
        return None
    raise PrecisionExhausted(
        "canonical component is zero up to a negative precision; "
        "its pole order cannot be certified")


def slope_of_oper(chi: OperCanonical) -> Fraction:
    best = Fraction(0)
    for vj, (_, dj) in zip(chi.v, chi.algebra.vcan):
        nj = _component_pole(vj)
        if nj is None:
            continue
        best = max(best, Fraction(nj, dj + 1) - 1)
    return best


def in_Op_r(chi: OperCanonical, r: Fraction | int) -> bool:
    return slope_of_oper(chi) <= r


@dataclass(frozen=True)
class ReducedFormInfo:
    ram: int
    order: int          # 0 for a regular witness
    polar: LieElement | None
    slope: Fraction


def reduced_form_via_oper(chi: OperCanonical) -> tuple[Connection, ReducedFormInfo]:
    """Constructive reduced form: ramify by d_k+1 for a maximizing component
    k, then gauge by the cocharacter s**(n_k rho-check)."""
    alg = chi.algebra
    poles = []
    for vj, (_, dj) in zip(chi.v, alg.vcan):
        nj = _component_pole(vj)
        poles.append(nj)
    if all(nj is None or nj <= 0 for nj in poles):
        conn = to_connection(chi)
        return conn, ReducedFormInfo(1, 0, None, Fraction(0))
    k = None
    best = None
    for j, nj in enumerate(poles):
        if nj is None or nj <= 0:
            continue
        ratio = Fraction(nj, alg.vcan[j][1] + 1)
        if best is None or ratio > best:
            best, k = ratio, j
    nk = poles[k]
    m = alg.vcan[k][1] + 1
    conn = ramify_connection(to_connection(chi), m)
    word = GaugeWord((TorusChar(tuple(
        LaurentScalar.monomial(1, nk, ram=m) for _ in range(alg.rank))),))
    conn = gauge_apply(word, conn)
    op = order_and_polar(conn)
    if op is None:
        return conn, ReducedFormInfo(m, 0, None, Fraction(0))
    order, polar = op
    from .connection import slope_from_reduced
    slope = slope_from_reduced(conn) if order >= 2 else Fraction(0)
    return conn, ReducedFormInfo(m, order, polar, slope)


# -- type A Newton-polygon oracle -------------------------------------------

def typeA_newton_slope(chi: OperCanonical) -> Fraction:
    """Maximal Newton-polygon slope of the scalar operator obtained by
    cyclic-vector elimination in the standard representation.

    Horizontal sections satisfy s' = -A s.  Iterating the covector map
    c -> c' - A^T c from the last coordinate produces an exactly
    unit-triangular family, so the elimination never divides by a series.
    """
    alg = chi.algebra
    if alg.std_rep is None:
        raise ValueError("Newton-polygon slope needs the standard representation")
    n = len(alg.std_rep[0])
    conn = to_connection(chi)
    # matrix of A in the standard representation, entries Laurent scalars
    zero = LaurentScalar.zero(ram=1)
    mat = [[zero for _ in range(n)] for _ in range(n)]
    for idx, s in conn.A.comps.items():
        rep = alg.std_rep[idx]
        for i in range(n):
            for j in range(n):
                if rep[i][j]:
                    mat[i][j] = mat[i][j] + s.scale(rep[i][j])

    def tmap(c: list[LaurentScalar]) -> list[LaurentScalar]:
        out = []
        for j in range(n):
            acc = c[j].derivative()
            for i in range(n):
                if mat[i][j].coeffs or mat[i][j].prec is not None:
                    acc = acc - mat[i][j] * c[i]
            out.append(acc)
        return out

    iterates = [[LaurentScalar.one() if j == n - 1 else zero for j in range(n)]]
    for _ in range(n):
        iterates.append(tmap(iterates[-1]))
    # c_k has support on coordinates >= n-1-k with constant pivot (-1)^k there
    for k in range(n):
        piv = iterates[k][n - 1 - k]
        if piv.coeffs != {0: Fraction((-1) ** k)}:
            raise CyclicVectorFailure("elimination lost its unit pivot")
    # solve sum a_k c_k = -c_n with a_n = 1, by back-substitution on pivots
    a: list[LaurentScalar | None] = [None] * n
    residual = [-s for s in iterates[n]]
    for k in range(n - 1, -1, -1):
        coord = n - 1 - k
        ak = residual[coord].scale(Fraction((-1) ** k))
        a[k] = ak
        for j in range(n):
            term = ak * iterates[k][j]
            residual[j] = residual[j] - term
    best = Fraction(0)
    for i in range(1, n + 1):
        b_i = a[n - i]
        if b_i.coeffs:
            v = min(b_i.coeffs)
            best = max(best, Fraction(-(v + i), i))
        elif b_i.prec is not None and b_i.prec < -i:
            raise PrecisionExhausted("scalar coefficient pole not certified")
    return best
