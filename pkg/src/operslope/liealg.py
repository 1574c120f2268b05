"""Exact structure theory of a simple Lie algebra.

A ``SimpleLieAlgebra`` carries a Chevalley-style basis (root vectors
``e``/``f`` for each positive root, a Cartan basis ``h_1..h_rank``),
exact-rational structure constants, the Killing form, the principal
gradation, the principal sl2 triple and the Kostant slice.

Type A is built in via the trace-zero matrix realization; other types can
be loaded from a structure-constant file (see ``jsonio.load_algebra_file``)
and are validated against the same invariants.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import MismatchedAlgebra
from .linalg import Matrix

Rat = Fraction | int


@dataclass(frozen=True)
class BasisInfo:
    label: str
    weight: tuple[int, ...]   # coordinates in the simple-root basis; 0 for Cartan
    height: int               # principal degree: sum of the weight coordinates


class LieElement:
    """Finite rational linear combination of basis elements."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "SimpleLieAlgebra", coeffs: dict[int, Fraction]):
        self.algebra = algebra
        self.coeffs = {i: Fraction(c) for i, c in coeffs.items() if c}

    def _check(self, other: "LieElement") -> None:
        if self.algebra is not other.algebra:
            raise MismatchedAlgebra("elements over different algebras")

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        coeffs = dict(self.coeffs)
        for i, c in other.coeffs.items():
            coeffs[i] = coeffs.get(i, Fraction(0)) + c
        return LieElement(self.algebra, coeffs)

    def __neg__(self) -> "LieElement":
        return LieElement(self.algebra, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def scale(self, c: Rat) -> "LieElement":
        c = Fraction(c)
        return LieElement(self.algebra, {i: c * x for i, x in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def to_vector(self) -> list[Fraction]:
        return [self.coeffs.get(i, Fraction(0)) for i in range(self.algebra.dim)]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "<0>"
        parts = [f"{c}*{self.algebra.basis[i].label}"
                 for i, c in sorted(self.coeffs.items())]
        return "<" + " + ".join(parts) + ">"


class SimpleLieAlgebra:
    """Immutable container for the structure data of a simple Lie algebra."""

    def __init__(self, name: str, rank: int, basis: list[BasisInfo],
                 struct: dict[tuple[int, int], dict[int, Fraction]],
                 killing: Matrix,
                 std_rep: list[Matrix] | None = None):
        self.name = name
        self.rank = rank
        self.basis = basis
        self.dim = len(basis)
        self.struct = struct
        self.killing = killing
        self.std_rep = std_rep  # defining matrix representation, type A only
        self.index_of = {b.label: i for i, b in enumerate(basis)}
        self._finish()

    # -- derived structure --------------------------------------------------

    def _finish(self) -> None:
        rank = self.rank
        self.cartan_idx = [i for i, b in enumerate(self.basis)
                           if b.weight == (0,) * rank]
        unit = lambda i: tuple(1 if j == i else 0 for j in range(rank))
        self.simple_e_idx = [self._weight_index(unit(i)) for i in range(rank)]
        self.simple_f_idx = [self._weight_index(tuple(-w for w in unit(i)))
                             for i in range(rank)]
        if len(self.cartan_idx) != rank:
            raise ValueError("Cartan dimension does not match rank")
        # Cartan matrix entries alpha_j(h_i), read off from [h_i, e_j].
        self.cartan_matrix = linalg.zeros(rank, rank)
        for i, hi in enumerate(self.cartan_idx):
            for j, ej in enumerate(self.simple_e_idx):
                br = self.struct.get((hi, ej), {})
                self.cartan_matrix[j][i] = br.get(ej, Fraction(0))
        # alpha(h_i) for every weight follows by linearity in the weight coords.
        cm_inv = linalg.inverse(self.cartan_matrix)
        # Fundamental coweights: alpha_j(omega_i) = delta_ij.
        self.fund_coweights = [
            LieElement(self, {self.cartan_idx[k]: cm_inv[k][i] for k in range(rank)})
            for i in range(rank)]
        self.rho_check = LieElement(self, {})
        for w in self.fund_coweights:
            self.rho_check = self.rho_check + w
        self.p_minus = LieElement(self, {i: Fraction(1) for i in self.simple_f_idx})
        two_rho = self.rho_check.scale(2)
        # p_1 = sum a_i e_i with [p_1, p_{-1}] = 2 rho_check; the cross brackets
        # [e_i, f_j] vanish for i != j, so a_i is the h_i-coordinate of 2 rho_check.
        self.p_plus = LieElement(self, {
            self.simple_e_idx[i]: two_rho.coeffs.get(self.cartan_idx[i], Fraction(0))
            for i in range(rank)})
        self._ad_cache: dict[int, Matrix] = {}
        self._build_vcan()
        self.max_height = max(b.height for b in self.basis)
        self.coxeter = self.max_height + 1
        self.dual_coxeter = self._dual_coxeter()
        self.roots = sorted({b.weight for b in self.basis
                             if b.weight != (0,) * rank})
        self.weights_star = [(0,) * rank] + self.roots

    def _weight_index(self, weight: tuple[int, ...]) -> int:
        for i, b in enumerate(self.basis):
            if b.weight == weight:
                return i
        raise ValueError(f"no basis element of weight {weight}")

    def _build_vcan(self) -> None:
        """Kernel of ad p_1 on n, graded by principal degree, first nonzero
        coordinate normalized to 1."""
        vcan: list[tuple[LieElement, int]] = []
        by_height: dict[int, list[int]] = {}
        for i, b in enumerate(self.basis):
            if b.height > 0:
                by_height.setdefault(b.height, []).append(i)
        for d in sorted(by_height):
            src = by_height[d]
            dst = by_height.get(d + 1, [])
            rows = []
            for k in dst:
                rows.append([self.bracket_basis(self.p_plus, j).coeffs.get(k, Fraction(0))
                             for j in src])
            if not rows:
                rows = []
            mat = rows if rows else [[Fraction(0)] * len(src)]
            for vec in linalg.kernel_basis(mat):
                lead = next(c for c in vec if c)
                vec = [c / lead for c in vec]
                vcan.append((LieElement(self, dict(zip(src, vec))), d))
        vcan.sort(key=lambda p: p[1])
        self.vcan = vcan
        self.exponents = [d for _, d in vcan]
        if len(vcan) != self.rank:
            raise ValueError("Kostant slice has wrong dimension")

    def _dual_coxeter(self) -> int:
        """1 + sum of comarks, read from the coroot of the highest root."""
        theta_idx = max((i for i, b in enumerate(self.basis) if b.height > 0),
                        key=lambda i: self.basis[i].height)
        theta = self.basis[theta_idx].weight
        f_theta_idx = self._weight_index(tuple(-w for w in theta))
        h_theta = self.bracket_basis(
            LieElement(self, {theta_idx: Fraction(1)}), f_theta_idx)
        # normalize so that theta(coroot) = 2
        val = sum(
            sum(theta[j] * self.cartan_matrix[j][k] for j in range(self.rank))
            * h_theta.coeffs.get(self.cartan_idx[k], Fraction(0))
            for k in range(self.rank))
        coroot = h_theta.scale(Fraction(2) / val)
        comark_sum = sum(coroot.coeffs.get(hi, Fraction(0)) for hi in self.cartan_idx)
        if comark_sum.denominator != 1:
            raise ValueError("non-integral comarks")
        return 1 + int(comark_sum)

    # -- operations ---------------------------------------------------------

    def element(self, coeffs: dict[int, Rat] | None = None, **by_label: Rat) -> LieElement:
        data: dict[int, Fraction] = {}
        if coeffs:
            data.update({i: Fraction(c) for i, c in coeffs.items()})
        for label, c in by_label.items():
            data[self.index_of[label]] = Fraction(c)
        return LieElement(self, data)

    def zero(self) -> LieElement:
        return LieElement(self, {})

    def bracket_basis(self, x: LieElement, j: int) -> LieElement:
        """[x, b_j] for a basis index j."""
        out: dict[int, Fraction] = {}
        for i, c in x.coeffs.items():
            for k, s in self.struct.get((i, j), {}).items():
                out[k] = out.get(k, Fraction(0)) + c * s
        return LieElement(self, out)

    def bracket(self, x: LieElement, y: LieElement) -> LieElement:
        if x.algebra is not self or y.algebra is not self:
            raise MismatchedAlgebra("bracket over a different algebra")
        out: dict[int, Fraction] = {}
        for j, cy in y.coeffs.items():
            for k, c in self.bracket_basis(x, j).coeffs.items():
                out[k] = out.get(k, Fraction(0)) + cy * c
        return LieElement(self, out)

    def ad_matrix(self, x: LieElement) -> Matrix:
        cols = [self.bracket_basis(x, j).to_vector() for j in range(self.dim)]
        return linalg.transpose(cols)

    def killing_form(self, x: LieElement, y: LieElement) -> Fraction:
        total = Fraction(0)
        for i, cx in x.coeffs.items():
            for j, cy in y.coeffs.items():
                total += cx * cy * self.killing[i][j]
        return total

    def is_ad_nilpotent(self, x: LieElement) -> bool:
        return linalg.is_nilpotent_matrix(self.ad_matrix(x))

    def centralizer_dimension(self, x: LieElement) -> int:
        return len(linalg.kernel_basis(self.ad_matrix(x)))

    def principal_degree_decompose(self, x: LieElement) -> dict[int, LieElement]:
        parts: dict[int, dict[int, Fraction]] = {}
        for i, c in x.coeffs.items():
            parts.setdefault(self.basis[i].height, {})[i] = c
        return {d: LieElement(self, coeffs) for d, coeffs in sorted(parts.items())}

    def weight_value(self, weight: tuple[int, ...], cartan: list[Fraction]) -> Fraction:
        """alpha(x) for alpha with the given simple-root coordinates and x the
        apartment point with simple-root values ``cartan``."""
        return sum((Fraction(m) * v for m, v in zip(weight, cartan)), Fraction(0))

    def __repr__(self) -> str:
        return f"SimpleLieAlgebra({self.name}, rank={self.rank}, dim={self.dim})"


# -- type A construction ----------------------------------------------------

def _matrix_unit(n: int, i: int, j: int) -> Matrix:
    m = linalg.zeros(n, n)
    m[i][j] = Fraction(1)
    return m


def _commutator(a: Matrix, b: Matrix) -> Matrix:
    ab = linalg.mat_mul(a, b)
    ba = linalg.mat_mul(b, a)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


def build_type_A(rank: int) -> SimpleLieAlgebra:
    """sl(rank+1) in its trace-zero matrix realization."""
    if rank < 1:
        raise ValueError("rank must be at least 1")
    n = rank + 1
    basis: list[BasisInfo] = []
    mats: list[Matrix] = []
    pos_roots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pos_roots.sort(key=lambda ij: (ij[1] - ij[0], ij[0]))

    def root_label(prefix: str, i: int, j: int) -> str:
        if rank == 1:
            return prefix
        if j == i + 1:
            return f"{prefix}{i + 1}"
        return f"{prefix}{i + 1}.{j}"

    for i, j in pos_roots:
        weight = tuple(1 if i <= k < j else 0 for k in range(rank))
        basis.append(BasisInfo(root_label("e", i, j), weight, j - i))
        mats.append(_matrix_unit(n, i, j))
    for i, j in pos_roots:
        weight = tuple(-1 if i <= k < j else 0 for k in range(rank))
        basis.append(BasisInfo(root_label("f", i, j), weight, -(j - i)))
        mats.append(_matrix_unit(n, j, i))
    for i in range(rank):
        label = "h" if rank == 1 else f"h{i + 1}"
        m = linalg.zeros(n, n)
        m[i][i] = Fraction(1)
        m[i + 1][i + 1] = Fraction(-1)
        basis.append(BasisInfo(label, (0,) * rank, 0))
        mats.append(m)

    def decompose(m: Matrix) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for bi, (i, j) in enumerate(pos_roots):
            if m[i][j]:
                out[bi] = m[i][j]
            if m[j][i]:
                out[len(pos_roots) + bi] = m[j][i]
        # diagonal part in the h_i basis: partial sums of the diagonal
        acc = Fraction(0)
        for i in range(rank):
            acc += m[i][i]
            if acc:
                out[2 * len(pos_roots) + i] = acc
        return out

    struct: dict[tuple[int, int], dict[int, Fraction]] = {}
    dim = len(basis)
    for a in range(dim):
        for b in range(dim):
            if a == b:
                continue
            br = decompose(_commutator(mats[a], mats[b]))
            if br:
                struct[(a, b)] = br

    # Killing form of sl(n): 2n * tr(xy); checked against trace(ad ad) in tests.
    killing = linalg.zeros(dim, dim)
    for a in range(dim):
        for b in range(a, dim):
            k = 2 * n * linalg.trace(linalg.mat_mul(mats[a], mats[b]))
            killing[a][b] = k
            killing[b][a] = k

    return SimpleLieAlgebra(f"A{rank}", rank, basis, struct, killing, std_rep=mats)


def validate_structure(alg: SimpleLieAlgebra) -> None:
    """Check antisymmetry and the Jacobi identity on all basis triples."""
    basis_elems = [LieElement(alg, {i: Fraction(1)}) for i in range(alg.dim)]
    for a, b in itertools.combinations(range(alg.dim), 2):
        lhs = alg.bracket(basis_elems[a], basis_elems[b])
        rhs = alg.bracket(basis_elems[b], basis_elems[a])
        if not (lhs + rhs).is_zero():
            raise ValueError(f"antisymmetry fails on basis pair ({a}, {b})")
    for a, b, c in itertools.combinations(range(alg.dim), 3):
        x, y, z = basis_elems[a], basis_elems[b], basis_elems[c]
        j = (alg.bracket(alg.bracket(x, y), z)
             + alg.bracket(alg.bracket(y, z), x)
             + alg.bracket(alg.bracket(z, x), y))
        if not j.is_zero():
            raise ValueError(f"Jacobi identity fails on basis triple ({a}, {b}, {c})")


_BUILTIN_CACHE: dict[int, SimpleLieAlgebra] = {}


def get_type_A(rank: int) -> SimpleLieAlgebra:
    if rank not in _BUILTIN_CACHE:
        _BUILTIN_CACHE[rank] = build_type_A(rank)
    return _BUILTIN_CACHE[rank]
