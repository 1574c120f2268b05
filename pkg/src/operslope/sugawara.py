"""Segal-Sugawara vectors and the Fourier-mode calculus of their fields.

A *state* is an element of the vacuum module written as a rational
combination of monomials in creation generators (all modes <= -1) applied
to the vacuum.  The field attached to a state is evaluated through its
Fourier modes acting on an induced module:

    single generator:  [x_n]_m = (-1)^k C(m, k) x_{m+n+1},   k = -n-1
    nested product:    [x_n B]_m = sum_{r<0} [x_n]_r [B]_{m-1-r}
                                 + sum_{r>=0} [B]_{m-1-r} [x_n]_r
    empty monomial:    [c]_m = c delta_{m,-1}

Both sums are exactly finite on a smooth module.  Write
excess(w) = sum_{(beta,p) in w} (r_beta - p) over the creation generators
of a module monomial (each term >= 1, so excess >= 0), and let

    M = max(0, max_beta (1 - r_beta - r_{-beta}))

be the lattice margin (0 for every depth-r annihilator lattice; positive
margins only occur for hand-built modules such as the plain vacuum).
Straightening a single mode x_{alpha,q} into w can only produce monomials
of excess <= excess(w) + (r_alpha - q) + M: commuting past a creation
generator trades threshold budget one-for-one by superadditivity, and a
central contraction costs at most M.  Iterating through the product rule,
every monomial of [B]_s w has

    excess <= excess(w) + sum_B (r_alpha - n) + #B * M - s - 1,

so the mode is certified zero once the right side is negative.  These
certified cutoffs drive the evaluation loops; the sharper threshold
sum_B (r_alpha - n) + excess(w) - (#B + #w) quoted in reports is the
claimed bound under test, never an evaluation assumption.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import BoundViolation
from .kacmoody import (InducedModuleSpec, Level, ModuleVector, Monomial,
                       UElement, act, induced_module, u_add, u_gen, u_scale,
                       vacuum_vector)
from .liealg import SimpleLieAlgebra
from .moyprasad import ApartmentPoint

Rat = Fraction | int


def validate_state(u: UElement) -> None:
    for mono in u:
        for _, n in mono:
            if n > -1:
                raise ValueError("states use creation modes (<= -1) only")


def _binom(r: int, k: int) -> int:
    """C(r, k) for k >= 0 and any integer r (falling factorial / k!)."""
    num = 1
    for j in range(k):
        num *= r - j
    return num // math.factorial(k)


def _excess(spec: InducedModuleSpec, mono: Monomial) -> int:
    return sum(spec.threshold(i) - n for i, n in mono)


@functools.lru_cache(maxsize=None)
def lattice_margin(spec: InducedModuleSpec) -> int:
    """M = max(0, 1 - r_beta - r_{-beta}): the worst-case excess gained by a
    central contraction while straightening.  Also asserts superadditivity of
    the thresholds, which the excess bookkeeping relies on."""
    lat = spec.annihilator
    weights = set(spec.algebra.weights_star)
    for wa in weights:
        for wb in weights:
            wc = tuple(a + b for a, b in zip(wa, wb))
            if wc in weights:
                assert lat.power(wa) + lat.power(wb) >= lat.power(wc), \
                    "annihilation thresholds are not superadditive"
    m = 0
    for w in weights:
        neg = tuple(-c for c in w)
        m = max(m, 1 - lat.power(w) - lat.power(neg))
    return m


def mode_kill_bound(spec: InducedModuleSpec, state_mono: Monomial,
                    w: ModuleVector) -> int:
    """A certified s0 with [state_mono]_s w = 0 for all s >= s0."""
    if not w:
        return 0
    margin = lattice_margin(spec)
    w_part = max(_excess(spec, m) for m in w)
    return _excess(spec, state_mono) + len(state_mono) * margin + w_part


def _apply_mono(spec: InducedModuleSpec, mono: Monomial, m: int,
                w: ModuleVector) -> ModuleVector:
    if not w:
        return {}
    if not mono:
        return dict(w) if m == -1 else {}
    (i1, n1), rest = mono[0], mono[1:]
    k = -n1 - 1
    thresh = spec.threshold(i1)
    out: list[ModuleVector] = []
    margin = lattice_margin(spec)
    # r >= 0: [rest]_{m-1-r} ( [x]_r w ); [x]_r w = 0 once r-k clears the
    # annihilation threshold adjusted by the excess of w and the margin
    r_stop = k + thresh + margin + 1 + max(_excess(spec, mo) for mo in w)
    for r in range(0, max(r_stop, 0)):
        c = _binom(r, k)
        if not c:
            continue
        xw = act(u_gen(i1, r - k, Fraction((-1) ** k * c)), w, spec)
        if xw:
            out.append(_apply_mono(spec, rest, m - 1 - r, xw))
    # r < 0: [x]_r ( [rest]_{m-1-r} w ); the inner mode is certified zero
    # once m-1-r reaches the kill bound of rest on w
    bound = mode_kill_bound(spec, rest, w)
    r = -1
    while m - 1 - r < bound:
        inner = _apply_mono(spec, rest, m - 1 - r, w)
        if inner:
            c = _binom(r, k)
            if c:
                out.append(act(u_gen(i1, r - k, Fraction((-1) ** k * c)),
                               inner, spec))
        r -= 1
    return u_add(*out)


def fourier_apply(state: UElement, m: int, w: ModuleVector,
                  spec: InducedModuleSpec) -> ModuleVector:
    """Apply the Fourier mode [state]_m of the attached field to w."""
    validate_state(state)
    out: list[ModuleVector] = []
    for mono, c in state.items():
        for wmono, wc in w.items():
            out.append(u_scale(_apply_mono(spec, mono, m, {wmono: wc}), c))
    return u_add(*out)


def quadratic_sugawara(alg: SimpleLieAlgebra) -> UElement:
    """S = 1/2 sum_{a} x_{a,-1} x^a_{-1} with {x^a} dual to {x_a} for the
    normalized invariant form kappa_0 = Killing / (2 h-dual)."""
    d = alg.dim
    norm = Fraction(1, 2 * alg.dual_coxeter)
    gram = [[alg.killing[a][b] * norm for b in range(d)] for a in range(d)]
    ginv = linalg.inverse(gram)
    state: dict[Monomial, Fraction] = {}
    for a in range(d):
        for b in range(d):
            c = Fraction(1, 2) * ginv[b][a]
            if not c:
                continue
            mono = ((b, -1), (a, -1))
            state[mono] = state.get(mono, Fraction(0)) + c
    return {m: c for m, c in state.items() if c}


# -- Segal-Sugawara vector validation and annihilation bounds ----------------

@dataclass
class SSReport:
    degree: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_ss_vector(alg: SimpleLieAlgebra, state: UElement,
                       degree: int) -> SSReport:
    """A Segal-Sugawara vector of degree d+1 is a combination of monomials
    of <= d+1 generators with total mode -(d+1) and total weight zero."""
    rep = SSReport(degree)
    for mono in state:
        if len(mono) > degree + 1:
            rep.violations.append(f"monomial {mono} has length > {degree + 1}")
        if sum(n for _, n in mono) != -(degree + 1):
            rep.violations.append(f"monomial {mono} has wrong total mode")
        wt = [0] * alg.rank
        for i, _ in mono:
            for p, c in enumerate(alg.basis[i].weight):
                wt[p] += c
        if any(wt):
            rep.violations.append(f"monomial {mono} has nonzero total weight")
        for _, n in mono:
            if n > -1:
                rep.violations.append(f"monomial {mono} has a non-creation mode")
    return rep


@dataclass
class AnnihilationReport:
    depth: Fraction
    degree: int
    theorem_bound: Fraction          # (d+1)(r+1)
    monomial_bound: int              # max per-monomial kill bound
    enforced_bound: int              # threshold actually guaranteed here
    annihilated: dict[int, bool]     # tested mode -> killed the vector?

    @property
    def ok(self) -> bool:
        return all(killed for m, killed in self.annihilated.items()
                   if m >= self.enforced_bound)


@functools.lru_cache(maxsize=None)
def sharp_bound_applicable(spec: InducedModuleSpec) -> bool:
    """True when the per-monomial annihilation bound
    sum_j (r_j - n_j) - k is provable for this module: every colliding
    weight pair must have threshold slack r_a + r_b >= r_{a+b} + 1, and
    every centrally paired weight must have r_a + r_{-a} >= 2.  At boundary
    modules violating this (e.g. the barycentre at depth 0) the bound has
    explicit counterexamples, although the full Sugawara sums still satisfy
    the depth bound (d+1)(r+1)."""
    lat = spec.annihilator
    alg = spec.algebra
    for (i, j), terms in alg.struct.items():
        if not terms:
            continue
        wi, wj = alg.basis[i].weight, alg.basis[j].weight
        wc = tuple(a + b for a, b in zip(wi, wj))
        if lat.power(wi) + lat.power(wj) < lat.power(wc) + 1:
            return False
    for i in range(alg.dim):
        for j in range(alg.dim):
            if alg.killing[i][j]:
                wi, wj = alg.basis[i].weight, alg.basis[j].weight
                if (all(a + b == 0 for a, b in zip(wi, wj))
                        and lat.power(wi) + lat.power(wj) < 2):
                    return False
    return True


def monomial_bound(spec: InducedModuleSpec, state: UElement) -> int:
    """max over monomials of sum_j (r_{alpha_j} - n_j) - k: the first mode
    certified to kill the generating vector."""
    return max(_excess(spec, mono) - len(mono) for mono in state)


def annihilation_check(x: ApartmentPoint, r: Rat, state: UElement,
                       degree: int, modes: list[int],
                       level: Level | None = None) -> AnnihilationReport:
    """Verify that the tested Fourier modes kill the generating vector of
    the depth-r induced module whenever the exact bound says they must."""
    r = Fraction(r)
    level = level or Level.critical()
    spec = induced_module(x, r, level)
    theorem = (degree + 1) * (r + 1)
    mbound = monomial_bound(spec, state)
    if mbound > theorem:
        raise BoundViolation(
            f"per-monomial bound {mbound} exceeds the depth bound {theorem}")
    # the per-monomial threshold is only provable on modules with strict
    # collision slack; elsewhere enforce the depth bound
    enforce = mbound if sharp_bound_applicable(spec) else math.ceil(theorem)
    results: dict[int, bool] = {}
    vac = vacuum_vector()
    for m in modes:
        results[m] = not fourier_apply(state, m, vac, spec)
        if m >= enforce and not results[m]:
            raise BoundViolation(
                f"mode {m} >= bound {enforce} fails to annihilate")
    return AnnihilationReport(r, degree, theorem, mbound, enforce, results)


def mode_commutator(state: UElement, m: int, gen: tuple[int, int],
                    w: ModuleVector, spec: InducedModuleSpec) -> ModuleVector:
    """[[state]_m, x_gen] applied to w."""
    i, n = gen
    first = fourier_apply(state, m, act(u_gen(i, n), w, spec), spec)
    second = act(u_gen(i, n), fourier_apply(state, m, w, spec), spec)
    return u_add(first, u_scale(second, -1))
