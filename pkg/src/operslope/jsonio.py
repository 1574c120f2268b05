"""JSON codecs for every exchange format: rationals as "num/den" strings,
series, algebras (built-in A<n> names or structure-constant files),
connections, opers, gauge words, and enveloping-algebra elements.

Every encoder/decoder pair round-trips bit-exactly; decoders raise
SchemaError on malformed input, never a bare KeyError/ValueError.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .connection import (Connection, GaugeWord, LoopElement, TorusChar,
                         UnipExp)
from .errors import SchemaError
from .kacmoody import UElement
from .liealg import (BasisInfo, LieElement, SimpleLieAlgebra, get_type_A,
                     validate_structure)
from .oper import OperCanonical, OperGeneral
from .series import LaurentScalar

# A1 historically also answers to bare e/f/h aliases even though the
# general naming scheme is e1/f1/h1.
_A1_ALIASES = {"e1": "e", "f1": "f", "h1": "h"}


def encode_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def decode_rational(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise SchemaError(f"rational must be an int or 'num/den' string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {s!r}") from exc


def encode_series(s: LaurentScalar) -> dict:
    return {
        "b": s.ram,
        "prec": s.prec,
        "terms": [[e, encode_rational(c)] for e, c in sorted(s.coeffs.items())],
    }


def decode_series(doc) -> LaurentScalar:
    if not isinstance(doc, dict):
        raise SchemaError("series must be an object")
    ram = doc.get("b", 1)
    prec = doc.get("prec")
    terms = doc.get("terms", [])
    if not isinstance(ram, int) or ram < 1:
        raise SchemaError(f"bad ramification {ram!r}")
    if prec is not None and not isinstance(prec, int):
        raise SchemaError(f"bad precision {prec!r}")
    if not isinstance(terms, list):
        raise SchemaError("series terms must be a list of [exp, rational]")
    coeffs = {}
    for item in terms:
        if (not isinstance(item, list) or len(item) != 2
                or not isinstance(item[0], int) or isinstance(item[0], bool)):
            raise SchemaError(f"bad series term {item!r}")
        e, c = item
        if e in coeffs:
            raise SchemaError(f"duplicate exponent {e}")
        coeffs[e] = decode_rational(c)
    return LaurentScalar(coeffs, prec, ram)


# -- algebras ----------------------------------------------------------------

def _label_index(alg: SimpleLieAlgebra) -> dict[str, int]:
    idx = {b.label: i for i, b in enumerate(alg.basis)}
    if alg.name == "A1":
        for alias, label in _A1_ALIASES.items():
            idx.setdefault(alias, idx[label])
    return idx


def load_algebra(spec: str) -> SimpleLieAlgebra:
    """Built-in name A1..A8 or a path to a structure-constant file."""
    if len(spec) >= 2 and spec[0] == "A" and spec[1:].isdigit():
        rank = int(spec[1:])
        if not 1 <= rank <= 8:
            raise SchemaError(f"built-in algebras range over A1..A8, got {spec}")
        return get_type_A(rank)
    try:
        with open(spec) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read algebra file {spec}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"algebra file {spec} is not JSON: {exc}") from exc
    return decode_algebra(doc)


def decode_algebra(doc) -> SimpleLieAlgebra:
    if not isinstance(doc, dict):
        raise SchemaError("algebra document must be an object")
    try:
        rank = doc["rank"]
        labels = doc["basis"]
        weights = doc["weights"]
        brackets = doc["brackets"]
    except KeyError as exc:
        raise SchemaError(f"algebra document missing key {exc}") from exc
    if not isinstance(rank, int) or rank < 1:
        raise SchemaError("rank must be a positive integer")
    if (not isinstance(labels, list) or not isinstance(weights, list)
            or len(labels) != len(weights)):
        raise SchemaError("basis and weights must be lists of equal length")
    if len(set(labels)) != len(labels):
        raise SchemaError("duplicate basis labels")
    basis = []
    for label, w in zip(labels, weights):
        if not isinstance(label, str):
            raise SchemaError(f"bad label {label!r}")
        if (not isinstance(w, list) or len(w) != rank
                or not all(isinstance(c, int) and not isinstance(c, bool) for c in w)):
            raise SchemaError(f"bad weight {w!r}")
        basis.append(BasisInfo(label, tuple(w), sum(w)))
    struct: dict[tuple[int, int], dict[int, Fraction]] = {}
    if not isinstance(brackets, list):
        raise SchemaError("brackets must be a list")
    for row in brackets:
        if not isinstance(row, list) or len(row) != 3:
            raise SchemaError(f"bad bracket row {row!r}")
        a, b, terms = row
        if not (isinstance(a, int) and isinstance(b, int)
                and 0 <= a < len(basis) and 0 <= b < len(basis)):
            raise SchemaError(f"bracket indices out of range in {row!r}")
        if not isinstance(terms, list):
            raise SchemaError(f"bad bracket terms {terms!r}")
        entry = {}
        for t in terms:
            if not isinstance(t, list) or len(t) != 2 or not isinstance(t[0], int):
                raise SchemaError(f"bad bracket term {t!r}")
            c, val = t
            if not 0 <= c < len(basis):
                raise SchemaError(f"bracket target out of range in {t!r}")
            v = decode_rational(val)
            if v:
                entry[c] = v
        if entry:
            struct[(a, b)] = entry
    dim = len(basis)
    ads = []
    for i in range(dim):
        m = [[Fraction(0)] * dim for _ in range(dim)]
        for j in range(dim):
            for k, c in struct.get((i, j), {}).items():
                m[k][j] = c
        ads.append(m)
    killing = [[sum((sum(ads[a][r][c] * ads[b][c][r] for c in range(dim))
                     for r in range(dim)), Fraction(0))
                for b in range(dim)] for a in range(dim)]
    try:
        alg = SimpleLieAlgebra(doc.get("name", "custom"), rank, basis, struct,
                               killing)
        validate_structure(alg)
    except (AssertionError, ValueError) as exc:
        raise SchemaError(f"structure constants rejected: {exc}") from exc
    return alg


def encode_algebra(alg: SimpleLieAlgebra) -> dict:
    brackets = []
    for (a, b), terms in sorted(alg.struct.items()):
        brackets.append([a, b, [[c, encode_rational(v)]
                                for c, v in sorted(terms.items())]])
    return {
        "name": alg.name,
        "rank": alg.rank,
        "basis": [b.label for b in alg.basis],
        "weights": [list(b.weight) for b in alg.basis],
        "brackets": brackets,
    }


# -- Lie and loop elements ---------------------------------------------------

def encode_lie_element(x: LieElement) -> dict:
    return {x.algebra.basis[i].label: encode_rational(c)
            for i, c in sorted(x.coeffs.items())}


def decode_lie_element(alg: SimpleLieAlgebra, doc) -> LieElement:
    if not isinstance(doc, dict):
        raise SchemaError("element must map labels to rationals")
    idx = _label_index(alg)
    coeffs = {}
    for label, val in doc.items():
        if label not in idx:
            raise SchemaError(f"unknown basis label {label!r}")
        coeffs[idx[label]] = decode_rational(val)
    return LieElement(alg, coeffs)


def encode_connection(conn: Connection) -> dict:
    return {
        "algebra": conn.algebra.name,
        "b": conn.ram,
        "components": {conn.algebra.basis[i].label: encode_series(s)
                       for i, s in sorted(conn.A.comps.items())},
    }


def decode_connection(doc, alg: SimpleLieAlgebra | None = None) -> Connection:
    if not isinstance(doc, dict):
        raise SchemaError("connection must be an object")
    if alg is None:
        alg = load_algebra(_require_str(doc, "algebra"))
    ram = doc.get("b", 1)
    if not isinstance(ram, int) or ram < 1:
        raise SchemaError(f"bad ramification {ram!r}")
    comps_doc = doc.get("components", {})
    if not isinstance(comps_doc, dict):
        raise SchemaError("components must map labels to series")
    idx = _label_index(alg)
    comps = {}
    for label, sdoc in comps_doc.items():
        if label not in idx:
            raise SchemaError(f"unknown basis label {label!r}")
        s = decode_series(sdoc)
        if s.ram != ram:
            raise SchemaError(f"component {label} has b={s.ram}, expected {ram}")
        comps[idx[label]] = s
    return Connection(LoopElement(alg, comps, ram))


# -- opers -------------------------------------------------------------------

def encode_oper(chi: OperCanonical) -> dict:
    return {"algebra": chi.algebra.name,
            "v": [encode_series(s) for s in chi.v]}


def decode_oper(doc, alg: SimpleLieAlgebra | None = None) -> OperCanonical:
    if not isinstance(doc, dict):
        raise SchemaError("oper must be an object")
    if alg is None:
        alg = load_algebra(_require_str(doc, "algebra"))
    v = doc.get("v")
    if not isinstance(v, list) or len(v) != alg.rank:
        raise SchemaError(f"oper needs a list of {alg.rank} canonical series")
    series = [decode_series(s) for s in v]
    for s in series:
        if s.ram != 1:
            raise SchemaError("canonical opers live over the base parameter")
    return OperCanonical(alg, tuple(series))


def encode_oper_general(op: OperGeneral) -> dict:
    return {
        "algebra": op.algebra.name,
        "phi": [encode_series(s) for s in op.phis],
        "q": {op.algebra.basis[i].label: encode_series(s)
              for i, s in sorted(op.q.comps.items())},
    }


def decode_oper_general(doc, alg: SimpleLieAlgebra | None = None) -> OperGeneral:
    if not isinstance(doc, dict):
        raise SchemaError("oper must be an object")
    if alg is None:
        alg = load_algebra(_require_str(doc, "algebra"))
    phi = doc.get("phi")
    if not isinstance(phi, list) or len(phi) != alg.rank:
        raise SchemaError(f"need one phi per simple root ({alg.rank})")
    phis = tuple(decode_series(s) for s in phi)
    q_doc = doc.get("q", {})
    if not isinstance(q_doc, dict):
        raise SchemaError("q must map labels to series")
    idx = _label_index(alg)
    comps = {}
    for label, sdoc in q_doc.items():
        if label not in idx:
            raise SchemaError(f"unknown basis label {label!r}")
        i = idx[label]
        if alg.basis[i].height < 0:
            raise SchemaError(f"q component {label} is not in the Borel")
        comps[i] = decode_series(sdoc)
    try:
        return OperGeneral(alg, phis, LoopElement(alg, comps, 1))
    except Exception as exc:
        raise SchemaError(str(exc)) from exc


# -- gauge words -------------------------------------------------------------

def encode_gauge_word(word: GaugeWord, alg: SimpleLieAlgebra) -> list:
    out = []
    for f in word.factors:
        if isinstance(f, UnipExp):
            out.append({"type": "unip",
                        "x": encode_lie_element(f.x),
                        "f": encode_series(f.f)})
        else:
            out.append({"type": "torus",
                        "chi": [encode_series(c) for c in f.chis]})
    return out


def decode_gauge_word(doc, alg: SimpleLieAlgebra) -> GaugeWord:
    if not isinstance(doc, list):
        raise SchemaError("gauge word must be a list of factor records")
    factors = []
    for rec in doc:
        if not isinstance(rec, dict) or "type" not in rec:
            raise SchemaError(f"bad gauge factor {rec!r}")
        if rec["type"] == "unip":
            x = decode_lie_element(alg, rec.get("x", {}))
            factors.append(UnipExp(x, decode_series(rec.get("f"))))
        elif rec["type"] == "torus":
            chi = rec.get("chi")
            if not isinstance(chi, list) or len(chi) != alg.rank:
                raise SchemaError("torus factor needs one character per simple root")
            factors.append(TorusChar(tuple(decode_series(c) for c in chi)))
        else:
            raise SchemaError(f"unknown gauge factor type {rec['type']!r}")
    return GaugeWord(tuple(factors))


# -- enveloping-algebra elements --------------------------------------------

def encode_uelement(u: UElement, alg: SimpleLieAlgebra) -> list:
    out = []
    for mono, c in sorted(u.items()):
        out.append([encode_rational(c),
                    [[alg.basis[i].label, n] for i, n in mono]])
    return out


def decode_uelement(doc, alg: SimpleLieAlgebra) -> UElement:
    if not isinstance(doc, list):
        raise SchemaError("enveloping element must be a list of [coef, monomial]")
    idx = _label_index(alg)
    out: UElement = {}
    for item in doc:
        if not isinstance(item, list) or len(item) != 2:
            raise SchemaError(f"bad monomial record {item!r}")
        coef, mono_doc = item
        c = decode_rational(coef)
        if not isinstance(mono_doc, list):
            raise SchemaError(f"bad monomial {mono_doc!r}")
        gens = []
        for g in mono_doc:
            if (not isinstance(g, list) or len(g) != 2
                    or not isinstance(g[1], int) or isinstance(g[1], bool)):
                raise SchemaError(f"bad generator {g!r}")
            label, mode = g
            if label not in idx:
                raise SchemaError(f"unknown basis label {label!r}")
            gens.append((idx[label], mode))
        mono = tuple(gens)
        out[mono] = out.get(mono, Fraction(0)) + c
    return {m: c for m, c in out.items() if c}


def _require_str(doc: dict, key: str) -> str:
    val = doc.get(key)
    if not isinstance(val, str):
        raise SchemaError(f"missing or non-string field {key!r}")
    return val
