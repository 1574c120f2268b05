"""JSON codecs: bit-exact round trips and schema rejection."""

from fractions import Fraction

import pytest

from operslope import (GaugeWord, LaurentScalar, LoopElement, OperCanonical,
                       OperGeneral, SchemaError, UnipExp, cocharacter,
                       get_type_A, to_connection, u_gen, u_mul)
from operslope import jsonio

F = Fraction


def test_rational_roundtrip():
    for x in (F(0), F(3), F(-7, 2), F(22, 7)):
        assert jsonio.decode_rational(jsonio.encode_rational(x)) == x
    assert jsonio.decode_rational(5) == 5
    assert jsonio.decode_rational("-3/4") == F(-3, 4)


@pytest.mark.parametrize("bad", ["1/0", "x", 1.5, None, True, [], {}])
def test_bad_rationals_rejected(bad):
    with pytest.raises(SchemaError):
        jsonio.decode_rational(bad)


def test_series_roundtrip():
    s = LaurentScalar.from_terms({-3: F(2), 1: F(-1, 6)}, prec=7, ram=2)
    t = jsonio.decode_series(jsonio.encode_series(s))
    assert t.coeffs == s.coeffs and t.prec == s.prec and t.ram == s.ram


@pytest.mark.parametrize("bad", [
    [],                                        # not an object
    {"terms": [[0, "1"], [0, "2"]]},           # duplicate exponents
    {"b": 0, "terms": []},                     # bad ramification
    {"prec": "high", "terms": []},             # bad precision
    {"terms": [[True, "1"]]},                  # boolean exponent
    {"terms": [["0", "1"]]},                   # string exponent
])
def test_bad_series_rejected(bad):
    with pytest.raises(SchemaError):
        jsonio.decode_series(bad)


def test_builtin_algebra_names():
    assert jsonio.load_algebra("A3").rank == 3
    with pytest.raises(SchemaError):
        jsonio.load_algebra("A9")
    with pytest.raises(SchemaError):
        jsonio.load_algebra("/nonexistent/algebra.json")


def test_algebra_roundtrip():
    for rank in (1, 2):
        alg = get_type_A(rank)
        alg2 = jsonio.decode_algebra(jsonio.encode_algebra(alg))
        assert alg2.rank == alg.rank
        assert [b.label for b in alg2.basis] == [b.label for b in alg.basis]
        assert alg2.struct == alg.struct
        assert alg2.killing == alg.killing


def test_invalid_structure_constants_rejected():
    doc = jsonio.encode_algebra(get_type_A(1))
    doc["brackets"] = [[0, 1, [[2, "1"]]], [1, 0, [[2, "1"]]]]  # not antisymmetric
    with pytest.raises(SchemaError):
        jsonio.decode_algebra(doc)


def test_lie_element_roundtrip_with_aliases():
    alg = get_type_A(1)
    x = alg.element(e=F(1, 2), h=-3)
    assert jsonio.decode_lie_element(alg, jsonio.encode_lie_element(x)) == x
    # rank-1 accepts both e and e1 spellings
    assert jsonio.decode_lie_element(alg, {"e1": "1"}) == alg.element(e=1)
    with pytest.raises(SchemaError):
        jsonio.decode_lie_element(alg, {"zz": "1"})


def test_connection_roundtrip():
    alg = get_type_A(2)
    chi = OperCanonical(alg, (LaurentScalar.monomial(1, -3),
                              LaurentScalar.monomial(F(2, 5), -1)))
    conn = to_connection(chi)
    back = jsonio.decode_connection(jsonio.encode_connection(conn))
    assert back.A.same(conn.A) and back.algebra.name == alg.name


def test_oper_roundtrips():
    alg = get_type_A(2)
    chi = OperCanonical(alg, (LaurentScalar.monomial(1, -3),
                              LaurentScalar.zero(prec=0)))
    assert jsonio.decode_oper(jsonio.encode_oper(chi)).same(chi)
    og = OperGeneral(alg, (LaurentScalar.one(), LaurentScalar.monomial(2, -1)),
                     LoopElement(alg, {alg.index_of["h1"]:
                                       LaurentScalar.monomial(1, -2)}, 1))
    back = jsonio.decode_oper_general(jsonio.encode_oper_general(og))
    assert back.q.same(og.q)
    assert all(a.same(b) for a, b in zip(back.phis, og.phis))


def test_oper_schema_rejections():
    with pytest.raises(SchemaError):
        jsonio.decode_oper({"algebra": "A2", "v": [{"terms": []}]})  # wrong rank
    with pytest.raises(SchemaError):
        jsonio.decode_oper_general({"algebra": "A1", "phi": [{"terms": [[0, "1"]]}],
                                    "q": {"f": {"terms": [[0, "1"]]}}})


def test_gauge_word_roundtrip():
    alg = get_type_A(2)
    word = GaugeWord((
        UnipExp(alg.element(e1=1), LaurentScalar.monomial(F(1, 3), -2)),
        cocharacter(alg, [1, -1]),
    ))
    back = jsonio.decode_gauge_word(jsonio.encode_gauge_word(word, alg), alg)
    assert len(back.factors) == 2
    assert back.factors[0].x == word.factors[0].x
    assert back.factors[0].f.same(word.factors[0].f)
    assert all(a.same(b) for a, b in
               zip(back.factors[1].chis, word.factors[1].chis))


def test_uelement_roundtrip():
    alg = get_type_A(1)
    e, f = alg.index_of["e"], alg.index_of["f"]
    u = u_mul(u_gen(e, -1, F(1, 2)), u_gen(f, -3))
    assert jsonio.decode_uelement(jsonio.encode_uelement(u, alg), alg) == u
    with pytest.raises(SchemaError):
        jsonio.decode_uelement([["1", [["e", "x"]]]], alg)
