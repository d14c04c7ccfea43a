import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monideal.core import (
    Monomial,
    MonomialIdeal,
    MonomialSyntaxError,
    PolyRing,
    RingMismatchError,
    contains,
    divides,
    format_monomial,
    ideal_from_json,
    ideal_to_json,
    is_squarefree,
    lcm,
    max_gen_degree,
    minimalize,
    parse_ideal_text,
    parse_monomial,
)
from monideal.arithmetic import power
from monideal.golden import SYMBOLIC_SQUARE

from conftest import exponent_vectors, ideals
from oracles import brute_minimal


def test_ring_rejects_duplicates_and_empty_names():
    with pytest.raises(ValueError):
        PolyRing(["x", "x"])
    with pytest.raises(ValueError):
        PolyRing(["x", ""])


def test_monomial_checks_length_and_sign(R6):
    with pytest.raises(ValueError):
        Monomial(R6, (1, 0))
    with pytest.raises(ValueError):
        Monomial(R6, (1, 0, 0, 0, 0, -1))


def test_divides_examples(R6):
    m = R6.monomial
    assert divides(m("x3*x4*x5"), m("x3*x4*x5*x6"))
    assert not divides(m("x1*x4*x5"), m("x2*x5*x6"))
    assert divides(m("x1^2*x3"), m("x1^2*x3"))


def test_ring_mismatch_is_an_error(R6):
    other = PolyRing(["a", "b", "c", "d", "e", "f"])
    with pytest.raises(RingMismatchError):
        divides(R6.one(), other.one())
    with pytest.raises(RingMismatchError):
        lcm(R6.one(), other.one())


def test_lcm_examples(R6):
    m = R6.monomial
    assert lcm(m("x1*x4*x5"), m("x1*x3*x6")) == m("x1*x3*x4*x5*x6")
    assert lcm(m("x1^2*x3"), R6.one()) == m("x1^2*x3")
    assert lcm(m("x2*x6"), m("x2*x6")) == m("x2*x6")


def test_minimalize_examples(R6, J):
    m = R6.monomial
    assert minimalize([m("x1"), m("x1*x2")]).gens == (m("x1").exponents,)
    assert minimalize(J.generators) == J
    assert len(J) == 8
    assert minimalize([], ring=R6).is_zero


def test_minimalize_pairwise_products_of_J(J):
    products = [a * b for a in J.generators for b in J.generators]
    expected = brute_minimal(p.exponents for p in products)
    got = minimalize(products)
    assert set(got.gens) == expected
    assert len(got) == 36


def test_canonical_order_is_degree_then_lex(R6):
    I = R6.ideal(["x2^2", "x1*x3", "x6", "x1^2"])
    assert I.gens == (
        (0, 0, 0, 0, 0, 1),
        (0, 2, 0, 0, 0, 0),
        (1, 0, 1, 0, 0, 0),
        (2, 0, 0, 0, 0, 0),
    )


def test_contains_examples(R6, J):
    m = R6.monomial
    assert contains(J, m("x3*x4*x5*x6"))
    assert not contains(J, m("x1*x2"))
    assert contains(SYMBOLIC_SQUARE, m("x3*x4*x5*x6"))


def test_is_squarefree(R6, J):
    assert is_squarefree(J)
    assert not is_squarefree(power(J, 2))
    assert is_squarefree(MonomialIdeal.zero(R6))


def test_max_gen_degree(J):
    from monideal.arithmetic import frobenius_power

    assert max_gen_degree(J) == 3
    assert max_gen_degree(SYMBOLIC_SQUARE) == 6
    assert max_gen_degree(frobenius_power(J, 2)) == 6
    with pytest.raises(ValueError):
        max_gen_degree(MonomialIdeal.zero(J.ring))


def test_unit_and_zero_ideals(R6):
    unit = MonomialIdeal.unit(R6)
    assert unit.is_unit and contains(unit, R6.one())
    zero = MonomialIdeal.zero(R6)
    assert zero.is_zero and not contains(zero, R6.one())


@given(st.lists(exponent_vectors(4), max_size=8))
def test_minimalize_is_idempotent_and_matches_brute_force(vecs):
    ring = PolyRing.standard(4)
    I = MonomialIdeal.from_exponents(ring, vecs)
    assert MonomialIdeal.from_exponents(ring, I.gens) == I
    assert set(I.gens) == brute_minimal(vecs)


@given(st.lists(exponent_vectors(3), min_size=1, max_size=6), exponent_vectors(3, 3))
def test_contains_agrees_on_redundant_generators(vecs, probe):
    ring = PolyRing.standard(3)
    I = MonomialIdeal.from_exponents(ring, vecs)
    m = Monomial(ring, probe)
    redundant = any(all(g <= x for g, x in zip(v, probe)) for v in vecs)
    assert contains(I, m) == redundant


@given(ideals(), ideals())
def test_ideal_equality_is_mutual_containment(I, K):
    if I.ring != K.ring:
        return
    assert (I == K) == (I <= K and K <= I)


# -- text and JSON formats ---------------------------------------------------


def test_parse_monomial_syntax(R6):
    assert parse_monomial(R6, "x1^2*x3").exponents == (2, 0, 1, 0, 0, 0)
    assert parse_monomial(R6, "1") == R6.one()
    assert parse_monomial(R6, " x1 * x1 ").exponents == (2, 0, 0, 0, 0, 0)


@pytest.mark.parametrize("text", ["x1**2", "x7", "x1*", "", "x1 x2", "2*x1"])
def test_parse_monomial_errors(R6, text):
    with pytest.raises(MonomialSyntaxError):
        parse_monomial(R6, text)


def test_parse_error_reports_line_and_column():
    with pytest.raises(MonomialSyntaxError) as info:
        parse_ideal_text("x1*x2,\nx2*+x3", PolyRing.standard(3))
    assert info.value.line == 2
    assert info.value.column == 4


def test_parse_ideal_text_infers_standard_ring():
    I = parse_ideal_text("(x1*x4*x5, x2^2)")
    assert I.ring.variables == ("x1", "x2", "x3", "x4", "x5")
    assert I.gens == ((0, 2, 0, 0, 0), (1, 0, 0, 1, 1))


@given(ideals(max_vars=5, max_exp=3, nonzero=False))
def test_text_round_trip(I):
    text = ", ".join(format_monomial(I.ring, g) for g in I.gens)
    assert parse_ideal_text(text, I.ring) == I


@given(ideals(max_vars=5, max_exp=3, nonzero=False))
def test_json_round_trip(I):
    import json

    assert ideal_from_json(json.dumps(ideal_to_json(I))) == I


def test_json_format_shape(J):
    data = ideal_to_json(J)
    assert data["vars"] == ["x1", "x2", "x3", "x4", "x5", "x6"]
    assert [1, 0, 0, 1, 1, 0] in data["gens"]
