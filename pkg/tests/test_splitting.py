import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monideal.arithmetic import frobenius_power, power
from monideal.betti import betti_numbers, lcm_lattice
from monideal.core import MonomialIdeal, PolyRing, RingMismatchError, exp_lcm, is_squarefree, max_gen_degree
from monideal.golden import CLOSURE_OF_SQUARE, SYMBOLIC_SQUARE
from monideal.splitting import (
    SplittingMap,
    apply,
    apply_ideal,
    commutes_with,
    construct,
    regularity_via_transfer,
    transfer_betti,
)

from conftest import ideals
from oracles import random_ideal


def test_fresh_variable_names(R6):
    sigma = SplittingMap.from_spec(R6, {"x1": 2, "x3": 3})
    assert sigma.target.variables == (
        "x1_1", "x1_2", "x2_1", "x3_1", "x3_2", "x3_3", "x4_1", "x5_1", "x6_1",
    )
    assert sigma.counts == (2, 1, 3, 1, 1, 1)


def test_invalid_maps(R6):
    with pytest.raises(ValueError):
        SplittingMap.from_counts(R6, [1, 1, 0, 1, 1, 1])
    with pytest.raises(ValueError):
        SplittingMap.from_spec(R6, {"y": 2})
    with pytest.raises(ValueError):
        SplittingMap(R6, PolyRing.standard(6), ((0,), (0,), (1,), (2,), (3,), (4,)))


def test_apply_examples(R6, J):
    phi2 = SplittingMap.uniform(R6, 2)
    img = apply(phi2, R6.monomial("x1*x4*x5"))
    assert str(img) == "x1_1*x1_2*x4_1*x4_2*x5_1*x5_2"
    ident = SplittingMap.uniform(R6, 1)
    assert apply(ident, R6.monomial("x2^2*x3")).exponents == (0, 2, 1, 0, 0, 0)
    sigma = SplittingMap.from_counts(R6, [3, 1, 2, 1, 1, 2])
    m = R6.monomial("x1^2*x3*x6")
    assert apply(sigma, m).degree == 3 * 2 + 2 * 1 + 2 * 1
    with pytest.raises(RingMismatchError):
        apply(sigma, PolyRing.standard(2).one())


def test_apply_ideal_examples(R6, J):
    phi2 = SplittingMap.uniform(R6, 2)
    I2 = apply_ideal(phi2, J)
    assert is_squarefree(I2)
    assert len(I2) == 8 and {sum(g) for g in I2.gens} == {6}
    ident = SplittingMap.uniform(R6, 1)
    assert apply_ideal(ident, J).gens == J.gens


def test_transfer_examples(R6, J):
    B = betti_numbers(power(J, 2))
    assert transfer_betti(SplittingMap.uniform(R6, 1), B).entries == B.entries
    for e in (1, 2, 3):
        phi = SplittingMap.uniform(R6, e)
        T = transfer_betti(phi, B)
        assert T.graded() == {(i, e * j): c for (i, j), c in B.graded().items()}
        assert max_gen_degree(apply_ideal(phi, SYMBOLIC_SQUARE)) == e * max_gen_degree(SYMBOLIC_SQUARE)
    x1 = SplittingMap.from_spec(R6, {"x1": 2})
    assert regularity_via_transfer(x1, B) == 9
    x12 = SplittingMap.from_spec(R6, {"x1": 2, "x2": 2})
    assert regularity_via_transfer(x12, B) == 11
    x6 = SplittingMap.from_spec(R6, {"x6": 3})
    assert regularity_via_transfer(x6, betti_numbers(SYMBOLIC_SQUARE)) == 10


def test_d_scales_for_every_construction(R6, J):
    for e in (2, 3):
        phi = SplittingMap.uniform(R6, e)
        for c in ("power", "frobenius", "symbolic"):
            assert max_gen_degree(construct(apply_ideal(phi, J), 2, c)) == e * max_gen_degree(construct(J, 2, c))


@pytest.mark.parametrize("construction", ["power", "frobenius", "closure", "symbolic"])
def test_commutes_with_x1_split(R6, J, construction):
    assert commutes_with(SplittingMap.from_spec(R6, {"x1": 2}), J, 2, construction)


def test_symbolic_commutes_with_phi2(R6, J):
    assert commutes_with(SplittingMap.uniform(R6, 2), J, 2, "symbolic")


def test_unknown_construction(R6, J):
    with pytest.raises(ValueError):
        construct(J, 2, "saturation")


def test_lcm_lattice_equivariance():
    rng = random.Random(9)
    for _ in range(30):
        I = random_ideal(rng, rng.randint(1, 4), rng.randint(1, 5), 2)
        sigma = SplittingMap.from_counts(I.ring, [rng.randint(1, 3) for _ in range(I.ring.arity)])
        for g in I.gens:
            for h in I.gens:
                assert sigma.push(exp_lcm(g, h)) == exp_lcm(sigma.push(g), sigma.push(h))
        pushed = {sigma.push(m.exponents) for m in lcm_lattice(I)}
        assert pushed == {m.exponents for m in lcm_lattice(apply_ideal(sigma, I))}


@given(ideals(max_vars=4, max_gens=5, max_exp=2), st.data())
@settings(max_examples=40, deadline=None)
def test_direct_matches_transfer(I, data):
    counts = data.draw(st.lists(st.integers(1, 3), min_size=I.ring.arity, max_size=I.ring.arity))
    if sum(counts) > 12:
        counts = [1] * I.ring.arity
    sigma = SplittingMap.from_counts(I.ring, counts)
    split = apply_ideal(sigma, I)
    assert len(split) == len(I)
    assert is_squarefree(split) == is_squarefree(I)
    assert betti_numbers(split) == transfer_betti(sigma, betti_numbers(I))


def test_direct_matches_transfer_on_squares_of_J(R6, J):
    sigma = SplittingMap.from_spec(R6, {"x1": 3, "x4": 2})
    for I in (power(J, 2), frobenius_power(J, 2), CLOSURE_OF_SQUARE, SYMBOLIC_SQUARE):
        assert betti_numbers(apply_ideal(sigma, I)) == transfer_betti(sigma, betti_numbers(I))


@pytest.mark.parametrize("e", [1, 2, 3])
def test_splitting_formulas_via_transfer(R6, J, e):
    phi = SplittingMap.uniform(R6, e)
    regs = {c: regularity_via_transfer(phi, betti_numbers(construct(J, 2, c))) for c in ("frobenius", "power", "closure", "symbolic")}
    assert regs == {"frobenius": 10 * e - 2, "power": 12 * e - 5, "closure": 11 * e - 5, "symbolic": 9 * e - 3}
