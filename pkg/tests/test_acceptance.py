"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` (the verdict lines are
printed even without ``-s``).
"""

import itertools
import random
import time

import pytest

from monideal import golden, repro
from monideal.arithmetic import frobenius_power, power
from monideal.betti import BettiTable, betti_numbers
from monideal.decomposition import symbolic_power
from monideal.newton import integral_closure_of_power, newton_membership
from monideal.splitting import SplittingMap, commutes_with

from oracles import integral_by_powers, random_ideal, taylor_betti


@pytest.fixture
def verdict(capsys):
    def emit(name: str, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        assert ok, detail

    return emit


@pytest.fixture(scope="module")
def constructions():
    t0 = time.perf_counter()
    J = golden.J
    out = {
        "frobenius": frobenius_power(J, 2),
        "power": power(J, 2),
        "closure": integral_closure_of_power(J, 2),
        "symbolic": symbolic_power(J, 2),
    }
    return out, time.perf_counter() - t0


def test_ac1_betti_tables(constructions, verdict):
    ideals, build = constructions
    t0 = time.perf_counter()
    expected = {
        "frobenius": {6: (8, 0, 0), 7: (0, 11, 0), 8: (0, 0, 4)},
        "power": {6: (36, 84, 75, 32, 6, 0), 7: (0, 1, 4, 6, 4, 1)},
        "closure": {6: (37, 90, 89, 48, 15, 2)},
        "symbolic": {4: (1, 0, 0, 0), 6: (20, 40, 24, 4)},
    }
    bad = [c for c, rows in expected.items() if betti_numbers(ideals[c]).table() != BettiTable.from_rows(rows)]
    elapsed = time.perf_counter() - t0 + build
    ok = not bad and elapsed < 10
    verdict("AC1 Betti tables", ok, f"4 tables, mismatches {bad or 'none'}, {elapsed:.2f} s including constructions")


def test_ac2_regularities(constructions, verdict):
    ideals, _ = constructions
    t0 = time.perf_counter()
    B = {c: betti_numbers(I) for c, I in ideals.items()}
    got = tuple(B[c].regularity() for c in golden.CONSTRUCTION_ORDER) + (B["symbolic"].projdim(),)
    elapsed = time.perf_counter() - t0
    ok = got == (8, 7, 6, 6, 3) and elapsed < 10
    verdict("AC2 regularity and projdim", ok, f"reg (frob, pow, closure, symb) + projdim = {got}, {elapsed:.2f} s")


def test_ac3_generator_lists(verdict):
    t0 = time.perf_counter()
    symb = symbolic_power(golden.J, 2)
    clos = integral_closure_of_power(golden.J, 2)
    elapsed = time.perf_counter() - t0
    ok = (
        set(symb.gens) == set(golden.SYMBOLIC_SQUARE.gens)
        and set(clos.gens) == set(golden.CLOSURE_OF_SQUARE.gens)
        and (len(symb), len(clos)) == (21, 37)
        and elapsed < 30
    )
    verdict("AC3 generator lists", ok, f"symbolic {len(symb)} gens, closure {len(clos)} gens, {elapsed:.2f} s")


def test_ac4_uniform_split_formulas(verdict):
    repro._base_ideals.cache_clear()
    repro._base_betti.cache_clear()
    t0 = time.perf_counter()
    got, failed = {}, []
    for e, mode in ((1, "direct"), (2, "direct"), (3, "transfer")):
        checks = repro.repro_theorem1(e, mode)
        failed += [c.label for c in checks if not c.passed]
        got[e] = tuple(c.got for c in checks if c.label.startswith("reg("))
    want = {e: (10 * e - 2, 12 * e - 5, 11 * e - 5, 9 * e - 3) for e in (1, 2, 3)}
    elapsed = time.perf_counter() - t0
    ok = got == want and not failed and elapsed < 300
    verdict("AC4 uniform splitting regularities", ok, f"e=1,2 direct, e=3 transfer: {got}, {elapsed:.1f} s")


def test_ac5_split_table(verdict):
    repro._base_ideals.cache_clear()
    repro._base_betti.cache_clear()
    t0 = time.perf_counter()
    transfer = repro.repro_table("all")
    t_transfer = time.perf_counter() - t0
    rows = {c.label for c in transfer}
    samples = {
        "row 3 (x1, x2 / 2)": (10, 11, 9, 8),
        "row 7 (x2, x3, x4, x5, x6 / 3)": (28, 27, 26, 22),
    }
    sample_ok = all(
        tuple(c.got for c in transfer if c.label.startswith(prefix)) == regs for prefix, regs in samples.items()
    )
    direct = [c for c in repro.repro_table("all", direct=True) if c.path != "transfer"]
    small_rows = sum(r.target_arity <= repro.DIRECT_ARITY_LIMIT for r in golden.SPLIT_TABLE)
    ok = (
        len(transfer) == 80
        and all(c.passed for c in transfer)
        and sample_ok
        and t_transfer < 60
        and len(direct) == 4 * small_rows
        and all(c.passed for c in direct)
    )
    verdict(
        "AC5 split regularity table",
        ok,
        f"{sum(c.passed for c in transfer)}/80 via transfer in {t_transfer:.2f} s over {len(rows)} cells; "
        f"direct agrees on {sum(c.passed for c in direct)}/{len(direct)} cells ({small_rows} rows of arity <= 12)",
    )


def test_ac6_splitting_commutes(verdict):
    rng = random.Random(20240611)
    cases, failures = 0, []
    while cases < 12:
        n = rng.randint(2, 5)
        I = random_ideal(rng, n, rng.randint(1, 6), 1, squarefree=True)
        counts = [1] * n
        for _ in range(rng.randint(1, 10 - n)):
            counts[rng.randrange(n)] += 1
        sigma = SplittingMap.from_counts(I.ring, counts)
        assert sigma.target.arity <= 10
        for c in ("closure", "symbolic"):
            if not commutes_with(sigma, I, 2, c):
                failures.append((c, I.gens, counts))
        cases += 1
    verdict("AC6 splitting commutes with closure and symbolic power", not failures,
            f"{cases} random (ideal, splitting) pairs, s=2, failures {failures or 'none'}")


def test_ac7_taylor_oracle(verdict):
    rng = random.Random(7)
    mismatches = 0
    trials = 60
    for _ in range(trials):
        I = random_ideal(rng, rng.randint(1, 5), rng.randint(1, 6), 2)
        if betti_numbers(I).entries != taylor_betti(list(I.gens)):
            mismatches += 1
    verdict("AC7 Koszul vs Taylor oracle", mismatches == 0, f"{trials} random ideals, {mismatches} mismatches")


def test_ac8_newton_oracle(verdict):
    rng = random.Random(8)
    probes = disagreements = 0
    for _ in range(25):
        n = rng.randint(1, 3)
        I = random_ideal(rng, n, rng.randint(1, 4), 3)
        for s in (1, 2):
            gens = power(I, s).gens
            top = 3 * s + 1
            for a in itertools.product(range(top + 1), repeat=n):
                probes += 1
                if newton_membership(a, gens)[0] != integral_by_powers(a, I, s):
                    disagreements += 1
    verdict("AC8 Newton membership vs powers oracle", disagreements == 0,
            f"{probes} probe points, {disagreements} disagreements")


def test_ac9_chain_containment(constructions, verdict):
    ideals, _ = constructions

    def chain(frob, pw, clos, symb):
        return frob <= pw <= clos <= symb

    ok_j = chain(*(ideals[c] for c in golden.CONSTRUCTION_ORDER))
    rng = random.Random(9)
    bad = 0
    for _ in range(30):
        I = random_ideal(rng, rng.randint(2, 5), rng.randint(1, 6), 1, squarefree=True)
        for s in (2, 3):
            if not chain(frobenius_power(I, s), power(I, s), integral_closure_of_power(I, s), symbolic_power(I, s)):
                bad += 1
    verdict("AC9 frobenius <= power <= closure <= symbolic", ok_j and bad == 0,
            f"J at s=2 {'holds' if ok_j else 'fails'}, 60 random squarefree instances, {bad} violations")
