"""Recompute the published quantities for the Sturmfels ideal and compare exactly."""

from __future__ import annotations

import os
from functools import lru_cache
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Iterable

from . import golden
from .arithmetic import frobenius_power, power
from .betti import QQ, BettiTable, Field, betti_numbers
from .core import is_squarefree
from .decomposition import minimal_primes, symbolic_power
from .newton import integral_closure_of_power
from .splitting import SplittingMap, apply_ideal, construct, regularity_via_transfer

DIRECT_ARITY_LIMIT = 12


@dataclass(frozen=True)
class Check:
    label: str
    source: str
    expected: Any
    got: Any
    path: str = "direct"

    @property
    def passed(self) -> bool:
        return self.expected == self.got

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.label}: expected {_show(self.expected)}, got {_show(self.got)}  [{self.path}; {self.source}]"

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "passed": self.passed,
            "expected": _jsonable(self.expected),
            "got": _jsonable(self.got),
            "path": self.path,
            "source": self.source,
        }


def _show(v) -> str:
    if isinstance(v, BettiTable):
        return "table " + "; ".join(f"{r}: {v.row(r)}" for r in v.rows)
    if hasattr(v, "gens"):
        return f"{len(v.gens)} generators"
    return str(v)


def _jsonable(v):
    if isinstance(v, BettiTable):
        return v.to_json()
    if hasattr(v, "gens"):
        return [list(g) for g in v.gens]
    if isinstance(v, tuple):
        return list(v)
    return v


@lru_cache(maxsize=None)
def _base_ideals():
    J = golden.J
    return {
        "frobenius": frobenius_power(J, 2),
        "power": power(J, 2),
        "closure": integral_closure_of_power(J, 2),
        "symbolic": symbolic_power(J, 2),
    }


@lru_cache(maxsize=None)
def _base_betti(construction: str, p: int):
    return betti_numbers(_base_ideals()[construction], Field(p))


def repro_sturmfels(field: Field = QQ) -> list[Check]:
    J = golden.J
    checks = [
        Check("J minimal generators", "8-generated squarefree ideal", 8, len(J)),
        Check("J squarefree", "squarefree ideal", True, is_squarefree(J)),
        Check(
            "minimal primes of J",
            "six listed minimal primes",
            golden.MINIMAL_PRIMES,
            [p.variables for p in minimal_primes(J)],
        ),
    ]
    ideals = _base_ideals()
    by_label = dict(zip(("frobenius square", "square", "closure of square", "symbolic square"), golden.CONSTRUCTION_ORDER))
    for rec in golden.STURMFELS:
        I = ideals[by_label[rec.label]]
        B = betti_numbers(I, field)
        if rec.generators is not None:
            checks.append(Check(f"{rec.label} generators", rec.source, rec.generators, I))
        if rec.betti_rows is not None:
            checks.append(Check(f"{rec.label} Betti table", rec.source, BettiTable.from_rows(rec.betti_rows), B.table()))
        if rec.regularity is not None:
            checks.append(Check(f"reg({rec.label})", rec.source, rec.regularity, B.regularity()))
        if rec.projdim is not None:
            checks.append(Check(f"projdim({rec.label})", rec.source, rec.projdim, B.projdim()))
    return checks


def repro_theorem1(e: int, mode: str = "auto", field: Field = QQ) -> list[Check]:
    """Regularity formulas for the uniform splitting into ``e`` parts.

    ``mode`` is ``direct``, ``transfer`` or ``auto`` (direct while the target
    ring has at most 12 variables).
    """
    if e < 1:
        raise ValueError("e must be a positive integer")
    sigma = SplittingMap.uniform(golden.RING, e)
    direct = mode == "direct" or (mode == "auto" and sigma.target.arity <= DIRECT_ARITY_LIMIT)
    Ie = apply_ideal(sigma, golden.J)
    checks = [Check(f"I_{e} squarefree", "split ideal is squarefree", True, is_squarefree(Ie), "direct")]
    base = _base_ideals()
    for c in golden.CONSTRUCTION_ORDER:
        slope, shift = golden.SPLIT_FORMULAS[c]
        expected = slope * e + shift
        source = f"reg = {slope}e{shift:+d} at e = {e}"
        if direct:
            K = construct(Ie, 2, c)
            checks.append(Check(f"{c} of I_{e} equals split of {c} of J", "splitting commutes", apply_ideal(sigma, base[c]), K))
            checks.append(Check(f"reg({c} of I_{e})", source, expected, betti_numbers(K, field).regularity()))
        else:
            B = _base_betti(c, field.characteristic)
            checks.append(Check(f"reg({c} of I_{e})", source, expected, regularity_via_transfer(sigma, B), "transfer"))
    return checks


def _table_row(args) -> list[Check]:
    row, direct, p = args
    field = Field(p)
    sigma = SplittingMap.from_spec(golden.RING, row.split())
    checks = []
    for c, expected in zip(golden.CONSTRUCTION_ORDER, row.regularities):
        B = _base_betti(c, p)
        via = regularity_via_transfer(sigma, B)
        checks.append(Check(f"row {row.number} ({row.label}) reg {c}", row.source, expected, via, "transfer"))
        if direct and sigma.target.arity <= DIRECT_ARITY_LIMIT:
            K = construct(apply_ideal(sigma, golden.J), 2, c)
            got = betti_numbers(K, field).regularity()
            checks.append(Check(f"row {row.number} ({row.label}) reg {c}", row.source, via, got, "direct vs transfer"))
    return checks


def select_rows(spec: str | Iterable[int] = "all") -> list[golden.TableRow]:
    if spec == "all":
        return list(golden.SPLIT_TABLE)
    if isinstance(spec, str):
        wanted = set()
        for part in spec.split(","):
            part = part.strip()
            if "-" in part:
                lo, hi = part.split("-")
                wanted.update(range(int(lo), int(hi) + 1))
            elif part:
                wanted.add(int(part))
    else:
        wanted = set(spec)
    unknown = wanted - {r.number for r in golden.SPLIT_TABLE}
    if unknown:
        raise ValueError(f"no such table rows: {sorted(unknown)}")
    return [r for r in golden.SPLIT_TABLE if r.number in wanted]


def repro_table(rows: str | Iterable[int] = "all", direct: bool = False, field: Field = QQ, jobs: int | None = None) -> list[Check]:
    selected = select_rows(rows)
    jobs = jobs or int(os.environ.get("MONIDEAL_THREADS", "1") or 1)
    args = [(r, direct, field.characteristic) for r in selected]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            parts = list(ex.map(_table_row, args))
    else:
        parts = [_table_row(a) for a in args]
    return [c for part in parts for c in part]


def report(checks: list[Check]) -> str:
    failed = sum(not c.passed for c in checks)
    lines = [c.line() for c in checks]
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines)
