"""Splitting homomorphisms: each variable goes to a product of fresh variables.

A splitting sends ``x_i`` to ``v_{i,1} ... v_{i,t_i}`` with all target
variables distinct.  It is flat, so Betti numbers carry over with the
multidegree pushed forward; :func:`transfer_betti` uses that to obtain
Betti data of split ideals without any homology in the larger ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .arithmetic import frobenius_power, power
from .betti import BettiData
from .core import Exponents, Monomial, MonomialIdeal, PolyRing, _check_ring, minimal_exponents
from .decomposition import symbolic_power
from .newton import integral_closure_of_power

CONSTRUCTIONS = ("power", "frobenius", "closure", "symbolic")


@dataclass(frozen=True)
class SplittingMap:
    source: PolyRing
    target: PolyRing
    assignment: tuple[tuple[int, ...], ...]  # target indices for each source variable

    def __post_init__(self):
        if len(self.assignment) != self.source.arity:
            raise ValueError("need one tuple of target variables per source variable")
        flat = [j for part in self.assignment for j in part]
        if any(not part for part in self.assignment):
            raise ValueError("every source variable needs at least one target variable")
        if sorted(flat) != list(range(self.target.arity)):
            raise ValueError("target tuples must be disjoint and exhaust the target ring")

    @classmethod
    def from_counts(cls, source: PolyRing, counts: Sequence[int]) -> SplittingMap:
        """Split ``x`` into ``x_1 ... x_t``, in source order then part index."""
        if len(counts) != source.arity:
            raise ValueError("need one count per source variable")
        names, assignment = [], []
        for name, t in zip(source.variables, counts):
            if t < 1:
                raise ValueError(f"split count for {name} must be >= 1, got {t}")
            assignment.append(tuple(range(len(names), len(names) + t)))
            names.extend(f"{name}_{k}" for k in range(1, t + 1))
        return cls(source, PolyRing(names), tuple(assignment))

    @classmethod
    def from_spec(cls, source: PolyRing, split: Mapping[str, int], default: int = 1) -> SplittingMap:
        """Build from ``{"x1": 2, ...}`` with unlisted variables split ``default`` ways."""
        unknown = set(split) - set(source.variables)
        if unknown:
            raise ValueError(f"unknown variables in splitting: {sorted(unknown)}")
        return cls.from_counts(source, [split.get(v, default) for v in source.variables])

    @classmethod
    def uniform(cls, source: PolyRing, e: int) -> SplittingMap:
        return cls.from_counts(source, [e] * source.arity)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.assignment)

    def push(self, a: Sequence[int]) -> Exponents:
        out = [0] * self.target.arity
        for e, part in zip(a, self.assignment):
            for j in part:
                out[j] = e
        return tuple(out)

    def to_json(self) -> dict:
        return {"split": {v: t for v, t in zip(self.source.variables, self.counts) if t != 1}, "default": 1}


def apply(sigma: SplittingMap, m: Monomial) -> Monomial:
    _check_ring(sigma.source, m.ring)
    return Monomial(sigma.target, sigma.push(m.exponents))


def apply_ideal(sigma: SplittingMap, I: MonomialIdeal) -> MonomialIdeal:
    _check_ring(sigma.source, I.ring)
    # images of minimal generators stay minimal; re-sorting gives canonical order
    return MonomialIdeal(sigma.target, minimal_exponents(sigma.push(g) for g in I.gens))


def transfer_betti(sigma: SplittingMap, B: BettiData) -> BettiData:
    _check_ring(sigma.source, B.ring)
    return BettiData(sigma.target, {(i, sigma.push(a)): c for (i, a), c in B.entries.items()})


def split_degree(sigma: SplittingMap, a: Sequence[int]) -> int:
    return sum(t * e for t, e in zip(sigma.counts, a))


def regularity_via_transfer(sigma: SplittingMap, B: BettiData) -> int:
    if not B.entries:
        raise ValueError("regularity of the zero ideal is undefined")
    return max(split_degree(sigma, a) - i for i, a in B.entries)


def construct(I: MonomialIdeal, s: int, construction: str) -> MonomialIdeal:
    if construction == "power":
        return power(I, s)
    if construction == "frobenius":
        return frobenius_power(I, s)
    if construction == "closure":
        return integral_closure_of_power(I, s)
    if construction == "symbolic":
        return symbolic_power(I, s)
    raise ValueError(f"unknown construction {construction!r}; expected one of {CONSTRUCTIONS}")


def commutes_with(sigma: SplittingMap, I: MonomialIdeal, s: int, construction: str) -> bool:
    """Materialize construct-then-split and split-then-construct and compare."""
    before = apply_ideal(sigma, construct(I, s, construction))
    after = construct(apply_ideal(sigma, I), s, construction)
    return before == after
