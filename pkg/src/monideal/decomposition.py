"""Minimal primes of squarefree monomial ideals and their symbolic powers."""

from __future__ import annotations

from dataclasses import dataclass

from .arithmetic import intersection, localize_contract, power, prime_ideal
from .core import MonomialIdeal, PolyRing, is_squarefree


class NotSquarefreeError(ValueError):
    pass


@dataclass(frozen=True)
class MonomialPrime:
    """The prime ideal generated by a nonempty set of variables (stored as indices)."""

    ring: PolyRing
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(set(self.indices)))
        if not idx:
            raise ValueError("a monomial prime needs at least one variable")
        if idx[0] < 0 or idx[-1] >= self.ring.arity:
            raise ValueError(f"variable index out of range: {idx}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def of(cls, ring: PolyRing, names) -> MonomialPrime:
        return cls(ring, tuple(ring.index(n) for n in names))

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(self.ring.variables[i] for i in self.indices)

    def ideal(self) -> MonomialIdeal:
        return prime_ideal(self.ring, self.indices)

    def __str__(self) -> str:
        return "(" + ", ".join(self.variables) + ")"


def minimal_vertex_covers(edges: list[frozenset[int]]) -> list[frozenset[int]]:
    """All inclusion-minimal vertex sets meeting every edge.

    Branches on the vertices of the first uncovered edge and discards
    non-minimal covers at the end.
    """
    if any(not e for e in edges):
        raise ValueError("empty edge cannot be covered")
    found: set[frozenset[int]] = set()

    def branch(cover: frozenset[int]) -> None:
        for e in edges:
            if not (e & cover):
                for v in sorted(e):
                    branch(cover | {v})
                return
        found.add(cover)

    branch(frozenset())
    # the branching never revisits a cover but can produce supersets of others
    return sorted(
        (c for c in found if not any(d < c for d in found)),
        key=lambda c: (len(c), sorted(c)),
    )


def minimal_primes(I: MonomialIdeal) -> list[MonomialPrime]:
    if not is_squarefree(I):
        raise NotSquarefreeError("minimal_primes expects a squarefree monomial ideal")
    if I.is_zero or I.is_unit:
        raise ValueError("minimal_primes needs a proper nonzero ideal")
    edges = [frozenset(i for i, e in enumerate(g) if e) for g in I.gens]
    return [MonomialPrime(I.ring, tuple(sorted(c))) for c in minimal_vertex_covers(edges)]


def primary_component_of_power(I: MonomialIdeal, s: int, P: MonomialPrime) -> MonomialIdeal:
    if P not in minimal_primes(I):
        raise ValueError(f"{P} is not a minimal prime of the ideal")
    return localize_contract(power(I, s), P.indices)


def symbolic_power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """Intersection of the primary components of ``I**s`` at the minimal primes of ``I``."""
    if s < 1:
        raise ValueError(f"symbolic power needs s >= 1, got {s}")
    primes = minimal_primes(I)
    Is = power(I, s)
    result = None
    for P in primes:  # already sorted smallest first
        comp = localize_contract(Is, P.indices)
        result = comp if result is None else intersection(result, comp)
    return result


def symbolic_power_via_primes(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """Second formula for squarefree ``I``: intersection of ``P**s`` over minimal primes."""
    result = None
    for P in minimal_primes(I):
        comp = power(P.ideal(), s)
        result = comp if result is None else intersection(result, comp)
    return result
