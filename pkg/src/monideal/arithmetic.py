"""Products, powers, Frobenius powers, intersections and contractions."""

from __future__ import annotations

from typing import Iterable

from .core import (
    MonomialIdeal,
    PolyRing,
    _check_ring,
    exp_lcm,
    minimal_exponents,
)


def product(I: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    _check_ring(I.ring, K.ring)
    gens = (tuple(a + b for a, b in zip(g, h)) for g in I.gens for h in K.gens)
    return MonomialIdeal(I.ring, minimal_exponents(gens))


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """``I**s`` by repeated squaring; ``s = 0`` gives the unit ideal."""
    if s < 0:
        raise ValueError(f"power exponent must be >= 0, got {s}")
    result = MonomialIdeal.unit(I.ring)
    base = I
    while s:
        if s & 1:
            result = product(result, base)
        s >>= 1
        if s:
            base = product(base, base)
    return result


def frobenius_power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """Ideal generated by the ``s``-th powers of the monomials of ``I``."""
    if s < 0:
        raise ValueError(f"Frobenius exponent must be >= 0, got {s}")
    if s == 0:
        return MonomialIdeal.unit(I.ring)
    # raising a minimal generating set keeps it minimal
    return MonomialIdeal(I.ring, minimal_exponents(tuple(s * e for e in g) for g in I.gens))


def intersection(I: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    _check_ring(I.ring, K.ring)
    return MonomialIdeal(I.ring, minimal_exponents(exp_lcm(g, h) for g in I.gens for h in K.gens))


def intersect_all(ideals: Iterable[MonomialIdeal], ring: PolyRing | None = None) -> MonomialIdeal:
    ideals = list(ideals)
    if not ideals:
        if ring is None:
            raise ValueError("empty intersection needs a ring")
        return MonomialIdeal.unit(ring)
    result = ideals[0]
    for K in ideals[1:]:
        result = intersection(result, K)
    return result


def localize_contract(I: MonomialIdeal, P: Iterable[str | int]) -> MonomialIdeal:
    """Set every variable outside ``P`` to 1 and read the result back in the ring.

    For a minimal prime ``P`` of a power of ``I`` this is the ``P``-primary
    component of that power.
    """
    keep = set()
    for v in P:
        keep.add(v if isinstance(v, int) else I.ring.index(v))
    if any(not 0 <= i < I.ring.arity for i in keep):
        raise ValueError(f"variable index out of range in {sorted(keep)}")
    gens = (tuple(e if i in keep else 0 for i, e in enumerate(g)) for g in I.gens)
    return MonomialIdeal(I.ring, minimal_exponents(gens))


def prime_ideal(ring: PolyRing, variables: Iterable[str | int]) -> MonomialIdeal:
    gens = []
    for v in variables:
        i = v if isinstance(v, int) else ring.index(v)
        e = [0] * ring.arity
        e[i] = 1
        gens.append(tuple(e))
    return MonomialIdeal(ring, minimal_exponents(gens))
