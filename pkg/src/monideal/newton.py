"""Newton-polyhedron membership and integral closures of powers.

Membership of an exponent vector ``a`` in ``conv(gens) + R^n_{>=0}`` is
decided by the exact rational LP

    maximize sum(lam)  subject to  sum_i lam_i * v_i <= a,  lam >= 0

which starts feasible at ``lam = 0`` (``a >= 0``).  ``a`` is in the
polyhedron iff the optimum is at least 1.  When it is not, the optimal dual
``y`` satisfies ``y . v_i >= 1`` for every generator and ``y . a < 1``: a valid
inequality separating ``a``, which :func:`integral_closure_of_power` reuses to
discard other lattice points without solving another LP.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .arithmetic import power
from .core import Exponents, Monomial, MonomialIdeal, _check_ring, minimal_exponents

# box sizes above this are refused; split ideals go through the transfer path
MAX_BOX_POINTS = 20_000_000


@dataclass(frozen=True)
class RationalCertificate:
    """Convex weights on generators whose combination lies below the query point."""

    weights: tuple[tuple[int, Fraction], ...]

    def combination(self, gens: Sequence[Exponents]) -> tuple[Fraction, ...]:
        n = len(gens[0]) if gens else 0
        out = [Fraction(0)] * n
        for i, w in self.weights:
            for j, e in enumerate(gens[i]):
                out[j] += w * e
        return tuple(out)

    def is_valid(self, a: Sequence[int], gens: Sequence[Exponents]) -> bool:
        if any(w < 0 for _, w in self.weights):
            return False
        if sum(w for _, w in self.weights) != 1:
            return False
        return all(c <= x for c, x in zip(self.combination(gens), a))

    def to_json(self) -> list[dict]:
        return [{"generator": i, "weight": str(w)} for i, w in self.weights]


@dataclass(frozen=True)
class Cut:
    """Valid inequality ``coeffs . b >= bound`` for the Newton polyhedron (integers)."""

    coeffs: tuple[int, ...]
    bound: int

    def separates(self, a: Sequence[int]) -> bool:
        return sum(c * x for c, x in zip(self.coeffs, a)) < self.bound


def _simplex_membership(a: Sequence[int], gens: Sequence[Exponents]):
    """Return ``(True, certificate)`` or ``(False, cut)``."""
    m, n = len(gens), len(a)
    for i, g in enumerate(gens):
        if not any(g):
            return True, RationalCertificate(((i, Fraction(1)),))
    # tableau rows: constraint j over m structural + n slack columns, then rhs
    T = [
        [Fraction(gens[i][j]) for i in range(m)] + [Fraction(int(k == j)) for k in range(n)] + [Fraction(a[j])]
        for j in range(n)
    ]
    basis = [m + j for j in range(n)]
    cost = [Fraction(1)] * m + [Fraction(0)] * n
    ncols = m + n

    while True:
        # reduced costs r_k = c_k - c_B B^-1 A_k; Bland's rule on the entering column
        cb = [cost[b] for b in basis]
        z = sum(cb[r] * T[r][-1] for r in range(n))
        if z >= 1:
            lam = [Fraction(0)] * m
            for r, b in enumerate(basis):
                if b < m:
                    lam[b] = T[r][-1]
            total = sum(lam)
            weights = tuple((i, w / total) for i, w in enumerate(lam) if w)
            return True, RationalCertificate(weights)
        entering = -1
        for k in range(ncols):
            rk = cost[k] - sum(cb[r] * T[r][k] for r in range(n) if T[r][k])
            if rk > 0:
                entering = k
                break
        if entering < 0:
            y = [sum(cb[r] * T[r][m + j] for r in range(n)) for j in range(n)]
            return False, _scale_cut(y)
        best = None
        for r in range(n):
            coef = T[r][entering]
            if coef > 0:
                ratio = T[r][-1] / coef
                key = (ratio, basis[r])
                if best is None or key < best[0]:
                    best = (key, r)
        if best is None:
            raise AssertionError("unbounded membership LP with nonzero generators")
        pr = best[1]
        pivot = T[pr][entering]
        T[pr] = [x / pivot for x in T[pr]]
        for r in range(n):
            if r != pr and T[r][entering]:
                f = T[r][entering]
                row = T[pr]
                T[r] = [x - f * p for x, p in zip(T[r], row)]
        basis[pr] = entering


def _scale_cut(y: Sequence[Fraction]) -> Cut:
    den = 1
    for v in y:
        den = den * v.denominator // math.gcd(den, v.denominator)
    coeffs = [int(v * den) for v in y]
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
    g = math.gcd(g, den) or 1
    return Cut(tuple(c // g for c in coeffs), den // g)


def newton_membership(a: Sequence[int], gens: Sequence[Exponents]):
    """Exact membership test on raw exponent vectors.

    Returns ``(True, RationalCertificate)`` or ``(False, Cut)``.
    """
    if not gens:
        raise ValueError("the zero ideal has an empty Newton polyhedron")
    return _simplex_membership(a, gens)


def in_newton_polyhedron(a: Monomial, I: MonomialIdeal) -> tuple[bool, RationalCertificate | None]:
    _check_ring(a.ring, I.ring)
    if I.is_zero:
        raise ValueError("the zero ideal has an empty Newton polyhedron")
    ok, info = newton_membership(a.exponents, I.gens)
    return (True, info) if ok else (False, None)


def _box_points(bounds: Sequence[int]) -> np.ndarray:
    grids = np.indices([b + 1 for b in bounds], dtype=np.int64)
    return grids.reshape(len(bounds), -1).T


def newton_minimal_points(gens: Sequence[Exponents]) -> tuple[Exponents, ...]:
    """Minimal lattice points of the Newton polyhedron of ``gens``.

    Every minimal lattice point lies in the box ``[0, M_j]`` where ``M_j`` is
    the largest ``j``-th exponent of a generator.  The box is filtered by the
    accumulated separating cuts; minimal survivors are then confirmed by LP,
    and any that fail contribute a new cut.  At the fixpoint the minimal
    survivors are exactly the minimal lattice points.
    """
    if not gens:
        return ()
    n = len(gens[0])
    if n == 0 or any(not any(g) for g in gens):
        return ((0,) * n,)
    bounds = [max(g[j] for g in gens) for j in range(n)]
    size = math.prod(b + 1 for b in bounds)
    if size > MAX_BOX_POINTS:
        raise MemoryError(f"closure box has {size} points; use the splitting transfer path")
    pts = _box_points(bounds)
    strides = [math.prod(b + 1 for b in bounds[j + 1:]) for j in range(n)]

    alive = np.ones(len(pts), dtype=bool)
    confirmed: set[int] = set()
    while True:
        lower = np.zeros(len(pts), dtype=bool)
        for j in range(n):
            has = pts[:, j] > 0
            idx = np.nonzero(has)[0]
            lower[idx] |= alive[idx - strides[j]]
        candidates = np.nonzero(alive & ~lower)[0]
        new_cuts = []
        for k in candidates:
            if k in confirmed:
                continue
            a = pts[k]
            if any(c.separates(a) for c in new_cuts):
                continue
            ok, info = _simplex_membership([int(x) for x in a], gens)
            if ok:
                confirmed.add(int(k))
            else:
                new_cuts.append(info)
        if not new_cuts:
            return minimal_exponents(tuple(int(x) for x in pts[k]) for k in candidates)
        for cut in new_cuts:
            alive &= pts @ np.asarray(cut.coeffs, dtype=np.int64) >= cut.bound


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    if I.is_zero:
        raise ValueError("integral closure of the zero ideal is not defined here")
    return MonomialIdeal(I.ring, newton_minimal_points(I.gens))


def integral_closure_of_power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    if s < 1:
        raise ValueError(f"closure of a power needs s >= 1, got {s}")
    if I.is_zero:
        raise ValueError("integral closure of the zero ideal is not defined here")
    return integral_closure(power(I, s))
