"""Multigraded Betti numbers, Betti tables, regularity and projective dimension.

For a monomial ideal ``I`` and a multidegree ``a``,

    beta_{i,a}(I) = dim H~_{i-1}(K^a(I); k),
    K^a(I) = { F subset of supp(a) : x^(a - F) in I }

(the upper Koszul simplicial complex).  A face ``F`` lies in ``K^a(I)`` iff
some generator ``g`` dividing ``x^a`` has ``g_j < a_j`` for every ``j`` in
``F``, so the complex is generated by those slack sets.  Nonzero Betti
numbers only occur at multidegrees in the lcm lattice.
"""

from __future__ import annotations

import math
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import _kernels
from .core import Exponents, Monomial, MonomialIdeal, PolyRing, _check_ring, exp_divides, exp_lcm

DEFAULT_PRIME = 32003


@dataclass(frozen=True)
class Field:
    """Coefficient field: ``characteristic == 0`` means the rationals."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or p == 1 or (p and not _is_prime(p)):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")
        if p >= 1 << 31:
            raise ValueError("prime fields are limited to p < 2**31")

    @classmethod
    def parse(cls, text: str) -> Field:
        t = text.strip()
        if t in ("Q", "QQ"):
            return cls(0)
        if t.startswith("Fp"):
            rest = t[2:].lstrip(":")
            return cls(int(rest) if rest else DEFAULT_PRIME)
        raise ValueError(f"unknown field {text!r}; use 'Q' or 'Fp:<prime>'")

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}"


QQ = Field(0)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices ``0..n-1`` given by generating faces (bitmasks).

    ``facets == ()`` is the void complex; ``facets == (0,)`` is ``{∅}``.
    """

    n_vertices: int
    facets: tuple[int, ...]

    def __post_init__(self):
        masks = sorted(set(self.facets))
        maximal = tuple(f for f in masks if not any(f != g and f & g == f for g in masks))
        object.__setattr__(self, "facets", maximal)

    @classmethod
    def from_faces(cls, n_vertices: int, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
        return cls(n_vertices, tuple(sum(1 << v for v in set(f)) for f in faces))

    @property
    def is_void(self) -> bool:
        return not self.facets

    def faces(self) -> list[frozenset[int]]:
        out = []
        for level in _kernels.faces_by_dimension(self.facets):
            for m in level:
                out.append(frozenset(v for v in range(max(self.n_vertices, m.bit_length())) if m >> v & 1))
        return out

    def f_vector(self) -> list[int]:
        """Face counts by dimension starting at -1."""
        return [len(level) for level in _kernels.faces_by_dimension(self.facets)]

    def is_cone(self) -> bool:
        if not self.facets:
            return False
        common = self.facets[0]
        for f in self.facets[1:]:
            common &= f
        return common != 0


def reduced_homology_ranks(C: SimplicialComplex, field: Field = QQ, check: bool | None = None) -> list[int]:
    """``[rank H~_{-1}, rank H~_0, ...]``; empty for the void complex."""
    if C.is_cone():
        return [0] * (1 + max(bin(f).count("1") for f in C.facets))
    ranks = _kernels.reduced_homology(C.facets, field.characteristic)
    if check if check is not None else _DEBUG:
        f = C.f_vector()
        chi_faces = sum((-1) ** k * n for k, n in enumerate(f))
        chi_hom = sum((-1) ** k * h for k, h in enumerate(ranks))
        if chi_faces != chi_hom or any(h < 0 for h in ranks):
            raise AssertionError(f"Euler characteristic mismatch: {f} vs {ranks}")
    return ranks


def reduced_homology_rank(C: SimplicialComplex, i: int, field: Field = QQ) -> int:
    if i < -1:
        raise ValueError("reduced homology starts in degree -1")
    ranks = reduced_homology_ranks(C, field)
    return ranks[i + 1] if i + 1 < len(ranks) else 0


_DEBUG = os.environ.get("MONIDEAL_DEBUG", "") not in ("", "0")


# -- Betti data ---------------------------------------------------------------


@dataclass(frozen=True)
class BettiData:
    """Nonzero multigraded Betti numbers ``(i, a) -> beta_{i,a}``."""

    ring: PolyRing
    entries: dict[tuple[int, Exponents], int] = field(hash=False)

    def __iter__(self) -> Iterator[tuple[int, Exponents, int]]:
        for (i, a), c in sorted(self.entries.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1])):
            yield i, a, c

    def __eq__(self, other) -> bool:
        return isinstance(other, BettiData) and self.ring == other.ring and self.entries == other.entries

    def graded(self) -> dict[tuple[int, int], int]:
        """``(i, total degree) -> beta_{i,j}``."""
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (i, a), c in self.entries.items():
            out[i, sum(a)] += c
        return dict(out)

    def table(self) -> BettiTable:
        return BettiTable({(j - i, i): c for (i, j), c in self.graded().items()})

    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("regularity of the zero ideal is undefined")
        return max(sum(a) - i for i, a in self.entries)

    def projdim(self) -> int:
        if not self.entries:
            raise ValueError("projective dimension of the zero ideal is undefined")
        return max(i for i, _ in self.entries)

    def to_json(self) -> dict:
        return {
            "vars": list(self.ring.variables),
            "entries": [{"i": i, "multidegree": list(a), "degree": sum(a), "count": c} for i, a, c in self],
        }


@dataclass(frozen=True)
class BettiTable:
    """Coarse table ``(row = degree - i, column = i) -> count``."""

    entries: dict[tuple[int, int], int] = field(hash=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, BettiTable) and self.entries == other.entries

    def row(self, r: int) -> tuple[int, ...]:
        width = self.width
        return tuple(self.entries.get((r, i), 0) for i in range(width))

    @property
    def rows(self) -> list[int]:
        return sorted({r for r, _ in self.entries})

    @property
    def width(self) -> int:
        return 1 + max((i for _, i in self.entries), default=-1)

    @classmethod
    def from_rows(cls, rows: dict[int, Iterable[int]]) -> BettiTable:
        return cls({(r, i): c for r, vals in rows.items() for i, c in enumerate(vals) if c})

    def render(self) -> str:
        width = self.width
        cells = {k: str(v) for k, v in self.entries.items()}
        colw = max([len(c) for c in cells.values()] + [len(str(width - 1)), 1])
        labels = {r: f"{r}:" for r in self.rows}
        lw = max([len(s) for s in labels.values()] + [0])
        lines = [" " * lw + "".join(f" {i:>{colw}}" for i in range(width))]
        for r in self.rows:
            vals = "".join(f" {cells.get((r, i), '·'):>{colw}}" for i in range(width))
            lines.append(f"{labels[r]:<{lw}}{vals}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "entries": [
                {"i": i, "degree": r + i, "count": c} for (r, i), c in sorted(self.entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))
            ]
        }


# -- computations -------------------------------------------------------------


def lcm_lattice(I: MonomialIdeal) -> set[Monomial]:
    return {Monomial(I.ring, a) for a in lcm_lattice_exponents(I.gens)}


def lcm_lattice_exponents(gens: Iterable[Exponents]) -> set[Exponents]:
    """Join closure of ``gens`` (every join is an iterated join with a generator)."""
    gens = list(gens)
    if not gens:
        raise ValueError("the zero ideal has no lcm lattice")
    lattice = set(gens)
    frontier = list(lattice)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = exp_lcm(a, g)
                if b not in lattice:
                    lattice.add(b)
                    new.append(b)
        frontier = new
    return lattice


def _koszul_facets(gens: Iterable[Exponents], a: Exponents) -> tuple[int, ...]:
    masks = set()
    for g in gens:
        if exp_divides(g, a):
            masks.add(sum(1 << j for j, (x, y) in enumerate(zip(g, a)) if x < y))
    return tuple(masks)


def upper_koszul(I: MonomialIdeal, a: Monomial) -> SimplicialComplex:
    """Vertices are the ring's variable indices; only ``supp(a)`` can appear."""
    _check_ring(I.ring, a.ring)
    return SimplicialComplex(I.ring.arity, _koszul_facets(I.gens, a.exponents))


def _betti_at(args) -> list[tuple[int, Exponents, int]]:
    gens, lattice, p, nmax = args
    out = []
    for a in lattice:
        C = SimplicialComplex(len(a), _koszul_facets(gens, a))
        for k, h in enumerate(reduced_homology_ranks(C, Field(p))):
            if h and k < nmax:
                out.append((k, a, h))
    return out


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("MONIDEAL_THREADS", "1")))
    except ValueError:
        return 1


def betti_numbers(I: MonomialIdeal, field: Field = QQ, jobs: int | None = None) -> BettiData:
    """All nonzero ``beta_{i,a}(I)``, ``i`` from 0 to ``arity - 1``.

    ``jobs > 1`` spreads the lattice over worker processes; the result does
    not depend on it.  Defaults to ``$MONIDEAL_THREADS`` (or 1).
    """
    if I.is_zero:
        return BettiData(I.ring, {})
    lattice = sorted(lcm_lattice_exponents(I.gens), key=lambda a: (sum(a), a))
    nmax = max(I.ring.arity, 1)
    jobs = jobs or _default_jobs()
    entries: dict[tuple[int, Exponents], int] = {}
    if jobs > 1 and len(lattice) > 64:
        chunks = [lattice[k::jobs] for k in range(jobs)]
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_betti_at, [(I.gens, c, field.characteristic, nmax) for c in chunks]))
    else:
        results = [_betti_at((I.gens, lattice, field.characteristic, nmax))]
    for part in results:
        for i, a, c in part:
            entries[i, a] = c
    return BettiData(I.ring, entries)


def betti_table(I: MonomialIdeal, field: Field = QQ) -> BettiTable:
    return betti_numbers(I, field).table()


def regularity(I: MonomialIdeal, field: Field = QQ) -> int:
    if I.is_zero:
        raise ValueError("regularity of the zero ideal is undefined")
    return betti_numbers(I, field).regularity()


def projdim(I: MonomialIdeal, field: Field = QQ) -> int:
    if I.is_zero:
        raise ValueError("projective dimension of the zero ideal is undefined")
    return betti_numbers(I, field).projdim()
