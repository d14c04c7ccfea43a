"""Polynomial rings, monomials and minimally generated monomial ideals.

Monomials are exponent vectors over a fixed, ordered list of variable names.
A :class:`MonomialIdeal` always stores its unique minimal generating set in
canonical order (total degree, then lexicographic on exponent vectors).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Exponents = tuple[int, ...]


class RingMismatchError(ValueError):
    """Raised when two objects living in different rings are combined."""


class MonomialSyntaxError(ValueError):
    """Raised for malformed monomial or ideal text."""

    def __init__(self, message: str, text: str = "", line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        self.text = text
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass(frozen=True)
class PolyRing:
    variables: tuple[str, ...]

    def __init__(self, variables: Iterable[str]):
        names = tuple(variables)
        if any(not isinstance(v, str) or not v for v in names):
            raise ValueError("variable names must be nonempty strings")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "variables", names)

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> PolyRing:
        """The ring with variables ``x1, ..., xn``."""
        return cls(f"{prefix}{i}" for i in range(1, n + 1))

    @property
    def arity(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def one(self) -> Monomial:
        return Monomial(self, (0,) * self.arity)

    def var(self, name: str) -> Monomial:
        e = [0] * self.arity
        e[self.index(name)] = 1
        return Monomial(self, tuple(e))

    def monomial(self, text: str) -> Monomial:
        return parse_monomial(self, text)

    def ideal(self, gens: Iterable[Monomial | str | Sequence[int]]) -> MonomialIdeal:
        exps = []
        for g in gens:
            if isinstance(g, str):
                exps.append(parse_monomial(self, g).exponents)
            elif isinstance(g, Monomial):
                _check_ring(self, g.ring)
                exps.append(g.exponents)
            else:
                exps.append(_as_exponents(self, g))
        return MonomialIdeal.from_exponents(self, exps)

    def __repr__(self) -> str:
        return f"PolyRing({list(self.variables)!r})"


def _as_exponents(ring: PolyRing, vec: Sequence[int]) -> Exponents:
    e = tuple(int(v) for v in vec)
    if len(e) != ring.arity:
        raise ValueError(f"exponent vector {e} has length {len(e)}, ring arity is {ring.arity}")
    if any(v < 0 for v in e):
        raise ValueError(f"negative exponent in {e}")
    return e


def _check_ring(a: PolyRing, b: PolyRing) -> None:
    if a != b:
        raise RingMismatchError(f"{a!r} != {b!r}")


@dataclass(frozen=True)
class Monomial:
    ring: PolyRing
    exponents: Exponents

    def __post_init__(self):
        object.__setattr__(self, "exponents", _as_exponents(self.ring, self.exponents))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    def __mul__(self, other: Monomial) -> Monomial:
        _check_ring(self.ring, other.ring)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, s: int) -> Monomial:
        return Monomial(self.ring, tuple(a * s for a in self.exponents))

    def __str__(self) -> str:
        return format_monomial(self.ring, self.exponents)


# -- exponent-vector kernels ------------------------------------------------


def exp_divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def exp_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _canonical_key(e: Exponents):
    return (sum(e), e)


def minimal_exponents(exps: Iterable[Exponents]) -> tuple[Exponents, ...]:
    """Minimal elements under componentwise order, in canonical order."""
    kept: list[Exponents] = []
    for e in sorted(set(exps), key=_canonical_key):
        # earlier entries have degree <= deg(e); equal degree + divides means equal
        if not any(exp_divides(k, e) for k in kept):
            kept.append(e)
    return tuple(kept)


# -- ideals -----------------------------------------------------------------


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators."""

    ring: PolyRing
    gens: tuple[Exponents, ...]

    @classmethod
    def from_exponents(cls, ring: PolyRing, exps: Iterable[Sequence[int]]) -> MonomialIdeal:
        return cls(ring, minimal_exponents(_as_exponents(ring, e) for e in exps))

    @classmethod
    def zero(cls, ring: PolyRing) -> MonomialIdeal:
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: PolyRing) -> MonomialIdeal:
        return cls(ring, ((0,) * ring.arity,))

    @property
    def generators(self) -> list[Monomial]:
        return [Monomial(self.ring, g) for g in self.gens]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def __le__(self, other: MonomialIdeal) -> bool:
        """Ideal containment."""
        _check_ring(self.ring, other.ring)
        return all(any(exp_divides(h, g) for h in other.gens) for g in self.gens)

    def __str__(self) -> str:
        return "(" + ", ".join(format_monomial(self.ring, g) for g in self.gens) + ")"


def divides(m: Monomial, n: Monomial) -> bool:
    _check_ring(m.ring, n.ring)
    return exp_divides(m.exponents, n.exponents)


def lcm(m: Monomial, n: Monomial) -> Monomial:
    _check_ring(m.ring, n.ring)
    return Monomial(m.ring, exp_lcm(m.exponents, n.exponents))


def minimalize(gens: Iterable[Monomial], ring: PolyRing | None = None) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``gens``.

    ``ring`` is only needed when ``gens`` is empty.
    """
    gens = list(gens)
    if not gens:
        if ring is None:
            raise ValueError("ring is required to build the zero ideal")
        return MonomialIdeal.zero(ring)
    ring = ring or gens[0].ring
    for g in gens:
        _check_ring(ring, g.ring)
    return MonomialIdeal(ring, minimal_exponents(g.exponents for g in gens))


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    _check_ring(I.ring, m.ring)
    return any(exp_divides(g, m.exponents) for g in I.gens)


def is_squarefree(I: MonomialIdeal) -> bool:
    return all(e <= 1 for g in I.gens for e in g)


def max_gen_degree(I: MonomialIdeal) -> int:
    if I.is_zero:
        raise ValueError("d(I) is undefined for the zero ideal")
    return max(sum(g) for g in I.gens)


# -- text and JSON formats --------------------------------------------------


def format_monomial(ring: PolyRing, e: Exponents) -> str:
    parts = []
    for name, k in zip(ring.variables, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|1)\s*(?:\^\s*(\d+))?\s*")


def parse_monomial(ring: PolyRing, text: str, *, line: int = 1, column: int = 1) -> Monomial:
    """Parse ``x1*x4*x5``, ``x1^2*x3`` or ``1``."""
    e = [0] * ring.arity
    pos = 0
    if not text.strip():
        raise MonomialSyntaxError("empty monomial", text, line, column)
    while True:
        m = _FACTOR.match(text, pos)
        if not m or m.end() == m.start():
            found = repr(text[pos]) if pos < len(text) else "end of monomial"
            raise MonomialSyntaxError(f"unexpected {found}", text, line, column + pos)
        name, power = m.group(1), m.group(2)
        if name != "1":
            try:
                i = ring.index(name)
            except KeyError:
                raise MonomialSyntaxError(
                    f"unknown variable {name!r}", text, line, column + m.start(1)
                ) from None
            e[i] += int(power) if power is not None else 1
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "*":
            raise MonomialSyntaxError(f"expected '*', got {text[pos]!r}", text, line, column + pos)
        pos += 1
    return Monomial(ring, tuple(e))


def parse_ideal_text(text: str, ring: PolyRing | None = None) -> MonomialIdeal:
    """Parse an inline ideal such as ``x1*x2, x2*x3`` or ``(x1^2, x2)``.

    Without an explicit ring, variables are collected in order of first
    appearance unless all look like ``x<k>``, in which case ``x1..xn`` is used.
    Generators may be separated by commas or newlines; ``#`` starts a comment.
    """
    items: list[tuple[str, int, int]] = []
    for lineno, raw in enumerate(text.splitlines() or [""], start=1):
        body = raw.split("#", 1)[0]
        col = 0
        for chunk in body.split(","):
            stripped = chunk.strip().strip("()").strip()
            if stripped:
                offset = chunk.find(stripped)
                items.append((stripped, lineno, col + offset + 1))
            col += len(chunk) + 1
    if ring is None:
        ring = _infer_ring(items)
    exps = [parse_monomial(ring, t, line=ln, column=c).exponents for t, ln, c in items]
    return MonomialIdeal.from_exponents(ring, exps)


def _infer_ring(items: list[tuple[str, int, int]]) -> PolyRing:
    names: list[str] = []
    for t, ln, c in items:
        for m in re.finditer(r"[A-Za-z_][A-Za-z0-9_]*", t):
            if m.group(0) not in names:
                names.append(m.group(0))
    numbered = [re.fullmatch(r"x(\d+)", n) for n in names]
    if names and all(numbered):
        top = max(int(m.group(1)) for m in numbered)
        if top >= 1 and all(int(m.group(1)) >= 1 for m in numbered):
            return PolyRing.standard(top)
    return PolyRing(names)


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {"vars": list(I.ring.variables), "gens": [list(g) for g in I.gens]}


def ideal_from_json(data: dict | str) -> MonomialIdeal:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        ring = PolyRing(data["vars"])
        gens = data["gens"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"ideal JSON needs 'vars' and 'gens': {exc}") from None
    return MonomialIdeal.from_exponents(ring, gens)
