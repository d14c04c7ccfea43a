"""Pure-Python homology kernels (reference implementation and fallback)."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence


def faces_by_dimension(facets: Sequence[int]) -> list[list[int]]:
    """Faces of the complex generated by ``facets`` (vertex bitmasks).

    Index ``k + 1`` holds the sorted masks of the ``k``-dimensional faces, so
    index 0 is ``[0]`` (the empty face).  A void complex gives ``[]``.
    """
    seen: set[int] = set()
    for f in facets:
        sub = f
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    if not seen:
        return []
    top = max(bin(f).count("1") for f in seen)
    levels: list[list[int]] = [[] for _ in range(top + 1)]
    for f in seen:
        levels[bin(f).count("1")].append(f)
    for lv in levels:
        lv.sort()
    return levels


def _boundary_rows(faces: list[int], lower_index: dict[int, int]) -> list[dict[int, int]]:
    rows = []
    for f in faces:
        row = {}
        sign = 1
        bits = f
        while bits:
            low = bits & -bits
            row[lower_index[f ^ low]] = sign
            sign = -sign
            bits ^= low
        rows.append(row)
    return rows


def _rank_q(rows: Iterable[dict[int, int]]) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                pivots[c] = row
                break
            a, b = p[c], row[c]
            # row <- a*row - b*p, then strip the content
            new = {k: a * v for k, v in row.items()}
            for k, v in p.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                new = {k: v // g for k, v in new.items()}
            row = new
    return len(pivots)


def _rank_mod(rows: Iterable[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {k: v % p for k, v in row.items() if v % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                break
            b = row[c]
            for k, v in piv.items():
                w = (row.get(k, 0) - b * v) % p
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
    return len(pivots)


def boundary_rank(faces: list[int], lower: list[int], characteristic: int = 0) -> int:
    """Rank of the boundary map from ``faces`` (one dimension) onto ``lower``."""
    if not faces or not lower:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    rows = _boundary_rows(faces, index)
    return _rank_q(rows) if characteristic == 0 else _rank_mod(rows, characteristic)


def reduced_homology(facets: Sequence[int], characteristic: int = 0) -> list[int]:
    """Reduced Betti numbers ``[h_{-1}, h_0, ..., h_top]`` of the generated complex."""
    levels = faces_by_dimension(facets)
    if not levels:
        return []
    ranks = [0] * (len(levels) + 1)
    for k in range(1, len(levels)):
        ranks[k] = boundary_rank(levels[k], levels[k - 1], characteristic)
    return [len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(len(levels))]
