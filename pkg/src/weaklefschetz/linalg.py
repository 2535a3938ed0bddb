"""Exact row reduction over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class EchelonBasis:
    """Incrementally maintained reduced basis of a row space.

    Rows are sparse dicts ``column -> Fraction``. Each stored row has a
    pivot column with coefficient 1 that is zero in every other stored row.
    """

    def __init__(self):
        self.rows = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict) -> dict:
        vec = {c: Fraction(v) for c, v in row.items() if v}
        for pivot, prow in self.rows.items():
            coef = vec.get(pivot)
            if coef:
                for c, v in prow.items():
                    nv = vec.get(c, 0) - coef * v
                    if nv:
                        vec[c] = nv
                    else:
                        vec.pop(c, None)
        return vec

    def add(self, row: dict) -> bool:
        """Insert ``row``; return whether it enlarged the span."""
        vec = self.reduce(row)
        if not vec:
            return False
        pivot = min(vec)
        inv = 1 / vec[pivot]
        vec = {c: v * inv for c, v in vec.items()}
        for prow in self.rows.values():
            coef = prow.get(pivot)
            if coef:
                for c, v in vec.items():
                    nv = prow.get(c, 0) - coef * v
                    if nv:
                        prow[c] = nv
                    else:
                        prow.pop(c, None)
        self.rows[pivot] = vec
        return True

    def canonical(self) -> tuple:
        """Reduced row echelon form as a hashable value (same span, same value)."""
        return tuple(sorted((p, tuple(sorted(r.items()))) for p, r in self.rows.items()))


def rank(rows: Iterable) -> int:
    """Rank of a matrix given as dense sequences or sparse dicts."""
    basis = EchelonBasis()
    for row in rows:
        if not isinstance(row, dict):
            row = {c: v for c, v in enumerate(row) if v}
        basis.add(row)
    return len(basis)


def row_space(rows: Iterable) -> tuple:
    basis = EchelonBasis()
    for row in rows:
        if not isinstance(row, dict):
            row = {c: v for c, v in enumerate(row) if v}
        basis.add(row)
    return basis.canonical()
