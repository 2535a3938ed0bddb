"""Graded Betti numbers of ``R/I`` for monomial ideals ``I``.

Stable ideals go through the Eliahou-Kervaire formula. Arbitrary monomial
ideals go through the upper Koszul simplicial complexes of the lcm lattice
(Hochster-type formula), which is slower but makes no stability assumption.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable

from .ideals import MonomialIdeal, contains, is_stable, max_stats
from .linalg import rank
from .monomials import AmbientMismatch, Monomial, max_index

__all__ = [
    "BettiTable",
    "NotStableError",
    "ek_graded_betti",
    "ek_total_betti",
    "koszul_graded_betti",
    "graded_betti",
    "dominates",
    "render_diagram",
    "render_triples",
    "hilbert_numerator",
]


class NotStableError(ValueError):
    pass


@dataclass
class BettiTable:
    """``beta_{i,j}(R/I)`` for ``1 <= i <= n``; ``beta_{0,0} = 1`` is implicit.

    ``entries`` only holds nonzero values, keyed by ``(i, j)`` with ``j`` the
    internal degree.
    """

    n: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), v in self.entries.items():
            if v < 0:
                raise ValueError("Betti numbers are nonnegative")
            if v and not 1 <= i <= self.n:
                raise ValueError(f"homological index {i} outside 1..{self.n}")
            if v:
                clean[(i, j)] = v
        self.entries = clean

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def totals(self) -> list:
        """``[beta_1, ..., beta_n]``."""
        out = [0] * self.n
        for (i, _), v in self.entries.items():
            out[i - 1] += v
        return out

    def diagram_rows(self) -> dict:
        """``{j: [beta_{1,1+j}, ..., beta_{n,n+j}]}`` for the occurring offsets."""
        rows = {}
        for (i, deg), v in self.entries.items():
            rows.setdefault(deg - i, [0] * self.n)[i - 1] = v
        return dict(sorted(rows.items()))

    @classmethod
    def from_rows(cls, n: int, rows: dict) -> "BettiTable":
        """Inverse of :meth:`diagram_rows`."""
        entries = {}
        for j, row in rows.items():
            for i, v in enumerate(row, start=1):
                if v:
                    entries[(i, i + j)] = v
        return cls(n, entries)


def _require_stable(ideal: MonomialIdeal) -> None:
    if not is_stable(ideal):
        raise NotStableError("Eliahou-Kervaire requires stable ideal")


def ek_graded_betti(ideal: MonomialIdeal) -> BettiTable:
    """``beta_{i,i+j}(R/I) = sum_{deg u = j+1} C(max(u) - 1, i - 1)``."""
    _require_stable(ideal)
    entries = {}
    for u in ideal.gens:
        top = max_index(u)
        if top is None:
            # unit ideal: R/I = 0
            return BettiTable(ideal.n, {})
        for i in range(1, top + 1):
            key = (i, u.degree + i - 1)
            entries[key] = entries.get(key, 0) + comb(top - 1, i - 1)
    return BettiTable(ideal.n, entries)


def ek_total_betti(ideal: MonomialIdeal) -> list:
    """``beta_i(R/I) = sum_{s >= i} m_s(I) C(s - 1, i - 1)``, ``i = 1..n``."""
    _require_stable(ideal)
    m, _ = max_stats(ideal)
    n = ideal.n
    return [sum(m[s - 1] * comb(s - 1, i - 1) for s in range(i, n + 1))
            for i in range(1, n + 1)]


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def lcm_lattice(gens: Iterable[Monomial]) -> set:
    """Exponent vectors of all lcms of nonempty generator subsets."""
    gens = [g.exponents for g in gens]
    lattice = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for a in frontier:
            for g in gens:
                c = _lcm(a, g)
                if c not in lattice:
                    new.add(c)
        lattice |= new
        frontier = new
    return lattice


def _reduced_homology_dims(faces: list, top_dim: int) -> list:
    """``dim H~_k`` for ``k = -1..top_dim`` of a complex given by all its faces."""
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    index = {d: {f: r for r, f in enumerate(fs)} for d, fs in by_dim.items()}

    def boundary_rank(d):
        # boundary map C_d -> C_{d-1}
        if d not in by_dim or d - 1 not in by_dim:
            return 0
        rows = []
        target = index[d - 1]
        for f in by_dim[d]:
            row = {}
            for pos in range(len(f)):
                face = f[:pos] + f[pos + 1:]
                row[target[face]] = (-1) ** pos
            rows.append(row)
        return rank(rows)

    dims = []
    for d in range(-1, top_dim + 1):
        c = len(by_dim.get(d, ()))
        dims.append(c - boundary_rank(d) - boundary_rank(d + 1))
    return dims


def koszul_graded_betti(ideal: MonomialIdeal) -> BettiTable:
    """Graded Betti numbers of ``R/I`` for any monomial ideal.

    ``beta_{i,b}(I) = dim H~_{i-1}(K^b(I))`` where ``K^b(I)`` is the complex
    of squarefree ``F`` with ``x^{b - F}`` in ``I``; only ``b`` in the lcm
    lattice can contribute. Then ``beta_{i+1,j}(R/I) = beta_{i,j}(I)``.
    """
    n = ideal.n
    if any(g.degree == 0 for g in ideal.gens):
        return BettiTable(n, {})
    entries = {}
    for b in lcm_lattice(ideal.gens):
        support = [v for v in range(n) if b[v] > 0]
        faces = []
        for size in range(len(support) + 1):
            for f in combinations(support, size):
                e = list(b)
                for v in f:
                    e[v] -= 1
                if contains(ideal, Monomial(tuple(e))):
                    faces.append(f)
        dims = _reduced_homology_dims(faces, len(support) - 1)
        deg = sum(b)
        for k, dim in enumerate(dims, start=-1):
            if dim:
                # H~_k gives beta_{k+1}(I) = beta_{k+2}(R/I)
                key = (k + 2, deg)
                entries[key] = entries.get(key, 0) + dim
    return BettiTable(n, entries)


def graded_betti(ideal: MonomialIdeal) -> BettiTable:
    """Eliahou-Kervaire when the ideal is stable, Koszul complexes otherwise."""
    if is_stable(ideal):
        return ek_graded_betti(ideal)
    return koszul_graded_betti(ideal)


def dominates(a: BettiTable, b: BettiTable) -> bool:
    """``a >= b`` entrywise."""
    if a.n != b.n:
        raise AmbientMismatch(f"tables over {a.n} and {b.n} variables")
    return all(a[key] >= v for key, v in b.entries.items())


def render_diagram(table: BettiTable) -> str:
    """Betti diagram: row ``j`` lists ``beta_{i,i+j}`` for ``i = 1..n``, zeros as ``-``.

    Rows start at ``j = 1`` (``j = 0`` only when it has a nonzero entry) and
    run through the last nonzero offset.
    """
    rows = table.diagram_rows()
    lo = 0 if 0 in rows else 1
    hi = max(rows, default=0)
    js = list(range(lo, hi + 1)) if rows else []
    width = max([len(str(v)) for v in table.entries.values()]
                + [len(str(table.n))] + [1])
    jw = max([len(str(j)) for j in js] + [1])
    cols = range(1, table.n + 1)
    lines = [f"{'':>{jw}} | " + " ".join(f"{i:>{width}}" for i in cols)]
    for j in js:
        row = rows.get(j, [0] * table.n)
        cells = " ".join(f"{(v if v else '-'):>{width}}" for v in row)
        lines.append(f"{j:>{jw}} | {cells}")
    return "\n".join(line.rstrip() for line in lines) + "\n"


def render_triples(table: BettiTable) -> str:
    """Machine-readable form: one ``i j beta`` line per nonzero entry."""
    return "".join(f"{i} {j} {v}\n" for (i, j), v in sorted(table.entries.items()))


def hilbert_numerator(table: BettiTable, include_zero: bool = True) -> dict:
    """``sum_{i,j} (-1)^i beta_{i,j} t^j`` as ``{j: coefficient}``."""
    poly = {0: 1} if include_zero else {}
    for (i, j), v in table.entries.items():
        poly[j] = poly.get(j, 0) + (-1) ** i * v
    return {j: c for j, c in poly.items() if c}
