"""Distraction matrices and the ideals of points they produce.

All arithmetic is over :class:`fractions.Fraction`, so rank, radicality and
vanishing checks are exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterable, Optional, Sequence

from .ideals import (
    MonomialIdeal,
    artinian_hilbert_function,
    contains,
    is_artinian,
    is_strongly_stable,
    standard_monomials,
)
from .linalg import EchelonBasis, rank, row_space
from .monomials import Monomial, format_monomial, monomials_of_degree, revlex_key

__all__ = [
    "LinearForm",
    "DistractionMatrix",
    "Polynomial",
    "RationalPoint",
    "is_valid_distraction",
    "make_standard_distraction",
    "distract_monomial",
    "distract_ideal",
    "poly_ideal_hilbert",
    "irreducible_components",
    "is_radical_for",
    "PointsReport",
    "distraction_points",
    "format_polynomial",
    "format_linear_form",
    "parse_linear_form",
    "parse_matrix",
    "format_matrix",
]


@dataclass(frozen=True)
class LinearForm:
    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients",
                           tuple(Fraction(c) for c in self.coefficients))

    @classmethod
    def var(cls, i: int, n: int) -> "LinearForm":
        return cls(tuple(1 if j == i else 0 for j in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __rmul__(self, c) -> "LinearForm":
        return LinearForm(tuple(Fraction(c) * a for a in self.coefficients))

    def __call__(self, point: Sequence) -> Fraction:
        return sum((c * Fraction(p) for c, p in zip(self.coefficients, point)), Fraction(0))

    def __str__(self) -> str:
        return format_linear_form(self)


def format_linear_form(form: LinearForm, names: Optional[Sequence[str]] = None) -> str:
    terms = []
    for i, c in enumerate(form.coefficients, start=1):
        if not c:
            continue
        name = names[i - 1] if names is not None else f"x{i}"
        mag = abs(c)
        body = name if mag == 1 else f"{mag}*{name}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


_TERM = re.compile(r"([+-]?)(?:(\d+(?:/\d+)?)\*)?x(\d+)")


def parse_linear_form(text: str, n: int) -> LinearForm:
    """Parse ``x1 - 2*x4`` or ``1/2*x2 + x3``; constants are rejected."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty linear form")
    coeffs = [Fraction(0)] * n
    pos = 0
    while pos < len(s):
        match = _TERM.match(s, pos)
        if match is None or (pos > 0 and not match.group(1)):
            raise ValueError(f"bad linear form {text!r} at {s[pos:]!r}")
        sign = -1 if match.group(1) == "-" else 1
        c = Fraction(match.group(2)) if match.group(2) else Fraction(1)
        i = int(match.group(3))
        if not 1 <= i <= n:
            raise ValueError(f"x{i} is not one of x1..x{n}")
        coeffs[i - 1] += sign * c
        pos = match.end()
    return LinearForm(tuple(coeffs))


@dataclass(frozen=True)
class DistractionMatrix:
    """Rows of linear forms; column ``j > N`` repeats column ``N``.

    ``n_vars`` is the number of variables the forms live in. A full
    distraction has one row per variable; fewer rows are allowed for the
    partial matrices used in radicality checks.
    """

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or not rows[0]:
            raise ValueError("a distraction matrix needs at least one row and column")
        width = len(rows[0])
        nv = rows[0][0].n
        for r in rows:
            if len(r) != width:
                raise ValueError("rows of different lengths")
            for form in r:
                if form.n != nv:
                    raise ValueError("forms in different numbers of variables")
                if form.is_zero():
                    raise ValueError("the zero form cannot appear in a distraction matrix")
        object.__setattr__(self, "rows", rows)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def N(self) -> int:
        return len(self.rows[0])

    @property
    def n_vars(self) -> int:
        return self.rows[0][0].n

    def entry(self, i: int, j: int) -> LinearForm:
        """``L_{ij}`` with 1-based indices."""
        return self.rows[i - 1][min(j, self.N) - 1]

    def first_rows(self, r: int) -> "DistractionMatrix":
        return DistractionMatrix(self.rows[:r])


def make_standard_distraction(n: int, N: int) -> DistractionMatrix:
    """``L_{ij} = x_i - (j - 1) x_n`` for ``i < n`` and ``L_{nj} = x_n``."""
    if n < 2 or N < 1:
        raise ValueError("need n >= 2 and N >= 1")
    last = LinearForm.var(n, n)
    rows = []
    for i in range(1, n):
        xi = LinearForm.var(i, n)
        rows.append(tuple(xi - (j - 1) * last for j in range(1, N + 1)))
    rows.append(tuple(last for _ in range(N)))
    return DistractionMatrix(tuple(rows))


def is_valid_distraction(L: DistractionMatrix, budget: int = 8 ** 5) -> bool:
    """Every choice of one column per row spans all linear forms.

    The check is exhaustive over ``N ** n`` selections; ``budget`` caps it.
    """
    if L.n_rows != L.n_vars:
        return False
    count = L.N ** L.n_rows
    if count > budget:
        raise ValueError(f"{count} selections exceed the budget {budget}; use a smaller N")
    for cols in product(range(1, L.N + 1), repeat=L.n_rows):
        forms = [L.entry(i, j).coefficients for i, j in enumerate(cols, start=1)]
        if rank(forms) < L.n_vars:
            return False
    return True


class Polynomial:
    """Sparse polynomial: ``{Monomial: Fraction}`` without zero coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[dict] = None):
        self.n = n
        self.terms = {}
        for m, c in (terms or {}).items():
            if m.n != n:
                raise ValueError("monomial in the wrong ring")
            c = Fraction(c)
            if c:
                self.terms[m] = self.terms.get(m, 0) + c
        self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def from_monomial(cls, m: Monomial) -> "Polynomial":
        return cls(m.n, {m: 1})

    @classmethod
    def from_linear_form(cls, form: LinearForm) -> "Polynomial":
        n = form.n
        return cls(n, {Monomial.var(i, n): c
                       for i, c in enumerate(form.coefficients, start=1) if c})

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls(n, {Monomial.one(n): 1})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.n, out)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.n, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    @property
    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def leading_term(self) -> tuple:
        """``(monomial, coefficient)`` largest in degree rev-lex order."""
        m = max(self.terms, key=revlex_key)
        return m, self.terms[m]

    def shift(self, m: Monomial) -> "Polynomial":
        """Multiply by the monomial ``m``."""
        return Polynomial(self.n, {t * m: c for t, c in self.terms.items()})

    def __call__(self, point: Sequence) -> Fraction:
        pt = [Fraction(p) for p in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for p, e in zip(pt, m.exponents):
                if e:
                    v *= p ** e
            total += v
        return total

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        return format_polynomial(self)


def format_polynomial(p: Polynomial, names: Optional[Sequence[str]] = None) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for m in sorted(p.terms, key=revlex_key, reverse=True):
        c = p.terms[m]
        mono = format_monomial(m, names)
        mag = abs(c)
        if mono == "1":
            body = str(mag)
        else:
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


@dataclass(frozen=True)
class RationalPoint:
    """Projective point, scaled so that its last nonzero coordinate is 1."""

    coordinates: tuple

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coordinates)
        nonzero = [c for c in coords if c]
        if not nonzero:
            raise ValueError("all coordinates are zero")
        scale = nonzero[-1]
        object.__setattr__(self, "coordinates", tuple(c / scale for c in coords))

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coordinates)


def distract_monomial(L: DistractionMatrix, m: Monomial) -> Polynomial:
    """``D_L(x^a) = prod_i prod_{j <= a_i} L_{ij}``, fully expanded."""
    if m.n != L.n_rows:
        raise ValueError(f"monomial in {m.n} variables, matrix has {L.n_rows} rows")
    out = Polynomial.one(L.n_vars)
    for i, a in enumerate(m.exponents, start=1):
        for j in range(1, a + 1):
            out = out * Polynomial.from_linear_form(L.entry(i, j))
    return out


def distract_ideal(L: DistractionMatrix, ideal: MonomialIdeal) -> list:
    """Distractions of the minimal generators, in generator order."""
    return [distract_monomial(L, g) for g in ideal.gens]


def poly_ideal_hilbert(gens: Iterable[Polynomial], d_max: int, n: Optional[int] = None) -> tuple:
    """Hilbert function ``h_0..h_{d_max}`` of ``R/(gens)`` for homogeneous ``gens``.

    ``I_d`` is spanned by ``x_i * I_{d-1}`` and the generators of degree ``d``;
    its dimension is an exact rank.
    """
    gens = list(gens)
    if n is None:
        if not gens:
            raise ValueError("pass n for an empty generator list")
        n = gens[0].n
    by_degree = {}
    for g in gens:
        if g.n != n:
            raise ValueError("generators in different rings")
        if g.is_zero():
            continue
        if not g.is_homogeneous():
            raise ValueError(f"non-homogeneous generator {g}")
        by_degree.setdefault(g.degree, []).append(g)
    variables = [Monomial.var(i, n) for i in range(1, n + 1)]
    previous = []
    out = []
    for d in range(d_max + 1):
        index = {m: c for c, m in enumerate(monomials_of_degree(n, d))}
        basis = EchelonBasis()
        for row in previous:
            for v in variables:
                basis.add({index[m * v]: c for m, c in row.items()})
        for g in by_degree.get(d, []):
            basis.add({index[m]: c for m, c in g.terms.items()})
        out.append(comb(n + d - 1, d) - len(basis) if n else int(d == 0) - len(basis))
        inverse = {c: m for m, c in index.items()}
        previous = [{inverse[c]: v for c, v in row.items()} for row in basis.rows.values()]
    return tuple(out)


def _all_standard_monomials(ideal: MonomialIdeal) -> list:
    out = []
    d = 0
    while True:
        std = standard_monomials(ideal, d)
        if not std:
            return out
        out.extend(std)
        d += 1


def irreducible_components(ideal: MonomialIdeal) -> list:
    """Irreducible components ``(x_1^{a_1+1}, ..., x_n^{a_n+1})``, one per socle monomial ``x^a``."""
    if not is_artinian(ideal):
        raise ValueError("ideal is not artinian")
    n = ideal.n
    components = []
    top = 0
    for m in _all_standard_monomials(ideal):
        top = max(top, m.degree)
        if all(contains(ideal, m.times_var(i)) for i in range(1, n + 1)):
            gens = tuple(Monomial.var(i, n, e + 1) for i, e in enumerate(m.exponents, start=1))
            components.append(MonomialIdeal(n, gens))
    for d in range(top + 2):
        for m in monomials_of_degree(n, d):
            inside = all(contains(c, m) for c in components)
            if inside != contains(ideal, m):
                raise AssertionError(f"components do not intersect back to the ideal at {m}")
    return components


def is_radical_for(L: DistractionMatrix, ideal: MonomialIdeal) -> bool:
    """For each irreducible component the spans ``V_s`` are pairwise distinct."""
    if ideal.n != L.n_rows:
        raise ValueError(f"ideal in {ideal.n} variables, matrix has {L.n_rows} rows")
    for comp in irreducible_components(ideal):
        pairs = []
        for g in comp.gens:
            (i,) = [v for v, e in enumerate(g.exponents, start=1) if e]
            pairs.append((i, g.exponents[i - 1]))
        seen = set()
        count = 0
        for s in product(*(range(1, a + 1) for _, a in pairs)):
            forms = [L.entry(i, sl).coefficients for (i, _), sl in zip(pairs, s)]
            seen.add(row_space(forms))
            count += 1
            if len(seen) != count:
                return False
    return True


@dataclass
class PointsReport:
    points: list
    expected_count: int
    vanishing: bool
    distinct: bool

    @property
    def ok(self) -> bool:
        return self.vanishing and self.distinct and len(self.points) == self.expected_count


def distraction_points(ideal: MonomialIdeal, L: Optional[DistractionMatrix] = None):
    """Points of ``D_L(I)`` for the standard distraction in one more variable.

    The point attached to the standard monomial ``x^a`` is ``(a_1, ..., a_{n-1}, 1)``.
    Returns ``(points, report)``; a failed verification raises.
    """
    if not is_artinian(ideal) or not is_strongly_stable(ideal):
        raise ValueError("need an artinian strongly stable ideal")
    n = ideal.n + 1
    top = max((max(g.exponents, default=0) for g in ideal.gens), default=0)
    if L is None:
        L = make_standard_distraction(n, max(top, 1))
    if L.n_vars != n:
        raise ValueError(f"matrix in {L.n_vars} variables, expected {n}")
    if L != make_standard_distraction(n, L.N):
        raise ValueError("point extraction needs the standard distraction")
    if L.N < top:
        raise ValueError(f"N = {L.N} is smaller than the largest exponent {top}")
    std = _all_standard_monomials(ideal)
    points = [RationalPoint(m.exponents + (1,)) for m in std]
    partial = L.first_rows(ideal.n)
    polys = distract_ideal(partial, ideal)
    vanishing = all(p(pt.coordinates) == 0 for p in polys for pt in points)
    distinct = len(set(points)) == len(points)
    expected = sum(artinian_hilbert_function(ideal).values)
    report = PointsReport(points, expected, vanishing, distinct)
    if not report.ok:
        raise AssertionError("distraction point verification failed")
    return points, report


def parse_matrix(text: str) -> DistractionMatrix:
    """Parse ``vars <n>`` / ``cols <N>`` followed by rows of ``;``-separated forms."""
    n = N = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = line.split()
        if head[0] in ("vars", "cols") and len(head) == 2 and head[1].isdigit():
            if head[0] == "vars":
                n = int(head[1])
            else:
                N = int(head[1])
            continue
        if n is None or N is None:
            raise ValueError(f"line {lineno}: 'vars' and 'cols' headers must come first")
        cells = [c for c in line.split(";")]
        if len(cells) != N:
            raise ValueError(f"line {lineno}: expected {N} forms, found {len(cells)}")
        try:
            rows.append(tuple(parse_linear_form(c, n) for c in cells))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if not rows:
        raise ValueError("matrix file has no rows")
    return DistractionMatrix(tuple(rows))


def format_matrix(L: DistractionMatrix) -> str:
    lines = [f"vars {L.n_vars}", f"cols {L.N}"]
    lines.extend("; ".join(format_linear_form(f) for f in row) for row in L.rows)
    return "\n".join(lines) + "\n"
