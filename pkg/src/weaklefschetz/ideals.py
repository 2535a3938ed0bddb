"""Monomial ideals given by minimal generators.

Everything is computed by enumerating monomials degree by degree, which is
the right tool for artinian quotients of small embedding dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional, Sequence

from .monomials import (
    AmbientMismatch,
    Monomial,
    common_ambient,
    divides,
    format_monomial,
    lex_key,
    max_index,
    monomials_of_degree,
    parse_monomial,
)
from .osequences import OSequence, o_sequence_violation

__all__ = [
    "MonomialIdeal",
    "minimalize",
    "contains",
    "standard_monomials",
    "degree_piece",
    "hilbert_function",
    "artinian_hilbert_function",
    "is_artinian",
    "is_strongly_stable",
    "is_stable",
    "lex_segment",
    "lex_segment_monomials",
    "project_rho",
    "truncate_below",
    "max_stats",
    "IdealSyntaxError",
    "parse_ideal",
    "format_ideal",
]


def _gen_key(m: Monomial) -> tuple:
    # degree first, then decreasing rev-lex
    return (m.degree, tuple(reversed(m.exponents)))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal of ``K[x_1..x_n]`` stored by its minimal generators.

    Build one with :func:`minimalize` (or the ``from_generators`` alias) when
    the input may be redundant; the constructor assumes minimality and only
    sorts.
    """

    n: int
    gens: tuple

    def __post_init__(self):
        gens = tuple(sorted(set(self.gens), key=_gen_key))
        for g in gens:
            if g.n != self.n:
                raise AmbientMismatch(f"generator {g} is not in {self.n} variables")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def from_generators(cls, gens: Iterable[Monomial], n: Optional[int] = None):
        return minimalize(gens, n)

    @classmethod
    def parse(cls, *monomials: str, n: int) -> "MonomialIdeal":
        """Shorthand: ``MonomialIdeal.parse("x1^2", "x1*x2", n=2)``."""
        return minimalize([parse_monomial(s, n) for s in monomials], n)

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def extend(self, n: int) -> "MonomialIdeal":
        """The extended ideal ``I * K[x_1..x_n]``."""
        return MonomialIdeal(n, tuple(g.extend(n) for g in self.gens))

    def add(self, monomials: Iterable[Monomial]) -> "MonomialIdeal":
        return minimalize(list(self.gens) + list(monomials), self.n)

    @property
    def max_generator_degree(self) -> int:
        return max((g.degree for g in self.gens), default=0)

    def generators_of_degree(self, d: int) -> list:
        return [g for g in self.gens if g.degree == d]

    def __str__(self) -> str:
        return format_ideal(self)


def minimalize(raw_gens: Iterable[Monomial], n: Optional[int] = None) -> MonomialIdeal:
    """Drop duplicates and every monomial divisible by another one."""
    raw = list(raw_gens)
    found = common_ambient(raw)
    if n is None:
        if found is None:
            raise ValueError("cannot infer the variable count of an empty generator set")
        n = found
    elif found is not None and found != n:
        raise AmbientMismatch(f"generators in {found} variables, ideal in {n}")
    kept = []
    for m in sorted(set(raw), key=_gen_key):
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return MonomialIdeal(n, tuple(kept))


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    if m.n != ideal.n:
        raise AmbientMismatch(f"monomial in {m.n} variables, ideal in {ideal.n}")
    exps = m.exponents
    for g in ideal.gens:
        if all(a <= b for a, b in zip(g.exponents, exps)):
            return True
    return False


def standard_monomials(ideal: MonomialIdeal, d: int) -> list:
    """Monomials of degree ``d`` outside the ideal, decreasing rev-lex."""
    return [m for m in monomials_of_degree(ideal.n, d) if not contains(ideal, m)]


def degree_piece(ideal: MonomialIdeal, d: int) -> list:
    """Monomial basis of ``I_d``, decreasing rev-lex."""
    return [m for m in monomials_of_degree(ideal.n, d) if contains(ideal, m)]


def hilbert_function(ideal: MonomialIdeal, d_max: int) -> tuple:
    """``(h_0, ..., h_{d_max})`` of ``R/I``."""
    if d_max < 0:
        raise ValueError("d_max must be nonnegative")
    return tuple(len(standard_monomials(ideal, d)) for d in range(d_max + 1))


def is_artinian(ideal: MonomialIdeal) -> bool:
    """Every variable has a pure power among the generators."""
    pure = set()
    for g in ideal.gens:
        support = [i for i, e in enumerate(g.exponents) if e]
        if len(support) == 1:
            pure.add(support[0])
        elif not support:
            return True
    return len(pure) == ideal.n


def artinian_hilbert_function(ideal: MonomialIdeal) -> OSequence:
    """The whole (finite) Hilbert function of an artinian quotient."""
    if not is_artinian(ideal):
        raise ValueError("ideal is not artinian")
    values = []
    d = 0
    while True:
        v = len(standard_monomials(ideal, d))
        if v == 0:
            break
        values.append(v)
        d += 1
    if not values:
        raise ValueError("the unit ideal has no O-sequence")
    return OSequence(tuple(values))


def _borel_moves(m: Monomial, ks: Iterable[int]):
    exps = m.exponents
    for k in ks:
        if exps[k - 1] == 0:
            continue
        for i in range(1, k):
            e = list(exps)
            e[k - 1] -= 1
            e[i - 1] += 1
            yield Monomial(tuple(e))


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    """``(x_i / x_k) M`` stays in ``I`` for generators ``M``, ``x_k | M``, ``i < k``."""
    return all(contains(ideal, u)
               for g in ideal.gens
               for u in _borel_moves(g, range(1, ideal.n + 1)))


def is_stable(ideal: MonomialIdeal) -> bool:
    """Like strong stability but only moving the largest variable of each generator."""
    for g in ideal.gens:
        k = max_index(g)
        if k is None:
            continue
        if not all(contains(ideal, u) for u in _borel_moves(g, [k])):
            return False
    return True


def lex_segment_monomials(n: int, d: int, count: int) -> list:
    """The ``count`` lexicographically largest monomials of degree ``d``."""
    mons = sorted(monomials_of_degree(n, d), key=lex_key, reverse=True)
    if count < 0 or count > len(mons):
        raise ValueError(f"cannot take {count} of {len(mons)} monomials")
    return mons[:count]


def lex_segment(h) -> MonomialIdeal:
    """``Lex(h)`` in ``h_1`` variables, generated through degree ``s + 1``."""
    values = tuple(h.values if isinstance(h, OSequence) else h)
    reason = o_sequence_violation(values)
    if reason is not None:
        raise ValueError(f"not an O-sequence: {reason}")
    h = OSequence(values)
    n = h[1]
    ideal = MonomialIdeal.zero(n)
    if n == 0:
        return ideal
    for d in range(1, h.s + 2):
        total = comb(n + d - 1, d)
        segment = lex_segment_monomials(n, d, total - h[d])
        seg_set = set(segment)
        missing = [m for m in degree_piece(ideal, d) if m not in seg_set]
        if missing:
            raise AssertionError(f"lex segment in degree {d} is not an ideal piece")
        new = [m for m in segment if not contains(ideal, m)]
        if new:
            ideal = MonomialIdeal(n, ideal.gens + tuple(new))
    return ideal


def project_rho(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    """Image under ``x_j -> 0`` for ``j > i``, as an ideal of ``K[x_1..x_i]``."""
    if not 0 <= i <= ideal.n:
        raise ValueError(f"target variable count {i} outside 0..{ideal.n}")
    kept = [r for r in (g.restrict(i) for g in ideal.gens) if r is not None]
    return minimalize(kept, i)


def truncate_below(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    """``I_{<=i}``: the ideal generated by generators of degree at most ``i``."""
    if i < 0:
        raise ValueError("degree bound must be nonnegative")
    return MonomialIdeal(ideal.n, tuple(g for g in ideal.gens if g.degree <= i))


def max_stats(monomials, n: Optional[int] = None) -> tuple:
    """``([m_1, ..., m_n], [m_{<=1}, ..., m_{<=n}])`` counted by ``max(M)``.

    A :class:`MonomialIdeal` contributes its minimal generators; any other
    iterable is taken as the set of monomials itself (e.g. a degree piece).
    """
    if isinstance(monomials, MonomialIdeal):
        n = monomials.n if n is None else n
        monomials = monomials.gens
    monomials = list(monomials)
    if n is None:
        n = common_ambient(monomials) or 0
    m = [0] * n
    units = 0
    for mono in set(monomials):
        j = max_index(mono)
        if j is None:
            units += 1
        else:
            m[j - 1] += 1
    m_le = []
    running = units
    for c in m:
        running += c
        m_le.append(running)
    return m, m_le


class IdealSyntaxError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_ideal(text: str) -> tuple:
    """Parse the ideal file format.

    Returns ``(ideal, redundant)`` where ``redundant`` lists input monomials
    that were dropped because they are not minimal generators.
    """
    n = None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars"):
            if entries or n is not None:
                raise IdealSyntaxError(lineno, "'vars' header must come first")
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise IdealSyntaxError(lineno, f"bad header {line!r}")
            n = int(parts[1])
            continue
        try:
            entries.append((lineno, parse_monomial(line)))
        except ValueError as exc:
            raise IdealSyntaxError(lineno, str(exc)) from None
    top = max((m.n for _, m in entries), default=0)
    if n is None:
        n = top
    elif top > n:
        lineno = next(ln for ln, m in entries if m.n > n)
        raise IdealSyntaxError(lineno, f"variable index exceeds vars {n}")
    monomials = [m.extend(n) for _, m in entries]
    ideal = minimalize(monomials, n)
    kept = set(ideal.gens)
    redundant = []
    seen = set()
    for m in monomials:
        if m not in kept or m in seen:
            redundant.append(m)
        seen.add(m)
    return ideal, redundant


def format_ideal(ideal: MonomialIdeal, names: Optional[Sequence[str]] = None,
                 header: bool = True) -> str:
    """Inverse of :func:`parse_ideal` (one generator per line)."""
    lines = [f"vars {ideal.n}"] if header else []
    lines.extend(format_monomial(g, names) for g in ideal.gens)
    return "\n".join(lines) + "\n"
