"""Monomials in a fixed number of variables, term orders and enumeration.

Variables are indexed ``1..n``; a monomial stores a dense exponent tuple of
length ``n``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Sequence

__all__ = [
    "Monomial",
    "AmbientMismatch",
    "max_index",
    "divides",
    "cmp_revlex",
    "cmp_lex",
    "revlex_key",
    "lex_key",
    "monomials_of_degree",
    "parse_monomial",
    "format_monomial",
]


class AmbientMismatch(ValueError):
    """Two objects live in polynomial rings with different variable counts."""


@dataclass(frozen=True)
class Monomial:
    exponents: tuple

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def var(cls, i: int, n: int, power: int = 1) -> "Monomial":
        """The monomial ``x_i^power`` in ``n`` variables (``i`` is 1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        exps = [0] * n
        exps[i - 1] = power
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @cached_property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def max_index(self) -> Optional[int]:
        return max_index(self)

    def __getitem__(self, i: int) -> int:
        """Exponent of ``x_i`` (1-based)."""
        return self.exponents[i - 1]

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_ambient(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        _check_ambient(self, other)
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def times_var(self, i: int, power: int = 1) -> "Monomial":
        exps = list(self.exponents)
        exps[i - 1] += power
        return Monomial(tuple(exps))

    def extend(self, n: int) -> "Monomial":
        """Same monomial viewed in a ring with ``n >= self.n`` variables."""
        if n < self.n:
            raise ValueError("cannot shrink the ambient ring by extension")
        return Monomial(self.exponents + (0,) * (n - self.n))

    def restrict(self, n: int) -> Optional["Monomial"]:
        """Image under ``x_j -> 0`` for ``j > n``; ``None`` when it vanishes."""
        if any(self.exponents[n:]):
            return None
        return Monomial(self.exponents[:n])

    def divides(self, other: "Monomial") -> bool:
        return divides(self, other)

    def __str__(self) -> str:
        return format_monomial(self)


def _check_ambient(a: Monomial, b: Monomial) -> None:
    if a.n != b.n:
        raise AmbientMismatch(f"monomials in {a.n} and {b.n} variables")


def max_index(m: Monomial) -> Optional[int]:
    """Largest ``i`` with a positive exponent on ``x_i``, or ``None`` for 1."""
    for i in range(m.n, 0, -1):
        if m.exponents[i - 1] > 0:
            return i
    return None


def divides(a: Monomial, b: Monomial) -> bool:
    _check_ambient(a, b)
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


def revlex_key(m: Monomial) -> tuple:
    """Sort key for degree reverse lexicographic order (ascending)."""
    return (m.degree, tuple(-e for e in reversed(m.exponents)))


def lex_key(m: Monomial) -> tuple:
    """Sort key for degree lexicographic order (ascending)."""
    return (m.degree, m.exponents)


def _cmp(ka, kb) -> int:
    return (ka > kb) - (ka < kb)


def cmp_revlex(a: Monomial, b: Monomial) -> int:
    """Return -1, 0 or 1. Across degrees the lower degree is smaller."""
    _check_ambient(a, b)
    return _cmp(revlex_key(a), revlex_key(b))


def cmp_lex(a: Monomial, b: Monomial) -> int:
    _check_ambient(a, b)
    return _cmp(lex_key(a), lex_key(b))


def monomials_of_degree(n: int, d: int) -> list:
    """All monomials of degree ``d`` in ``n`` variables, decreasing rev-lex."""
    if n < 0 or d < 0:
        raise ValueError("n and d must be nonnegative")
    if n == 0:
        return [Monomial(())] if d == 0 else []
    out = []
    for combo in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        out.append(Monomial(tuple(exps)))
    out.sort(key=revlex_key, reverse=True)
    return out


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: Optional[int] = None) -> Monomial:
    """Parse ``x1^2*x3`` (or ``1``).

    Without ``n`` the ambient ring is the smallest one containing every
    variable that appears.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty monomial")
    powers = {}
    if s != "1":
        for factor in s.split("*"):
            match = _FACTOR.match(factor)
            if match is None:
                raise ValueError(f"bad monomial factor {factor!r}")
            i = int(match.group(1))
            if i < 1:
                raise ValueError(f"variable index must be >= 1, got x{i}")
            e = int(match.group(2)) if match.group(2) is not None else 1
            powers[i] = powers.get(i, 0) + e
    top = max(powers, default=0)
    if n is None:
        n = top
    elif top > n:
        raise ValueError(f"x{top} does not exist in {n} variables")
    exps = [0] * n
    for i, e in powers.items():
        exps[i - 1] = e
    return Monomial(tuple(exps))


LETTER_NAMES = ("x", "y", "z", "t")


def format_monomial(m: Monomial, names: Optional[Sequence[str]] = None) -> str:
    """Render in the ``x1^2*x3`` grammar, or with custom variable names."""
    factors = []
    for i, e in enumerate(m.exponents, start=1):
        if e == 0:
            continue
        name = names[i - 1] if names is not None else f"x{i}"
        factors.append(name if e == 1 else f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def variable_names(n: int, letters: bool = False) -> Optional[tuple]:
    """``x, y, z, t`` when asked for and ``n <= 4``; otherwise canonical."""
    if letters and n <= len(LETTER_NAMES):
        return LETTER_NAMES[:n]
    return None


def common_ambient(monomials: Iterable[Monomial]) -> Optional[int]:
    ns = {m.n for m in monomials}
    if len(ns) > 1:
        raise AmbientMismatch(f"mixed ambient variable counts {sorted(ns)}")
    return ns.pop() if ns else None
