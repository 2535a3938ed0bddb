"""Weak Lefschetz checks for monomial ideals and the extremal ideals ``W_m(h)``.

For a strongly stable ideal the last variable ``x_n`` is a weak Lefschetz
element whenever one exists, so the checks here are purely combinatorial:
unimodality of the Hilbert function, ``(x_1..x_{n-1})^{k+1}`` inside ``I``,
and no generator divisible by ``x_n`` in degree ``<= k``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .betti import BettiTable, dominates, ek_graded_betti, ek_total_betti
from .ideals import (
    MonomialIdeal,
    artinian_hilbert_function,
    contains,
    degree_piece,
    hilbert_function,
    is_artinian,
    is_strongly_stable,
    lex_segment,
    lex_segment_monomials,
    minimalize,
    project_rho,
    standard_monomials,
    truncate_below,
)
from .monomials import Monomial, monomials_of_degree
from .osequences import OSequence, check_m_times_wl, delta, is_unimodal, peak_index

__all__ = [
    "NON_UNIMODAL",
    "MISSING_POWER",
    "LOW_DEGREE_XN_GENERATOR",
    "WlpReport",
    "wlp_criterion",
    "has_wlp_stable",
    "MWlpReport",
    "has_m_wlp_stable",
    "build_w",
    "is_gotzmann",
    "MaxBettiReport",
    "has_maximal_betti",
    "RigidityReport",
    "check_rigidity",
    "borel_closure",
    "random_strongly_stable",
    "random_m_wlp_ideal",
]

NON_UNIMODAL = "non-unimodal-HF"
MISSING_POWER = "missing-power"
LOW_DEGREE_XN_GENERATOR = "low-degree-xn-generator"


@dataclass
class WlpReport:
    """Certificate for (or against) ``x_n`` being a weak Lefschetz element."""

    has_property: bool
    k: int
    hilbert: OSequence
    failing_condition: Optional[str] = None
    witness: Optional[Monomial] = None

    def describe(self) -> str:
        if self.has_property:
            return f"x_n is a weak Lefschetz element (peak k = {self.k})"
        if self.failing_condition == NON_UNIMODAL:
            return f"Hilbert function {self.hilbert} is not unimodal"
        if self.failing_condition == MISSING_POWER:
            return (f"{self.witness} of degree k+1 = {self.k + 1} in the first "
                    f"n-1 variables is not in the ideal")
        return f"generator {self.witness} is divisible by x_n but has degree <= k = {self.k}"


def _require_artinian(ideal: MonomialIdeal) -> None:
    if not is_artinian(ideal):
        raise ValueError("ideal is not artinian")


def wlp_criterion(ideal: MonomialIdeal) -> WlpReport:
    """Decide whether ``x_n`` is a weak Lefschetz element of ``R/I``.

    Valid for any artinian monomial ideal; no stability assumption. When the
    ideal is strongly stable this is the same as asking whether ``R/I`` has
    the WLP at all.
    """
    _require_artinian(ideal)
    h = artinian_hilbert_function(ideal)
    k = peak_index(h.values)
    if not is_unimodal(h.values):
        return WlpReport(False, k, h, NON_UNIMODAL)
    n = ideal.n
    if n >= 2:
        power = Monomial.var(n - 1, n, k + 1)
        if not contains(ideal, power):
            return WlpReport(False, k, h, MISSING_POWER, power)
        for m in monomials_of_degree(n - 1, k + 1):
            m = m.extend(n)
            if not contains(ideal, m):
                return WlpReport(False, k, h, MISSING_POWER, m)
    for g in ideal.gens:
        if g.exponents[n - 1] > 0 and g.degree <= k:
            return WlpReport(False, k, h, LOW_DEGREE_XN_GENERATOR, g)
    return WlpReport(True, k, h)


def has_wlp_stable(ideal: MonomialIdeal) -> WlpReport:
    if not is_strongly_stable(ideal):
        raise ValueError("ideal is not strongly stable")
    return wlp_criterion(ideal)


@dataclass
class MWlpReport:
    """Per-level reports for ``x_n, x_{n-1}, ..., x_{n-m+1}``."""

    has_property: bool
    m: int
    levels: list = field(default_factory=list)

    @property
    def hilbert_functions(self) -> list:
        return [r.hilbert for r in self.levels]

    @property
    def failed_level(self) -> Optional[int]:
        for i, r in enumerate(self.levels):
            if not r.has_property:
                return i
        return None


def has_m_wlp_stable(ideal: MonomialIdeal, m: int) -> MWlpReport:
    """Level ``i`` checks ``x_{n-i}`` on ``R/(I + (x_n, ..., x_{n-i+1}))``."""
    if not is_strongly_stable(ideal):
        raise ValueError("ideal is not strongly stable")
    _require_artinian(ideal)
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m > ideal.n:
        raise ValueError(f"m = {m} exceeds the number of variables {ideal.n}")
    report = MWlpReport(True, m)
    for i in range(m):
        level = wlp_criterion(project_rho(ideal, ideal.n - i))
        report.levels.append(level)
        if not level.has_property:
            report.has_property = False
            break
    return report


def _extend_to_hilbert(base: MonomialIdeal, h: OSequence, n: int) -> MonomialIdeal:
    """Extend ``base`` to ``n`` variables and cut the Hilbert function down to ``h``
    by adding the largest rev-lex standard monomials degree by degree."""
    ideal = base.extend(n)
    k = h.k
    got = hilbert_function(ideal, k)
    if got != tuple(h[d] for d in range(k + 1)):
        raise AssertionError(f"extended base has Hilbert function {got}, expected {h}")
    for d in range(k + 1, h.s + 2):
        std = standard_monomials(ideal, d)
        excess = len(std) - h[d]
        if excess < 0:
            raise AssertionError(f"degree {d}: only {len(std)} standard monomials, need {h[d]}")
        if excess:
            ideal = MonomialIdeal(n, ideal.gens + tuple(std[:excess]))
    return ideal


def _build_w(h: OSequence, m: int) -> MonomialIdeal:
    if m == 0:
        return lex_segment(h)
    n = h[1]
    if n == 0:
        return MonomialIdeal.zero(0)
    base = _build_w(delta(h), m - 1)
    return _extend_to_hilbert(base, h, n)


def build_w(h, m: int) -> MonomialIdeal:
    """The extremal ideal ``W_m(h)`` in ``h_1`` variables.

    ``W_0(g)`` is the lex-segment ideal; ``W_m(h)`` extends ``W_{m-1}(delta h)``
    by one variable and adjoins, in each degree past the peak, the rev-lex
    largest standard monomials until the Hilbert function drops to ``h``.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    values = tuple(h.values if isinstance(h, OSequence) else h)
    report = check_m_times_wl(values, m)
    if not report.ok:
        raise ValueError(f"not a {m}-times weak Lefschetz O-sequence: {report.reason}")
    return _build_w(OSequence(values), m)


def is_gotzmann(ideal: MonomialIdeal, d_max: Optional[int] = None) -> bool:
    """``|R_1 I_k| == |R_1 Lex(I_k)|`` for every ``k <= d_max``.

    The default ``d_max`` is the largest generator degree: past it ``I`` is
    generated by ``I_k`` and Gotzmann persistence settles all higher degrees.
    """
    n = ideal.n
    if d_max is None:
        d_max = ideal.max_generator_degree
    for k in range(d_max + 1):
        piece = degree_piece(ideal, k)
        if not piece:
            continue
        grown = {m.times_var(i) for m in piece for i in range(1, n + 1)}
        lex = lex_segment_monomials(n, k, len(piece))
        lex_grown = {m.times_var(i) for m in lex for i in range(1, n + 1)}
        if len(grown) != len(lex_grown):
            return False
    return True


@dataclass
class MaxBettiReport:
    """Both verdicts on whether ``I`` has the Betti numbers of ``W_m(h)``.

    ``betti_equal`` compares the tables directly and is authoritative;
    ``gotzmann_criterion`` is the projection test at the chosen cutoff.
    """

    betti_equal: bool
    gotzmann_criterion: bool
    cutoff: int
    m: int
    hilbert: OSequence
    table: BettiTable
    extremal_table: BettiTable
    projected: MonomialIdeal

    @property
    def agree(self) -> bool:
        return self.betti_equal == self.gotzmann_criterion


def _check_m_wlp(ideal: MonomialIdeal, m: int) -> OSequence:
    report = has_m_wlp_stable(ideal, m)
    if not report.has_property:
        raise ValueError(f"R/I does not have {m}-times the WLP "
                         f"(level {report.failed_level} fails)")
    h = artinian_hilbert_function(ideal)
    if h[1] != ideal.n:
        raise ValueError("ideal contains a variable; comparisons need h_1 = n")
    return h


def has_maximal_betti(ideal: MonomialIdeal, m: int, cutoff: str = "k+1") -> MaxBettiReport:
    """``cutoff`` is ``"k+1"`` (truncate through degree ``k_m + 1``) or ``"k"``."""
    if m < 1:
        raise ValueError("m must be positive")
    h = _check_m_wlp(ideal, m)
    k_m = check_m_times_wl(h.values, m).lengths[m - 1]
    if cutoff == "k+1":
        c = k_m + 1
    elif cutoff == "k":
        c = k_m
    else:
        raise ValueError(f"unknown cutoff policy {cutoff!r}")
    projected = project_rho(truncate_below(ideal, c), ideal.n - m)
    table = ek_graded_betti(ideal)
    extremal = ek_graded_betti(build_w(h, m))
    return MaxBettiReport(
        betti_equal=table == extremal,
        gotzmann_criterion=is_gotzmann(projected),
        cutoff=c,
        m=m,
        hilbert=h,
        table=table,
        extremal_table=extremal,
        projected=projected,
    )


@dataclass
class RigidityReport:
    totals: list
    extremal_totals: list
    first_equal: Optional[int]
    violations: list = field(default_factory=list)
    dominated: bool = True

    @property
    def holds(self) -> bool:
        return not self.violations


def check_rigidity(ideal: MonomialIdeal, m: int) -> RigidityReport:
    """Check that ``beta_q`` reaching the ``W_m(h)`` bound forces equality beyond ``q``.

    ``violations`` collects ``(q, i)`` pairs (and ``(q, i, j)`` for graded
    entries) where equality at ``q`` fails to propagate to ``i >= q``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    h = _check_m_wlp(ideal, m)
    w = build_w(h, m)
    totals = ek_total_betti(ideal)
    w_totals = ek_total_betti(w)
    table = ek_graded_betti(ideal)
    w_table = ek_graded_betti(w)
    n = ideal.n
    report = RigidityReport(totals, w_totals, None, dominated=dominates(w_table, table))
    for q in range(1, n + 1):
        if totals[q - 1] != w_totals[q - 1]:
            continue
        if report.first_equal is None:
            report.first_equal = q
        for i in range(q, n + 1):
            if totals[i - 1] != w_totals[i - 1]:
                report.violations.append((q, i))
        keys = set(table.entries) | set(w_table.entries)
        for i, j in sorted(keys):
            if i >= q and table[(i, j)] != w_table[(i, j)]:
                report.violations.append((q, i, j))
    return report


def borel_closure(monomials, n: int) -> set:
    """Smallest set containing ``monomials`` and closed under ``x_k -> x_i`` (``i < k``)."""
    seen = set(monomials)
    stack = list(seen)
    while stack:
        m = stack.pop()
        exps = m.exponents
        for k in range(1, n):
            if exps[k] == 0:
                continue
            for i in range(k):
                e = list(exps)
                e[k] -= 1
                e[i] += 1
                u = Monomial(tuple(e))
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return seen


def _random_monomial(rng: random.Random, n: int, d: int) -> Monomial:
    exps = [0] * n
    for i in rng.choices(range(n), k=d):
        exps[i] += 1
    return Monomial(tuple(exps))


def random_strongly_stable(seed, n: int, max_degree: int,
                           target=None, attempts: int = 2000) -> MonomialIdeal:
    """Seeded random artinian strongly stable ideal in ``n`` variables.

    A few random monomials are closed under Borel moves and all monomials of
    some degree ``2 <= D <= max_degree + 1`` are added, so there are no
    linear generators. With ``target`` the draw is repeated until the
    Hilbert function matches.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    rng = random.Random(seed)
    target = None if target is None else OSequence(tuple(target))
    for _ in range(attempts):
        top = rng.randint(2, max_degree + 1)
        picks = [_random_monomial(rng, n, rng.randint(2, top))
                 for _ in range(rng.randint(1, 5))]
        picks.append(Monomial.var(n, n, top))
        ideal = minimalize(borel_closure(picks, n), n)
        if target is None or artinian_hilbert_function(ideal) == target:
            return ideal
    raise ValueError("no sample found")


def random_m_wlp_ideal(seed, n: int, m: int, max_degree: int) -> MonomialIdeal:
    """Seeded random artinian strongly stable ideal whose quotient has ``m``-times the WLP.

    Built like ``W_m(h)``: an ``(m-1)``-times WLP ideal in ``n - 1`` variables
    of socle degree ``k`` is extended by one variable, then Borel-closed
    monomials divisible by ``x_n`` of degree ``>= k + 1`` are added.
    """
    rng = random.Random(seed)
    return _random_m_wlp(rng, n, m, max_degree)


def _random_m_wlp(rng: random.Random, n: int, m: int, max_degree: int) -> MonomialIdeal:
    if n == 0:
        return MonomialIdeal.zero(0)
    if m == 0:
        return random_strongly_stable(rng.random(), n, max_degree)
    base = _random_m_wlp(rng, n - 1, m - 1, max(1, max_degree - 1))
    k = artinian_hilbert_function(base).s
    lo = max(k + 1, 2)
    hi = max(lo, max_degree)
    picks = []
    for _ in range(rng.randint(0, 3)):
        d = rng.randint(lo, hi)
        mono = _random_monomial(rng, n - 1, d - 1).extend(n).times_var(n)
        picks.append(mono)
    picks.append(Monomial.var(n, n, rng.randint(lo, hi + 1)))
    extra = borel_closure(picks, n)
    return base.extend(n).add(extra)
