"""Finite O-sequences, Macaulay's growth bound and weak Lefschetz O-sequences."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Optional, Sequence

__all__ = [
    "OSequence",
    "macaulay_representation",
    "macaulay_bound",
    "o_sequence_violation",
    "is_o_sequence",
    "is_unimodal",
    "delta",
    "WLSequenceReport",
    "check_m_times_wl",
    "is_m_times_wl",
    "parse_sequence",
]


@dataclass(frozen=True)
class OSequence:
    """``h_0, ..., h_s`` with ``h_0 = 1`` and positive entries (zero tail implicit).

    Only the shape is enforced here; Macaulay's bound is checked by
    :func:`is_o_sequence`.
    """

    values: tuple

    def __post_init__(self):
        vals = _normalize(self.values)
        object.__setattr__(self, "values", vals)

    @property
    def s(self) -> int:
        """Index of the last nonzero entry."""
        return len(self.values) - 1

    @property
    def k(self) -> int:
        """First index with ``h_k >= h_{k+1}``; ``s`` if strictly increasing."""
        return peak_index(self.values)

    def __getitem__(self, d: int) -> int:
        if d < 0:
            raise IndexError(d)
        return self.values[d] if d < len(self.values) else 0

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)


def _normalize(values: Iterable[int]) -> tuple:
    vals = [int(v) for v in values]
    while vals and vals[-1] == 0:
        vals.pop()
    if not vals or vals[0] != 1:
        raise ValueError(f"an O-sequence starts with 1, got {tuple(vals)}")
    if any(v <= 0 for v in vals):
        raise ValueError(f"zero or negative entry before the tail in {tuple(vals)}")
    return tuple(vals)


def peak_index(values: Sequence[int]) -> int:
    vals = list(values) + [0]
    for i in range(len(vals) - 1):
        if vals[i] >= vals[i + 1]:
            return i
    raise AssertionError("unreachable: padded sequence ends in 0")


def macaulay_representation(v: int, d: int) -> list:
    """Greedy ``d``-th Macaulay representation of ``v`` as ``[(a_d, d), ..., (a_t, t)]``."""
    if d < 1:
        raise ValueError("Macaulay representation needs d >= 1")
    if v < 0:
        raise ValueError("v must be nonnegative")
    rep = []
    while v > 0 and d >= 1:
        a = d
        while comb(a + 1, d) <= v:
            a += 1
        rep.append((a, d))
        v -= comb(a, d)
        d -= 1
    return rep


def macaulay_bound(v: int, d: int) -> int:
    """``v^<d>``: the largest possible ``h_{d+1}`` when ``h_d = v``."""
    return sum(comb(a + 1, i + 1) for a, i in macaulay_representation(v, d))


def o_sequence_violation(h: Sequence[int]) -> Optional[str]:
    """Reason ``h`` is not an O-sequence, or ``None`` if it is."""
    vals = [int(v) for v in h]
    if not vals or vals[0] != 1:
        return "h_0 must be 1"
    if any(v < 0 for v in vals):
        return "negative entry"
    seen_zero = False
    for d, v in enumerate(vals):
        if v == 0:
            seen_zero = True
        elif seen_zero:
            return f"nonzero entry h_{d} = {v} after a zero"
    for d in range(1, len(vals) - 1):
        bound = macaulay_bound(vals[d], d)
        if vals[d + 1] > bound:
            return (f"h_{d + 1} = {vals[d + 1]} exceeds the Macaulay bound "
                    f"h_{d}^<{d}> = {bound}")
    return None


def is_o_sequence(h: Sequence[int]) -> bool:
    return o_sequence_violation(h) is None


def is_unimodal(h: Sequence[int]) -> bool:
    """``h_0 < ... < h_k >= h_{k+1} >= ... >= h_s``."""
    vals = list(h)
    k = peak_index(vals)
    return all(vals[i] >= vals[i + 1] for i in range(k, len(vals) - 1))


def delta(h) -> OSequence:
    """Truncated first difference ``1, h_1 - h_0, ..., h_k - h_{k-1}``."""
    h = h if isinstance(h, OSequence) else OSequence(tuple(h))
    if not is_unimodal(h.values):
        raise ValueError(f"{h} is not unimodal")
    vals = h.values
    return OSequence((1,) + tuple(vals[i] - vals[i - 1] for i in range(1, h.k + 1)))


@dataclass
class WLSequenceReport:
    """Outcome of the m-times weak Lefschetz O-sequence test.

    ``deltas[i - 1]`` is the i-th iterated difference and ``lengths[i - 1]``
    its length ``k_i``, for every level that could be computed.
    """

    ok: bool
    m: int
    reason: Optional[str] = None
    failed_level: Optional[int] = None
    deltas: list = field(default_factory=list)
    lengths: list = field(default_factory=list)


def check_m_times_wl(h: Sequence[int], m: int) -> WLSequenceReport:
    if m < 0:
        raise ValueError("m must be nonnegative")
    report = WLSequenceReport(ok=False, m=m)
    current = list(h)
    for level in range(m + 1):
        reason = o_sequence_violation(current)
        if reason is not None:
            report.reason = f"level {level}: not an O-sequence ({reason})"
            report.failed_level = level
            return report
        if level == m:
            break
        seq = OSequence(tuple(current))
        if not is_unimodal(seq.values):
            report.reason = f"level {level}: {seq} is not unimodal"
            report.failed_level = level
            return report
        nxt = delta(seq)
        report.deltas.append(nxt)
        report.lengths.append(nxt.s)
        current = list(nxt.values)
    report.ok = True
    return report


def is_m_times_wl(h: Sequence[int], m: int) -> bool:
    return check_m_times_wl(h, m).ok


def parse_sequence(text: str) -> OSequence:
    """Parse ``1,4,7,8,7,4,1`` (commas and/or whitespace)."""
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"not a sequence of integers: {text!r}") from None
    return OSequence(tuple(vals))
