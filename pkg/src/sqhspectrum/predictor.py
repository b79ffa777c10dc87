"""Predicted attainable Milnor numbers for weights ``(1/p, 1/q)``.

"Numbers between A and B" is read as the open interval: both ends are
attained by explicit deformations, so only interior values can be missing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .constructions import SQHParams, nu_tr

FIRST_JUMP_BAND = "first-jump-band"
PKP_BAND = "pkp-band"
PKP_2P_1 = "pkp-2p-1"
NU_MINUS_P = "nu-minus-p"
SMALL_P_CATALOG = "small-p-catalog"

CASE_TAGS = (FIRST_JUMP_BAND, PKP_BAND, PKP_2P_1, NU_MINUS_P, SMALL_P_CATALOG)

FULL = "full"
ORACLE_ONLY = "oracle-only"


@dataclass(frozen=True)
class PossibleGap:
    value: int
    case: str
    definitive: bool


@dataclass
class GapReport:
    params: SQHParams
    mu: int
    mu_pkp: int
    guaranteed: list[tuple[int, int]]
    possible_gaps: list[PossibleGap] = field(default_factory=list)
    applicability: str = FULL

    @property
    def gap_values(self) -> set[int]:
        return {g.value for g in self.possible_gaps}

    @property
    def definitive_gaps(self) -> set[int]:
        return {g.value for g in self.possible_gaps if g.definitive}

    def guaranteed_values(self) -> set[int]:
        return {v for lo, hi in self.guaranteed for v in range(lo, hi + 1)}


def mu_sqh(p: int, q: int) -> int:
    """Milnor number ``(p - 1)(q - 1)`` of an SQH germ with weights ``(1/p, 1/q)``."""
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    if q < p:
        raise ValueError(f"need p <= q, got p={p}, q={q}")
    return nu_tr(p, q)


def open_interval(hi: int, lo: int) -> range:
    """Integers strictly between ``lo`` and ``hi``, descending."""
    return range(hi - 1, lo, -1)


def to_intervals(values: Iterable[int]) -> list[tuple[int, int]]:
    """Sorted inclusive runs of consecutive integers."""
    runs: list[list[int]] = []
    for v in sorted(set(values)):
        if runs and v == runs[-1][1] + 1:
            runs[-1][1] = v
        else:
            runs.append([v, v])
    return [(lo, hi) for lo, hi in runs]


def _gap_values(params: SQHParams) -> tuple[list[tuple[int, str]], bool, str]:
    p, k, r, m = params.p, params.k, params.r, params.m
    mu = nu_tr(p, params.q)
    mu_pkp = nu_tr(p, k * p)
    even = p % 2 == 0
    gaps: list[tuple[int, str]] = []
    if r == 0:
        if p <= 4:
            # explicit catalog: p = 2 has no gaps, p = 3 only mu - 1, p = 4 also mu - 2 and mu - 7 unless k <= 2
            gaps += [(v, SMALL_P_CATALOG) for v in open_interval(mu, mu - (p - 1))]
            if p == 4 and k > 2:
                gaps.append((mu - 7, SMALL_P_CATALOG))
            return gaps, True, FULL
        gaps += [(v, PKP_BAND) for v in open_interval(mu, mu - (p - 1))]
        if even:
            gaps.append((mu - (2 * p - 1), PKP_2P_1))
        return gaps, False, FULL
    if p <= 4:
        return [], False, ORACLE_ONLY
    gaps += [(v, FIRST_JUMP_BAND) for v in open_interval(mu, mu - m)]
    gaps += [(v, PKP_BAND) for v in open_interval(mu_pkp, mu_pkp - (p - 1))]
    if even:
        gaps.append((mu_pkp - (2 * p - 1), PKP_2P_1))
    if even and r == p - 1:
        gaps.append((mu - p, NU_MINUS_P))
    return gaps, False, FULL


def predicted_report(p: int, q: int) -> GapReport:
    """Gap prediction for weights ``(1/p, 1/q)``, ``2 <= p <= q``.

    ``q = kp`` is treated through the convenient diagram ``tr(p, kp)``.
    For ``p <= 4`` with ``p`` not dividing ``q`` nothing is predicted
    (``applicability == "oracle-only"``, empty guaranteed set).
    """
    params = SQHParams(p, q)
    mu = mu_sqh(p, q)
    mu_pkp = nu_tr(p, params.k * p)
    raw, definitive, applicability = _gap_values(params)
    seen: dict[int, str] = {}
    for v, tag in raw:
        if 1 <= v < mu and v not in seen:
            seen[v] = tag
    gaps = [PossibleGap(v, tag, definitive) for v, tag in sorted(seen.items(), reverse=True)]
    if applicability == ORACLE_ONLY:
        guaranteed: list[tuple[int, int]] = []
    else:
        guaranteed = to_intervals(v for v in range(1, mu + 1) if v not in seen)
    return GapReport(params, mu, mu_pkp, guaranteed, gaps, applicability)
