"""Explicit deformation diagrams for semi-quasi-homogeneous germs.

Every builder returns :class:`NamedDeformation` records carrying the
diagram, the base it deforms and, where one is known in closed form, the
Newton number it is supposed to have.  Claimed values are computed from
``(p - 1)(q - 1)`` formulas, never from the diagram itself, so checking
``newton_number(diagram) == claimed_nu`` is a real test.

Chains are always laid down steepest segment first.  Any multiset of
segments has exactly one convex arrangement, so the orientation sign
attached to a term sum is not needed to place it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .eea import EEASequence, coefficients_at, eea_sequence, sign_of
from .geometry import (
    Diagram,
    LatticePoint,
    SegmentTerm,
    diagram_from_terms,
    is_deformation_of,
    newton_number,
    tr,
    triangle,
)

log = logging.getLogger(__name__)


def nu_tr(p: int, q: int) -> int:
    """Closed form ``nu(tr(p, q)) = (p - 1)(q - 1)``."""
    return (p - 1) * (q - 1)


@dataclass(frozen=True)
class SQHParams:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < self.p:
            raise ValueError(f"need 2 <= p <= q, got p={self.p}, q={self.q}")

    @property
    def k(self) -> int:
        return self.q // self.p

    @property
    def r(self) -> int:
        return self.q % self.p

    @property
    def m(self) -> int:
        return gcd(self.p, self.q)

    @property
    def weights(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (1, self.p), (1, self.q)

    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "k": self.k, "r": self.r, "m": self.m}


@dataclass(frozen=True)
class NamedDeformation:
    label: str
    diagram: Diagram
    claimed_nu: Optional[int]
    base: Diagram

    @property
    def nu(self) -> int:
        return newton_number(self.diagram)

    def problems(self) -> list[str]:
        out = []
        if not is_deformation_of(self.diagram, self.base):
            out.append(f"{self.label}: {self.diagram} is not a deformation of {self.base}")
        if self.claimed_nu is not None and self.nu != self.claimed_nu:
            out.append(f"{self.label}: computed nu {self.nu} != claimed {self.claimed_nu}")
        return out


def convex_chain(terms: Sequence[SegmentTerm], anchor: Optional[Sequence[int]] = None) -> Diagram:
    """Convex arrangement of ``terms`` hanging from ``anchor``.

    The default anchor puts the chain's top end on the y-axis so the bottom
    end lands on the x-axis.  Zero-length terms must be dropped by the caller.
    """
    ordered = sorted(terms, key=lambda t: -Fraction(t.dy, t.dx))
    if anchor is None:
        anchor = (0, sum(t.step[1] for t in terms))
    return diagram_from_terms(anchor, False, ordered)


def _terms(*specs) -> list[SegmentTerm]:
    """``(multiplicity, dx, dy)`` triples to terms, skipping empty ones."""
    out = []
    for mult, dx, dy in specs:
        if mult == 0 or (dx == 0 and dy == 0):
            continue
        if mult < 0 or dx < 0 or dy < 0:
            raise ValueError(f"invalid term {mult}*tr({dx},{dy})")
        out.append(tr(dx, dy, mult))
    return out


def _a1_is_one_terms(a0: int, b0: int) -> list[SegmentTerm]:
    k, r = divmod(b0, a0)
    return _terms((r, 1, k + 1), (a0 - r, 1, k))


def sigma_terms(a0: int, b0: int, seq: Optional[EEASequence] = None) -> list[SegmentTerm]:
    seq = seq or eea_sequence(a0, b0)
    if seq.l < 2 or seq.pairs[0][0] == 1:
        # a0 = 1 gives l = 1; the balanced unit-width chain is then tr(1, b0) itself
        return _a1_is_one_terms(a0, b0)
    (a1, b1), (a2, b2) = seq.pairs[0], seq.pairs[1]
    return _terms((seq.N, a1, b1), (seq.n, a2, b2))


def sigma_diagram(a0: int, b0: int, anchor: Optional[Sequence[int]] = None, reversed: Optional[bool] = None) -> Diagram:
    """The lowest chain reached by the minimal-jump deformations of ``tr(a0, b0)``.

    ``reversed=None`` picks the convex orientation; an explicit flag is passed
    through and raises if it makes the chain non-convex.
    """
    terms = sigma_terms(a0, b0)
    if anchor is None:
        anchor = (0, b0)
    if reversed is None:
        return convex_chain(terms, anchor)
    return diagram_from_terms(anchor, reversed, terms)


def _require_non_divisible(params: SQHParams) -> tuple[int, EEASequence]:
    m = params.m
    if m >= params.p:
        raise ValueError(f"p={params.p} divides q={params.q}; use pkp_family")
    return m, eea_sequence(params.p // m, params.q // m)


def first_jump_diagram(params: SQHParams) -> NamedDeformation:
    """One-point deformation of ``tr(p, q)`` with Newton number ``nu - gcd(p, q)``."""
    m, seq = _require_non_divisible(params)
    p, q = params.p, params.q
    a1, b1 = seq.pairs[0]
    d = convex_chain(_terms((1, p - a1, q - b1), (1, a1, b1)))
    return NamedDeformation("eq-3.1", d, nu_tr(p, q) - m, triangle(p, q))


def staircase_brackets(params: SQHParams) -> list[NamedDeformation]:
    """``[D_0, E_0, D_1, E_1, ..., D_{l-2}, L]`` for ``tr(p, q)``, ``p`` not dividing ``q``.

    ``D_0`` is the first-jump diagram.  Every integer between ``nu(E_i)`` and
    ``nu(D_i)`` is reached by deformations of ``D_i``, and ``D_{i+1} >= E_i``,
    so the brackets chain into one run from ``nu - m`` down to ``nu(L)``.
    """
    m, seq = _require_non_divisible(params)
    p, q = params.p, params.q
    base = triangle(p, q)
    l = seq.l
    out = [first_jump_diagram(params)]
    for i in range(0, l - 1):
        if i >= 1:
            (ai, bi), (aj, bj) = seq.pair(i), seq.pair(i + 1)
            Ni, ni = coefficients_at(seq, i)
            d = convex_chain(_terms((1, m * Ni * ai + aj, m * Ni * bi + bj), (m * ni - 1, aj, bj)))
            out.append(NamedDeformation(f"staircase-D[{i}]", d, None, base))
        if i == l - 2:
            k, r = params.k, params.r
            d = convex_chain(_terms((r, 1, k + 1), (p - r, 1, k)))
            out.append(NamedDeformation("staircase-L", d, nu_tr(p, q) - r * (p - r), base))
        else:
            (aj, bj), (ak, bk) = seq.pair(i + 1), seq.pair(i + 2)
            Nj, nj = coefficients_at(seq, i + 1)
            d = convex_chain(_terms((m * Nj, aj, bj), (m * nj, ak, bk)))
            out.append(NamedDeformation(f"staircase-E[{i}]", d, None, base))
    return out


def bracket_pairs(brackets: Sequence[NamedDeformation]) -> list[tuple[NamedDeformation, NamedDeformation]]:
    """``(D_i, E_i)`` pairs of a :func:`staircase_brackets` list."""
    return [(brackets[j], brackets[j + 1]) for j in range(0, len(brackets), 2)]


def gcd_parity(p: int, q: int) -> tuple[int, bool]:
    """``(gcd(p, q - 1), p even)`` for ``q = -1 mod p``; the gcd is 1 or 2 and is 2 exactly for even p."""
    if p < 1 or q < 1 or q % p != (p - 1) % p:
        raise ValueError(f"q={q} is not -1 modulo p={p}")
    g = gcd(p, q - 1)
    even = p % 2 == 0
    if g > 2 or (g > 1) != even:
        raise AssertionError(f"parity identity fails at p={p}, q={q}: gcd={g}")
    return g, even


@dataclass
class FamilyStep:
    """One base ``tr(p, q - l)`` of the extended family and its brackets."""

    shift: int
    base: Diagram
    claimed_nu: int
    staircase: list[NamedDeformation]

    @property
    def m(self) -> int:
        return gcd(self.base.x_intercept, self.base.y_intercept)


@dataclass
class ExtendedFamily:
    params: SQHParams
    steps: list[FamilyStep] = field(default_factory=list)

    def stitching_checks(self) -> list[tuple[str, bool]]:
        """Overlap predicates between consecutive steps.

        ``first[l]``: ``nu(step l) - m_l >= nu(step l+1)``.
        ``eqPomocNewton2[l]``: step l+1 resumes, after its own top gap, no
        lower than the last value step l covers.  The second predicate is
        only asserted inside one residue run; at the ``q = -1 mod p``
        hand-off see :meth:`skipped_values`.
        """
        p = self.params.p
        out = []
        for s, t in zip(self.steps, self.steps[1:]):
            nu_s, nu_t = s.claimed_nu, t.claimed_nu
            out.append((f"first[l={s.shift}]", nu_s - s.m >= nu_t))
            r_s = s.base.y_intercept % p
            if r_s != p - 1:
                out.append((f"eqPomocNewton2[l={s.shift}]", nu_t - t.m >= nu_s - r_s * (p - r_s)))
        return out

    def covered_runs(self) -> list[tuple[int, int]]:
        """Inclusive ``(low, high)`` runs each step covers below its first jump."""
        p = self.params.p
        runs = []
        for s in self.steps:
            r_s = s.base.y_intercept % p
            runs.append((s.claimed_nu - r_s * (p - r_s), s.claimed_nu - s.m))
        return runs

    def skipped_values(self) -> list[int]:
        """Values between the last step's floor and ``nu - m`` that no run covers.

        Step tops ``nu(tr(p, q - l))`` count as covered (the base itself).
        """
        runs = self.covered_runs()
        tops = {s.claimed_nu for s in self.steps}
        low = min(lo for lo, _ in runs)
        high = runs[0][1]
        return [v for v in range(low, high + 1)
                if v not in tops and not any(lo <= v <= hi for lo, hi in runs)]


def extended_family(params: SQHParams) -> ExtendedFamily:
    """Bases ``tr(p, q), tr(p, q - 1), ...`` down to residue 1, with staircases.

    For ``q = -1 mod p`` the first base stands alone and the rest is the
    family of ``(p, q - 1)``.
    """
    p, q, r = params.p, params.q, params.r
    if p <= 4:
        raise ValueError(f"extended family needs p > 4, got {p}")
    if r == 0:
        raise ValueError(f"extended family needs r > 0, got q={q} = 0 mod {p}")
    fam = ExtendedFamily(params)
    shift0 = 0
    if r == p - 1:
        fam.steps.append(FamilyStep(0, triangle(p, q), nu_tr(p, q), staircase_brackets(params)))
        shift0 = 1
        q, r = q - 1, r - 1
    for l in range(0, r):
        sub = SQHParams(p, q - l)
        claimed = nu_tr(p, params.q) - (shift0 + l) * (p - 1)
        fam.steps.append(FamilyStep(shift0 + l, triangle(p, q - l), claimed, staircase_brackets(sub)))
    return fam


def pkp_family(p: int, k: int, kappa: int) -> list[NamedDeformation]:
    """Deformations of ``tr(p, kp)``, ``p >= 5``, at level ``kappa``.

    * ``pkp-first[kappa]``: ``tr(p, kappa p - 1)``, jump ``p - 1`` below ``tr(p, kappa p)``;
    * ``eq-4.1[i,kappa]``: ``tr(2, p + 2 kappa) + tr(i - 2, (i - 2) kappa) + tr(p - i, kappa (p - i) - 1)``,
      Newton number ``nu(tr(p, kappa p)) - (i - 1)``, for ``kappa < k``;
    * ``pkp-extra``: ``tr(2, p + 6) + tr(p - 2, p - 4)`` at ``kappa = 1``, value ``nu(tr(p, p - 1)) + 1``;
    * ``pkp-2p-1[kappa]``: ``tr(2, 2 kappa + 3) + tr(p - 2, (p - 2) kappa - 2)``,
      value ``nu(tr(p, kappa p)) - (2p - 1)``, for ``kappa < k``.

    At ``kappa = 1`` the ``i = p - 1`` member of the second family ends in a
    horizontal ``tr(1, 0)`` and is skipped; ``pkp-extra`` takes its place.
    That chain reaches height ``2p + 2`` and so only fits under ``tr(p, kp)``
    for ``k >= 3``.
    """
    if p < 5:
        raise ValueError(f"pkp_family needs p >= 5, got {p}; see small_p_family")
    if k < 1 or not 1 <= kappa <= k:
        raise ValueError(f"need 1 <= kappa <= k, got kappa={kappa}, k={k}")
    base = triangle(p, k * p)
    top = nu_tr(p, kappa * p)
    out = [NamedDeformation(f"pkp-first[kappa={kappa}]", triangle(p, kappa * p - 1), top - (p - 1), base)]
    if kappa < k:
        last_i = p - 1 if kappa >= 2 else p - 2
        for i in range(2, last_i + 1):
            terms = _terms((1, 2, p + 2 * kappa), (1, i - 2, (i - 2) * kappa), (1, p - i, kappa * (p - i) - 1))
            out.append(NamedDeformation(f"eq-4.1[i={i},kappa={kappa}]", convex_chain(terms), top - (i - 1), base))
        terms = _terms((1, 2, 2 * kappa + 3), (1, p - 2, (p - 2) * kappa - 2))
        out.append(NamedDeformation(f"pkp-2p-1[kappa={kappa}]", convex_chain(terms), top - (2 * p - 1), base))
    if kappa == 1 and k >= 3:
        terms = _terms((1, 2, p + 6), (1, p - 2, p - 4))
        out.append(NamedDeformation("pkp-extra", convex_chain(terms), nu_tr(p, p - 1) + 1, base))
    _check_all(out)
    return out


def _check_all(items: Sequence[NamedDeformation]) -> None:
    for it in items:
        if not is_deformation_of(it.diagram, it.base):
            raise ValueError(f"{it.label}: {it.diagram} is not a deformation of {it.base}")


def _keep_valid(candidates: Sequence[NamedDeformation], dropped: Optional[list]) -> list[NamedDeformation]:
    kept = []
    for c in candidates:
        issues = c.problems()
        if issues:
            for msg in issues:
                log.warning("dropping catalog entry: %s", msg)
            if dropped is not None:
                dropped.append(c)
        else:
            kept.append(c)
    return kept


def small_p_family(p: int, k: int, kappa: Optional[int] = None, dropped: Optional[list] = None) -> list[NamedDeformation]:
    """The explicit catalog for ``tr(p, kp)``, ``p`` in ``{2, 3, 4}``, ``k >= 2``.

    ``p = 2`` ignores ``kappa``.  For ``p = 3, 4`` the bullets are produced
    for one ``2 <= kappa <= k``.  Entries whose computed data contradict
    the catalog are logged, appended to ``dropped`` and left out.
    """
    if p not in (2, 3, 4):
        raise ValueError(f"small_p_family covers p = 2, 3, 4, got {p}")
    if k < 2:
        raise ValueError(f"small_p_family needs k >= 2, got {k}")
    base = triangle(p, k * p)
    if p == 2:
        top = nu_tr(2, 2 * k)
        return [NamedDeformation(f"p2[i={i}]", triangle(2, 2 * k - i), top - i, base) for i in range(1, 2 * k - 1)]
    if kappa is None or not 2 <= kappa <= k:
        raise ValueError(f"need 2 <= kappa <= k, got kappa={kappa}, k={k}")
    first = NamedDeformation(f"p{p}-first", triangle(p, p * k - 1), nu_tr(p, p * k) - (p - 1), base)
    nu1 = nu_tr(p, p * kappa - 1)
    K = kappa
    cands = [first]
    if p == 3:
        for i in range(0, 3):
            terms = _terms((i, 1, K), (1, 3 - i, K * (3 - i) - 1))
            cands.append(NamedDeformation(f"p3-bullet-1[i={i},kappa={K}]", convex_chain(terms), nu1 - i, base))
        cands.append(NamedDeformation(f"p3-bullet-2[kappa={K}]", convex_chain(_terms((1, 2, 2 * K - 1), (1, 1, K - 1))), nu1 - 3, base))
        cands.append(NamedDeformation(f"p3-bullet-3[kappa={K}]", triangle(3, 3 * K - 3), nu1 - 4, base))
        cands.append(NamedDeformation(f"p3-bullet-4[kappa={K}]", convex_chain(_terms((1, 2, 2 * K + 1), (1, 1, K - 2))), nu1 - 5, base))
        if K == 2:
            cands.append(NamedDeformation("p3-bullet-4-alt", triangle(2, 4), nu1 - 5, base))
        return _keep_valid(cands, dropped)
    nu0 = nu_tr(4, 4 * (K - 1))
    for i in range(0, 4):
        terms = _terms((i, 1, K), (1, 4 - i, (4 - i) * K - 1))
        cands.append(NamedDeformation(f"p4-bullet-1[i={i},kappa={K}]", convex_chain(terms), nu1 - i, base))
    for i in range(0, 3):
        terms = _terms((i, 1, K), (1, 3 - i, (3 - i) * K - 1), (1, 1, K - 1))
        cands.append(NamedDeformation(f"p4-bullet-2[i={i},kappa={K}]", convex_chain(terms), nu1 - 5 - i, base))
    for i in range(0, 2):
        terms = _terms((i, 1, K), (1, 2 - i, (2 - i) * K - 1), (1, 2, 2 * K - 2))
        cands.append(NamedDeformation(f"p4-bullet-3[i={i},kappa={K}]", convex_chain(terms), nu1 - 8 - i, base))
    for i in (1, 2):
        terms = _terms((1, 2, 2 * K + 3 - i), (1, 2, 2 * K - 3))
        cands.append(NamedDeformation(f"p4-bullet-4[i={i},kappa={K}]", convex_chain(terms), nu0 - i, base))
    if K > 2:
        terms = _terms((1, 2, 2 * K + 1), (1, 2, 2 * K - 4))
        cands.append(NamedDeformation(f"p4-bullet-5[kappa={K}]", convex_chain(terms), nu0 - 7, base))
    else:
        cands.append(NamedDeformation("p4-bullet-5[kappa=2]", triangle(2, 3), nu0 - 7, base))
    if k == 2:
        cands.append(NamedDeformation("p4-k2-extra", triangle(3, 8), nu_tr(4, 8) - 7, base))
    return _keep_valid(cands, dropped)


FAMILY_LABELS = ("eq-3.1", "staircase", "extended", "pkp", "small-p")
