"""Brute-force attainable spectra of Newton diagrams.

The primary enumerator walks convex lattice chains vertex by vertex, from
the y-axis down to the x-axis, with strictly decreasing steepness.  Child
vertices are tried in ``(x, y)`` order, so chains come out in lexicographic
order of their vertex lists and the first chain seen for a Newton number is
the lexicographically smallest witness.

The cross-check enumerator never builds chains directly: it closes the base
under one-point hull deformations.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .constructions import SQHParams
from .geometry import Diagram, LatticePoint, deform, is_deformation_of, newton_number, triangle
from .predictor import ORACLE_ONLY, GapReport, predicted_report


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumerationConstraints:
    min_total_degree: int = 2
    require_convenient: bool = True
    min_nu: int = 1

    def __post_init__(self):
        if self.min_total_degree < 0:
            raise ValueError("min_total_degree must be >= 0")
        if not self.require_convenient:
            raise NotImplementedError("only convenient deformations are enumerated")


DEFAULT_CONSTRAINTS = EnumerationConstraints()


@dataclass(frozen=True)
class Budget:
    max_x: int = 12
    max_y: int = 14

    def check(self, base: Diagram) -> None:
        a, b = base.x_intercept, base.y_intercept
        if min(a, b) > self.max_x or max(a, b) > self.max_y:
            raise BudgetExceeded(
                f"base with intercepts ({a}, {b}) exceeds the enumeration budget "
                f"(smaller intercept <= {self.max_x}, larger <= {self.max_y})"
            )


DEFAULT_BUDGET = Budget()


@dataclass
class SpectrumResult:
    base: Diagram
    attainable: list[int]
    witnesses: dict[int, Diagram]
    constraints: EnumerationConstraints = DEFAULT_CONSTRAINTS
    chains_seen: int = 0


def _under_base(base: Diagram):
    """Highest admissible y at each x in ``0..a`` for points on or below the base chain."""
    vs = base.vertices
    a = base.x_intercept
    top = []
    for x in range(a + 1):
        for (x1, y1), (x2, y2) in zip(vs, vs[1:]):
            if x1 <= x <= x2:
                # floor of the chain height at x
                top.append((y1 * (x2 - x) + y2 * (x - x1)) // (x2 - x1))
                break
        else:
            top.append(vs[0].y)
    return top


class _Walker:
    """Depth-first convex chain enumeration under a convenient base."""

    def __init__(self, base: Diagram, c: EnumerationConstraints):
        if not base.is_convenient:
            raise ValueError(f"base {base} is not convenient")
        self.base = base
        self.c = c
        self.a = base.x_intercept
        self.top = _under_base(base)
        self.inner = [tuple(v) for v in base.vertices[1:-1]]

    def starts(self) -> list[int]:
        lo = max(1, self.c.min_total_degree)
        return list(range(lo, self.base.y_intercept + 1))

    def _keeps_base_above(self, x0, y0, x1, y1) -> bool:
        for vx, vy in self.inner:
            if x0 < vx < x1 and (x1 - x0) * (vy - y0) - (y1 - y0) * (vx - x0) < 0:
                return False
        return True

    def walk(self, y0: int) -> Iterator[tuple[tuple[tuple[int, int], ...], int]]:
        """Yield ``(vertices, nu)`` for every chain starting at ``(0, y0)``, lexicographically."""
        a, top, mind = self.a, self.top, self.c.min_total_degree
        path = [(0, y0)]

        def rec(x, y, pdx, pdy, acc):
            # acc = sum over segments of (y_i + y_{i+1})(x_{i+1} - x_i), i.e. twice the area so far
            for nx in range(x + 1, a + 1):
                dx = nx - x
                ylo = max(0, mind - nx)
                if pdx:
                    # strictly shallower than the previous step: (y - ny) * pdx < pdy * dx
                    ylo = max(ylo, y - (-(-pdy * dx // pdx)) + 1)
                yhi = min(y - 1, top[nx])
                for ny in range(ylo, yhi + 1):
                    if self.inner and not self._keeps_base_above(x, y, nx, ny):
                        continue
                    s = acc + (y + ny) * dx
                    path.append((nx, ny))
                    if ny == 0:
                        yield tuple(path), s - nx - y0 + 1
                    else:
                        yield from rec(nx, ny, dx, y - ny, s)
                    path.pop()

        if y0 < mind or y0 > top[0]:
            return
        yield from rec(0, y0, 0, 0, 0)


def _as_diagram(vertices) -> Diagram:
    return Diagram(tuple(LatticePoint(x, y) for x, y in vertices))


def enumerate_subdiagrams(base: Diagram, c: EnumerationConstraints = DEFAULT_CONSTRAINTS) -> Iterator[Diagram]:
    """Every convenient deformation of ``base`` with admissible vertices, once each, lexicographically."""
    w = _Walker(base, c)
    for y0 in w.starts():
        for verts, _ in w.walk(y0):
            yield _as_diagram(verts)


def _spectrum_part(base: Diagram, c: EnumerationConstraints, y0s: Sequence[int]):
    w = _Walker(base, c)
    first: dict[int, tuple] = {}
    count = 0
    for y0 in y0s:
        for verts, nu in w.walk(y0):
            count += 1
            if nu not in first:
                first[nu] = verts
    return first, count


def spectrum_of(base: Diagram, c: EnumerationConstraints = DEFAULT_CONSTRAINTS,
                budget: Optional[Budget] = DEFAULT_BUDGET, jobs: int = 1) -> SpectrumResult:
    """Exact attainable Newton numbers of ``base`` with the lexicographically smallest witness for each."""
    if budget is not None:
        budget.check(base)
    w = _Walker(base, c)
    starts = w.starts()
    if jobs > 1 and len(starts) > 1:
        chunks = [starts[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_spectrum_part, [base] * len(chunks), [c] * len(chunks), chunks))
    else:
        parts = [_spectrum_part(base, c, starts)]
    best: dict[int, tuple] = {}
    total = 0
    for first, count in parts:
        total += count
        for nu, verts in first.items():
            if nu not in best or verts < best[nu]:
                best[nu] = verts
    values = sorted(v for v in best if v >= c.min_nu)
    return SpectrumResult(base, values, {v: _as_diagram(best[v]) for v in values}, c, total)


def attainable_spectrum(p: int, q: int, c: EnumerationConstraints = DEFAULT_CONSTRAINTS,
                        budget: Optional[Budget] = DEFAULT_BUDGET, jobs: int = 1) -> SpectrumResult:
    """Spectrum of ``tr(p, q)``."""
    if p < 2 or q < p:
        raise ValueError(f"need 2 <= p <= q, got p={p}, q={q}")
    return spectrum_of(triangle(p, q), c, budget, jobs)


def find_witness(base: Diagram, target_nu: int, c: EnumerationConstraints = DEFAULT_CONSTRAINTS,
                 budget: Optional[Budget] = DEFAULT_BUDGET) -> Optional[Diagram]:
    """First enumerated deformation of ``base`` with Newton number ``target_nu``, or None."""
    if budget is not None:
        budget.check(base)
    w = _Walker(base, c)
    for y0 in w.starts():
        for verts, nu in w.walk(y0):
            if nu == target_nu:
                return _as_diagram(verts)
    return None


def admissible_points(base: Diagram, c: EnumerationConstraints = DEFAULT_CONSTRAINTS) -> list[tuple[int, int]]:
    """Lattice points of the bounding box of a convenient base that can change it.

    Points inside the base region (other than on the chain) leave every hull
    unchanged, so only the degree bound and the box are applied here.
    """
    a, b = base.x_intercept, base.y_intercept
    return [(x, y) for x in range(a + 1) for y in range(b + 1)
            if x + y >= c.min_total_degree and (not base.contains((x, y)) or _on_chain(base, (x, y)))]


def _on_chain(d: Diagram, pt) -> bool:
    return any(
        (b.x - a.x) * (pt[1] - a.y) == (b.y - a.y) * (pt[0] - a.x) and a.x <= pt[0] <= b.x
        for a, b in d.segments()
    ) or tuple(pt) in {tuple(v) for v in d.vertices}


def _admissible_diagram(d: Diagram, c: EnumerationConstraints) -> bool:
    return (d.x_intercept >= 1 and d.y_intercept >= 1
            and all(v.x + v.y >= c.min_total_degree for v in d.vertices))


def hull_closure_deformations(base: Diagram, c: EnumerationConstraints = DEFAULT_CONSTRAINTS) -> set[Diagram]:
    """All ``deform(base, P)`` for admissible point sets ``P``.

    Any such hull is reached by adding its vertices one at a time, so the
    closure of ``{base}`` under one-point deformations is the full set.
    Hulls through the origin have no Newton number and are left out, as are
    hulls keeping a base vertex below the degree bound.
    """
    if not base.is_convenient:
        raise ValueError(f"base {base} is not convenient")
    pts = admissible_points(base, c)
    seen = {base}
    todo = [base]
    while todo:
        d = todo.pop()
        for pt in pts:
            if d.contains(pt):
                continue
            e = deform(d, [pt])
            if e not in seen:
                seen.add(e)
                todo.append(e)
    return {d for d in seen if _admissible_diagram(d, c)}


def subset_hull_deformations(base: Diagram, c: EnumerationConstraints = DEFAULT_CONSTRAINTS,
                             max_points: int = 18) -> set[Diagram]:
    """Literal ``deform(base, S)`` over every subset ``S`` of admissible points; tiny bases only."""
    pts = admissible_points(base, c)
    if len(pts) > max_points:
        raise BudgetExceeded(f"{len(pts)} admissible points, subset enumeration capped at {max_points}")
    out = set()
    for size in range(len(pts) + 1):
        for sub in itertools.combinations(pts, size):
            d = deform(base, sub)
            if _admissible_diagram(d, c):
                out.add(d)
    return out


@dataclass
class VerificationReport:
    params: SQHParams
    predicted: GapReport
    observed: SpectrumResult
    missing_guaranteed: set[int] = field(default_factory=set)
    closed_gaps: set[int] = field(default_factory=set)
    status: str = "pass"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def observed_gaps(self) -> set[int]:
        seen = set(self.observed.attainable)
        return {v for v in range(1, self.predicted.mu + 1) if v not in seen}


def verify(p: int, q: int, c: EnumerationConstraints = DEFAULT_CONSTRAINTS,
           budget: Optional[Budget] = DEFAULT_BUDGET, jobs: int = 1) -> VerificationReport:
    """Compare the predicted gaps of ``(p, q)`` with the exhaustive spectrum of ``tr(p, q)``."""
    predicted = predicted_report(p, q)
    observed = attainable_spectrum(p, q, c, budget, jobs)
    seen = set(observed.attainable)
    missing = predicted.guaranteed_values() - seen
    closed = predicted.gap_values & seen
    bad_closed = closed & predicted.definitive_gaps
    status = "pass" if not missing and not bad_closed else "fail"
    if predicted.applicability == ORACLE_ONLY:
        status = "pass"
    return VerificationReport(SQHParams(p, q), predicted, observed, missing, closed, status)


def check_witnesses(result: SpectrumResult) -> list[str]:
    out = []
    for nu, d in result.witnesses.items():
        if newton_number(d) != nu:
            out.append(f"witness for {nu} has Newton number {newton_number(d)}")
        if not is_deformation_of(d, result.base):
            out.append(f"witness for {nu} is not a deformation of the base")
    return out
