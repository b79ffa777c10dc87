"""Newton diagrams as exact convex lattice chains.

A diagram is stored as its vertex list, left to right: x strictly
increasing, y strictly decreasing.  The region of a diagram is the chain
together with everything to the upper right of it (the support plus the
non-negative quadrant).  All arithmetic is on Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class LatticePoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class SegmentTerm:
    """``multiplicity * tr(dx, dy)``, i.e. the step ``(multiplicity*dx, -multiplicity*dy)``."""

    multiplicity: int
    dx: int
    dy: int

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError(f"multiplicity must be >= 1, got {self.multiplicity}")
        if self.dx < 1:
            raise ValueError(f"tr base must be >= 1, got {self.dx}")
        if self.dy < 0:
            raise ValueError(f"tr height must be >= 0, got {self.dy}")

    @property
    def step(self) -> tuple[int, int]:
        return self.multiplicity * self.dx, self.multiplicity * self.dy


def tr(dx: int, dy: int, multiplicity: int = 1) -> SegmentTerm:
    return SegmentTerm(multiplicity, dx, dy)


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True, order=True)
class Diagram:
    """A canonical Newton diagram.

    Build instances with :func:`diagram_from_vertices`, :func:`diagram_from_terms`
    or :func:`triangle`; the constructor only validates.
    """

    vertices: tuple[LatticePoint, ...]

    def __post_init__(self):
        vs = self.vertices
        if not vs:
            raise ValueError("a diagram needs at least one vertex")
        for v in vs:
            if v.x < 0 or v.y < 0:
                raise ValueError(f"vertex {tuple(v)} has a negative coordinate")
        for a, b in zip(vs, vs[1:]):
            if not (b.x > a.x and b.y < a.y):
                raise ValueError(f"vertices {tuple(a)}, {tuple(b)} are not left-to-right descending")
        for a, b, c in zip(vs, vs[1:], vs[2:]):
            if _cross(a, b, c) <= 0:
                raise ValueError(f"chain is not strictly convex at {tuple(b)}")

    @property
    def is_convenient(self) -> bool:
        return self.vertices[0].x == 0 and self.vertices[-1].y == 0

    @property
    def x_intercept(self) -> int:
        return self.vertices[-1].x

    @property
    def y_intercept(self) -> int:
        return self.vertices[0].y

    def segments(self):
        return list(zip(self.vertices, self.vertices[1:]))

    def contains(self, point) -> bool:
        """True if ``point`` lies in the region of this diagram (on or above the chain)."""
        px, py = point
        vs = self.vertices
        if px < vs[0].x or py < vs[-1].y:
            return False
        for a, b in zip(vs, vs[1:]):
            if _cross(a, b, (px, py)) < 0:
                return False
        return True

    def as_tuples(self) -> list[tuple[int, int]]:
        return [tuple(v) for v in self.vertices]

    def __str__(self) -> str:
        return " ".join(f"({v.x},{v.y})" for v in self.vertices)


def lower_hull(points: Iterable[Sequence[int]]) -> list[LatticePoint]:
    """Boundary chain of ``conv(points) + R^2_+``, left to right, without collinear points."""
    best: dict[int, int] = {}
    for x, y in points:
        if x < 0 or y < 0:
            raise ValueError(f"point {(x, y)} has a negative coordinate")
        if x not in best or y < best[x]:
            best[x] = y
    if not best:
        raise ValueError("cannot build a diagram from an empty point set")
    # Pareto-minimal points: y strictly decreasing as x increases.
    staircase = []
    for x in sorted(best):
        y = best[x]
        if not staircase or y < staircase[-1][1]:
            staircase.append((x, y))
    hull: list[tuple[int, int]] = []
    for pt in staircase:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return [LatticePoint(x, y) for x, y in hull]


def diagram_from_vertices(points: Iterable[Sequence[int]]) -> Diagram:
    """Canonical diagram spanned by ``points``.

    Points are sorted, dominated and collinear interior points are dropped,
    and for repeated x the lower y wins.

    >>> diagram_from_vertices([(4, 0), (0, 8), (1, 5)])
    Diagram(vertices=(LatticePoint(x=0, y=8), LatticePoint(x=1, y=5), LatticePoint(x=4, y=0)))
    """
    return Diagram(tuple(lower_hull(points)))


def triangle(p: int, q: int) -> Diagram:
    """``tr(p, q)`` with end points ``(0, q)`` and ``(p, 0)``."""
    if p < 1 or q < 1:
        raise ValueError(f"tr({p},{q}) needs p, q >= 1")
    return Diagram((LatticePoint(0, q), LatticePoint(p, 0)))


def expand_terms(anchor: Sequence[int], terms: Sequence[SegmentTerm], reversed: bool = False) -> list[tuple[int, int]]:
    """Vertex list of the chain ``anchor, anchor + step_1, ...`` with no normalization."""
    ordered = list(terms)[::-1] if reversed else list(terms)
    x, y = anchor
    pts = [(x, y)]
    for t in ordered:
        dx, dy = t.step
        x, y = x + dx, y - dy
        pts.append((x, y))
    return pts


def diagram_from_terms(anchor: Sequence[int], reversed: bool, terms: Sequence[SegmentTerm]) -> Diagram:
    """Diagram of the chain ``(-1)^s (t_1 + ... + t_l)`` with top-left end point ``anchor``.

    ``reversed`` plays the role of the sign: the terms are then laid down in
    the opposite order so the stored chain is always steepest first.  Terms
    of equal slope that meet are merged.  A horizontal last term is kept in
    the expansion but removed by canonicalization, since its far end point is
    dominated.
    """
    terms = list(terms)
    if not terms:
        raise ValueError("at least one term is required")
    ordered = terms[::-1] if reversed else terms
    for t1, t2 in zip(ordered, ordered[1:]):
        # steepness dy/dx must strictly decrease unless the slopes coincide
        if t1.dy * t2.dx < t2.dy * t1.dx:
            raise ValueError(
                f"non-convex term sequence: tr({t1.dx},{t1.dy}) followed by steeper tr({t2.dx},{t2.dy})"
            )
    pts = expand_terms(anchor, ordered)
    for x, y in pts:
        if x < 0 or y < 0:
            raise ValueError(f"chain reaches {(x, y)} with a negative coordinate")
    return diagram_from_vertices(pts)


def twice_area_under(d: Diagram) -> int:
    """Twice the area enclosed by the axes and a convenient diagram (shoelace)."""
    if not d.is_convenient:
        raise ValueError(f"diagram {d} is not convenient")
    poly = [(0, 0), *d.vertices]
    total = 0
    for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
        total += x1 * y2 - x2 * y1
    # traversal (0,0) -> (0,b) -> ... -> (a,0) is clockwise
    return -total


def newton_number(d: Diagram) -> int:
    """Kouchnirenko number ``2S - a - b + 1`` of a convenient diagram with intercepts ``a, b >= 1``."""
    if not d.is_convenient:
        raise ValueError(f"diagram {d} is not convenient")
    a, b = d.x_intercept, d.y_intercept
    if a < 1 or b < 1:
        raise ValueError(f"diagram {d} must meet both axes away from the origin")
    return twice_area_under(d) - a - b + 1


def deform(d: Diagram, points: Iterable[Sequence[int]]) -> Diagram:
    """Boundary chain of ``conv(region(d) + points)``."""
    extra = [tuple(p) for p in points]
    if not extra:
        return d
    return diagram_from_vertices([*d.vertices, *extra])


def is_deformation_of(e: Diagram, d: Diagram) -> bool:
    """``d >= e``: every vertex of ``d`` lies in the region of ``e``."""
    return all(e.contains(v) for v in d.vertices)


@dataclass(frozen=True)
class DeformationOrderWitness:
    lower: Diagram
    upper: Diagram
    added_points: frozenset

    def __post_init__(self):
        if deform(self.upper, self.added_points) != self.lower:
            raise ValueError("lower is not the hull of upper and the added points")


def witness_order(lower: Diagram, upper: Diagram) -> DeformationOrderWitness:
    """Certificate that ``lower`` is a deformation of ``upper``, using the vertices of ``lower``."""
    if not is_deformation_of(lower, upper):
        raise ValueError(f"{lower} is not a deformation of {upper}")
    return DeformationOrderWitness(lower, upper, frozenset(lower.vertices))
