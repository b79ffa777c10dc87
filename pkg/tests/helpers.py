"""Independent oracles used by the tests.

None of these call into the code paths they check.
"""

from math import gcd


def strictly_below(chain, x, y):
    """(x, y) lies strictly below the polyline ``chain`` (vertex tuples, x increasing)."""
    for (x1, y1), (x2, y2) in zip(chain, chain[1:]):
        if x1 <= x <= x2:
            # y < y1 + (y2 - y1)(x - x1)/(x2 - x1)
            return y * (x2 - x1) < y1 * (x2 - x1) + (y2 - y1) * (x - x1)
    return False


def pick_newton_number(chain):
    """Newton number by Pick's theorem: 2 * (interior points) + (lattice segments) - 1."""
    a, b = chain[-1][0], chain[0][1]
    interior = sum(1 for x in range(1, a) for y in range(1, b) if strictly_below(chain, x, y))
    lattice_segments = sum(gcd(x2 - x1, y1 - y2) for (x1, y1), (x2, y2) in zip(chain, chain[1:]))
    return 2 * interior + lattice_segments - 1


def pick_twice_area(chain):
    """2S = 2I + B - 2 for the polygon bounded by the axes and ``chain``."""
    a, b = chain[-1][0], chain[0][1]
    if a == 0 or b == 0:
        return 0
    interior = sum(1 for x in range(1, a) for y in range(1, b) if strictly_below(chain, x, y))
    boundary = a + b + sum(gcd(x2 - x1, y1 - y2) for (x1, y1), (x2, y2) in zip(chain, chain[1:]))
    return 2 * interior + boundary - 2


def brute_force_eea(a0, b0):
    """Every pair sequence satisfying the stated constraints, by exhaustive search.

    Constraints: non-negative a_j, b_j >= 1 strictly decreasing except the
    final step may keep b = 1, unit determinants alternating in sign with the
    last one equal to +1, terminal pair (0, 1), and b0 >= 2 b1.
    """
    found = []

    def rec(seq, dets):
        a, b = seq[-1]
        if (a, b) == (0, 1) and len(seq) > 1:
            if dets[-1] == 1 and all(d1 == -d2 for d1, d2 in zip(dets, dets[1:])):
                found.append(tuple(seq[1:]))
            return
        for nb in range(1, b + 1):
            for na in range(0, a + 1):
                if nb == b and (na, nb) != (0, 1):
                    continue
                if len(seq) == 1 and b0 > 1 and 2 * nb > b0:
                    continue
                d = a * nb - b * na
                if d not in (1, -1):
                    continue
                if dets and d != -dets[-1]:
                    continue
                rec(seq + [(na, nb)], dets + [d])

    rec([(a0, b0)], [])
    return found


def lattice_points_under(p, q):
    return [(x, y) for x in range(p + 1) for y in range(q + 1) if q * x + p * y <= p * q]
