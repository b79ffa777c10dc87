"""Extended-Euclid pair sequences.

For coprime ``(a0, b0)`` the sequence ``(a_j, b_j)``, ``j = 1..l``, has unit
determinants ``a_{j-1} b_j - b_{j-1} a_j = (-1)**(l - j)``, strictly
decreasing ``b_j`` (except possibly the last step ``(1, 1) -> (0, 1)``),
ends at ``(0, 1)`` and satisfies ``b0 >= 2 b1``.

Each step is forced: given ``(a, b)`` and the sign ``eps`` of the next
determinant, ``b'`` is the residue of ``eps * a^{-1}`` modulo ``b``.  Only the
first sign is free, and ``b0 >= 2 b1`` picks it.  The result is the list of
continued-fraction convergents of ``a0 / b0`` in decreasing order.  The one
tie, ``(1, 2)``, also admits ``(1, 1), (0, 1)`` from the expansion
``[0; 1, 1]``; the standard expansion wins.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional


@dataclass(frozen=True)
class EEASequence:
    a0: int
    b0: int
    pairs: tuple[tuple[int, int], ...]
    N: Optional[int] = None
    n: Optional[int] = None

    @property
    def l(self) -> int:
        return len(self.pairs)

    def pair(self, j: int) -> tuple[int, int]:
        """``(a_j, b_j)`` with ``(a_0, b_0)`` at index 0."""
        if j == 0:
            return self.a0, self.b0
        return self.pairs[j - 1]

    def determinant(self, j: int) -> int:
        """``a_{j-1} b_j - b_{j-1} a_j`` for ``1 <= j <= l``."""
        if not 1 <= j <= self.l:
            raise IndexError(f"determinant index {j} outside 1..{self.l}")
        (a, b), (c, d) = self.pair(j - 1), self.pair(j)
        return a * d - b * c


def _step(a: int, b: int, eps: int) -> Optional[tuple[int, int]]:
    if b == 1:
        # only (1, 1) -> (0, 1) with eps = +1 is admissible
        return (0, 1) if a == 1 and eps == 1 else None
    b_next = (eps * pow(a, -1, b)) % b
    a_next, rem = divmod(a * b_next - eps, b)
    if rem or a_next < 0:
        return None
    return a_next, b_next


def _walk(a0: int, b0: int, pair1: tuple[int, int], eps1: int) -> Optional[list[tuple[int, int]]]:
    pairs = [pair1]
    eps = -eps1
    while pairs[-1] != (0, 1):
        nxt = _step(*pairs[-1], eps)
        if nxt is None:
            return None
        pairs.append(nxt)
        eps = -eps
    # the last determinant is a_{l-1} * 1 - b_{l-1} * 0 = +1, so eps must have flipped an odd number of times
    if -eps != 1:
        return None
    return pairs


def _first_pairs(a0: int, b0: int):
    if b0 == 1:
        if a0 == 1:
            yield (0, 1), 1
        return
    for eps in (1, -1):
        b1 = (eps * pow(a0, -1, b0)) % b0
        a1, rem = divmod(a0 * b1 - eps, b0)
        if not rem and a1 >= 0:
            yield (a1, b1), eps


def eea_sequence(a0: int, b0: int) -> EEASequence:
    """The unique pair sequence for coprime ``(a0, b0)``.

    >>> eea_sequence(2, 5).pairs
    ((1, 2), (0, 1))
    """
    if a0 < 1 or b0 < 1:
        raise ValueError(f"a0 and b0 must be positive, got {(a0, b0)}")
    if gcd(a0, b0) != 1:
        raise ValueError(f"{(a0, b0)} are not coprime")
    found = None
    for pair1, eps1 in _first_pairs(a0, b0):
        if b0 != 1 and 2 * pair1[1] > b0:
            continue
        pairs = _walk(a0, b0, pair1, eps1)
        if pairs is not None:
            found = pairs
            break
    if found is None:
        raise ValueError(f"no admissible pair sequence for {(a0, b0)}")
    N = n = None
    if len(found) >= 2:
        N, n = _solve_Nn(a0, b0, found[0], found[1])
    seq = EEASequence(a0, b0, tuple(found), N, n)
    validate(seq)
    return seq


def _solve_Nn(a0, b0, first, second) -> tuple[int, int]:
    (a1, b1), (a2, b2) = first, second
    det = a1 * b2 - b1 * a2
    # Cramer's rule, det = +-1
    N = (a0 * b2 - b0 * a2) * det
    n = (a1 * b0 - b1 * a0) * det
    return N, n


def validate(seq: EEASequence) -> None:
    """Raise ``ValueError`` unless every sequence invariant holds."""
    a0, b0, l = seq.a0, seq.b0, seq.l
    if gcd(a0, b0) != 1:
        raise ValueError("a0, b0 not coprime")
    if l < 1 or seq.pairs[-1] != (0, 1):
        raise ValueError("sequence must end at (0, 1)")
    for j in range(1, l + 1):
        a, b = seq.pair(j)
        if a < 0 or b < 1:
            raise ValueError(f"pair {j} = {(a, b)} out of range")
        prev_a, prev_b = seq.pair(j - 1)
        if a > prev_a:
            raise ValueError(f"a_{j} = {a} increases")
        if b > prev_b or (b == prev_b and j < l):
            raise ValueError(f"b_{j} = {b} does not decrease")
        if seq.determinant(j) != (-1) ** (l - j):
            raise ValueError(f"determinant at {j} is {seq.determinant(j)}, expected {(-1) ** (l - j)}")
    if l >= 2 or b0 > 1:
        if b0 < 2 * seq.pairs[0][1]:
            raise ValueError("b0 / b1 < 2")
    if l >= 2:
        (a1, b1), (a2, b2) = seq.pairs[0], seq.pairs[1]
        if seq.N is None or seq.n is None or seq.N < 1 or seq.n < 1:
            raise ValueError(f"(N, n) = {(seq.N, seq.n)} not positive")
        if (seq.N * a1 + seq.n * a2, seq.N * b1 + seq.n * b2) != (a0, b0):
            raise ValueError("(N, n) does not reconstruct (a0, b0)")


def sign_of(seq: EEASequence, j: int) -> int:
    """``(-1)**(l - 1 - j)``; equals ``determinant(j + 1)`` for ``j < l``."""
    if not 0 <= j <= seq.l:
        raise IndexError(f"index {j} outside 0..{seq.l}")
    return 1 if (seq.l - 1 - j) % 2 == 0 else -1


def decompose_Nn(seq: EEASequence) -> tuple[int, int]:
    """``(N, n)`` with ``a0 = N a1 + n a2`` and ``b0 = N b1 + n b2``."""
    if seq.l < 2:
        raise ValueError(f"sequence for {(seq.a0, seq.b0)} has length {seq.l} < 2")
    return seq.N, seq.n


def coefficients_at(seq: EEASequence, i: int) -> tuple[int, int]:
    """``(N_i, n_i)`` with ``(a0, b0) = N_i (a_i, b_i) + n_i (a_{i+1}, b_{i+1})``."""
    if not 0 <= i < seq.l:
        raise IndexError(f"index {i} outside 0..{seq.l - 1}")
    return _solve_Nn(seq.a0, seq.b0, seq.pair(i), seq.pair(i + 1))
