"""Text form of diagrams.

Two spellings are accepted::

    (0,8) (1,5) (4,0)                 vertex form
    - 2*tr(1,3) + tr(2,2) @ (0,8)     term form; a leading minus lays the terms in reverse

Whitespace is ignored everywhere.
"""

from __future__ import annotations

import re
from math import gcd

from .geometry import Diagram, SegmentTerm, diagram_from_terms, diagram_from_vertices


class DiagramSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.position = position
        self.text = text


class DiagramSemanticError(ValueError):
    def __init__(self, message: str, term: str = ""):
        super().__init__(message)
        self.term = term


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<tr>tr)|(?P<sym>[-−+*@(),]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise DiagramSyntaxError(f"unexpected character {text[start]!r}", start, text)
        kind = m.lastgroup
        value = m.group(kind)
        if value == "−":
            value = "-"
        tokens.append((kind, value, m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, value: str | None = None, kind: str | None = None):
        tok = self.tokens[self.i]
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = repr(value) if value is not None else kind
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise DiagramSyntaxError(f"expected {want}, got {got}", tok[2], self.text)
        self.i += 1
        return tok

    def integer(self) -> int:
        return int(self.take(kind="int")[1])

    def point(self) -> tuple[int, int]:
        self.take("(")
        x = self.integer()
        self.take(",")
        y = self.integer()
        self.take(")")
        return x, y

    def term(self) -> tuple[SegmentTerm, str, int]:
        start = self.peek()[2]
        mult = 1
        if self.peek()[0] == "int":
            mult = self.integer()
            self.take("*")
        self.take(kind="tr")
        self.take("(")
        dx = self.integer()
        self.take(",")
        dy = self.integer()
        end_tok = self.take(")")
        source = self.text[start:end_tok[2] + 1]
        try:
            t = SegmentTerm(mult, dx, dy)
        except ValueError as exc:
            raise DiagramSemanticError(f"{exc} in term {source!r}", source) from None
        return t, source, start

    def parse(self) -> Diagram:
        kind, value, _ = self.peek()
        if value == "(":
            pts = [self.point()]
            while self.peek()[1] == "(":
                pts.append(self.point())
            self.take(kind="end")
            return diagram_from_vertices(pts)
        reversed_ = False
        if value == "-":
            self.take("-")
            reversed_ = True
        terms = [self.term()]
        while self.peek()[1] == "+":
            self.take("+")
            terms.append(self.term())
        self.take("@")
        anchor = self.point()
        self.take(kind="end")
        ordered = terms[::-1] if reversed_ else terms
        for (t1, _, _), (t2, src, _) in zip(ordered, ordered[1:]):
            if t1.dy * t2.dx < t2.dy * t1.dx:
                raise DiagramSemanticError(f"non-convex chain: {src!r} is steeper than the term before it", src)
        try:
            return diagram_from_terms(anchor, reversed_, [t for t, _, _ in terms])
        except ValueError as exc:
            raise DiagramSemanticError(str(exc)) from None


def parse_diagram(spec: str) -> Diagram:
    """Parse vertex or term form.

    >>> str(parse_diagram("2*tr(1,3) + tr(2,2) @ (0,8)"))
    '(0,8) (2,2) (4,0)'
    """
    return _Parser(spec).parse()


def render_vertices(d: Diagram) -> str:
    return str(d)


def render_terms(d: Diagram) -> str:
    """Term form with each segment written as ``n*tr(dx,dy)`` for its lattice length ``n``."""
    if len(d.vertices) == 1:
        return render_vertices(d)
    parts = []
    for a, b in d.segments():
        dx, dy = b.x - a.x, a.y - b.y
        n = gcd(dx, dy)
        parts.append(f"tr({dx},{dy})" if n == 1 else f"{n}*tr({dx // n},{dy // n})")
    v = d.vertices[0]
    return " + ".join(parts) + f" @ ({v.x},{v.y})"
