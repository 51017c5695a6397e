"""Expression trees for banded links built from the unknot.

Every link of zero simplicial volume is reachable from the 0-framed unknot
by cabling, framing twists, and connected sums, so the input language is
the little grammar

    expr := "unknot"
          | "cable" "(" r "," s ";" i ";" expr ")"
          | "twist" "(" f ";" i ";" expr ")"
          | "connsum" "(" expr "," i ";" expr "," j ")"

with integers r, f, positive integers s, i, j, and 1-based component
indices.  Whitespace is ignored everywhere.

Component bookkeeping: (r,s)-cabling component i replaces it with
g = gcd(|r|, s) cable components (gcd(0, s) = s).  Numbering the s cable
strands 0..s-1, strands land in the same component exactly when their
numbers agree mod g, and the g new components sit at positions
i..i+g-1 in residue order, shifting later components up by g-1.  A
connected sum joins component i of the left factor to component j of the
right factor; the merged component keeps position i, and the remaining
right components follow after all left components in their original order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "BadCableParams",
    "BadComponentIndex",
    "Cable",
    "ColorArityMismatch",
    "ConnSum",
    "ExprSyntaxError",
    "LinkExpr",
    "NonPositiveColor",
    "Twist",
    "Unknot",
    "cable_gcd",
    "component_count",
    "mirror_expr",
    "parse",
    "to_text",
    "validate_colors",
]


class ExprSyntaxError(ValueError):
    """Malformed expression text; carries the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class BadComponentIndex(ValueError):
    pass


class BadCableParams(ValueError):
    pass


class ColorArityMismatch(ValueError):
    pass


class NonPositiveColor(ValueError):
    pass


def cable_gcd(r: int, s: int) -> int:
    """Number of components of the closed (r,s)-torus braid; gcd(0, s) = s."""
    return math.gcd(abs(r), s)


@dataclass(frozen=True)
class Unknot:
    def __str__(self) -> str:
        return "unknot"


@dataclass(frozen=True)
class Cable:
    """(i; r, s)-cabling: component i is replaced by the closed torus braid."""

    child: "LinkExpr"
    i: int
    r: int
    s: int

    def __post_init__(self):
        if self.s < 1:
            raise BadCableParams(f"cable strand count must be >= 1, got {self.s}")
        _check_index(self.i, self.child)

    def __str__(self) -> str:
        return f"cable({self.r},{self.s};{self.i};{self.child})"


@dataclass(frozen=True)
class Twist:
    """Framing change by f full twists on component i."""

    child: "LinkExpr"
    i: int
    f: int

    def __post_init__(self):
        _check_index(self.i, self.child)

    def __str__(self) -> str:
        return f"twist({self.f};{self.i};{self.child})"


@dataclass(frozen=True)
class ConnSum:
    """Connected sum joining component i of left to component j of right."""

    left: "LinkExpr"
    i: int
    right: "LinkExpr"
    j: int

    def __post_init__(self):
        _check_index(self.i, self.left)
        _check_index(self.j, self.right)

    def __str__(self) -> str:
        return f"connsum({self.left},{self.i};{self.right},{self.j})"


LinkExpr = Unknot | Cable | Twist | ConnSum


def _check_index(i: int, child: "LinkExpr"):
    c = component_count(child)
    if not 1 <= i <= c:
        raise BadComponentIndex(
            f"component index {i} out of range 1..{c}")


def component_count(e: LinkExpr) -> int:
    if isinstance(e, Unknot):
        return 1
    if isinstance(e, Cable):
        return component_count(e.child) + cable_gcd(e.r, e.s) - 1
    if isinstance(e, Twist):
        return component_count(e.child)
    if isinstance(e, ConnSum):
        return component_count(e.left) + component_count(e.right) - 1
    raise TypeError(f"not a link expression: {e!r}")


def mirror_expr(e: LinkExpr) -> LinkExpr:
    """Mirror image: negate every cabling winding r and every twist f."""
    if isinstance(e, Unknot):
        return e
    if isinstance(e, Cable):
        return Cable(mirror_expr(e.child), e.i, -e.r, e.s)
    if isinstance(e, Twist):
        return Twist(mirror_expr(e.child), e.i, -e.f)
    if isinstance(e, ConnSum):
        return ConnSum(mirror_expr(e.left), e.i, mirror_expr(e.right), e.j)
    raise TypeError(f"not a link expression: {e!r}")


def validate_colors(e: LinkExpr, colors: Sequence[int]) -> None:
    """Check one positive color per component; raise otherwise."""
    colors = tuple(colors)
    c = component_count(e)
    if len(colors) != c:
        raise ColorArityMismatch(
            f"expression has {c} components but {len(colors)} colors given")
    for n in colors:
        if not isinstance(n, int) or n < 1:
            raise NonPositiveColor(f"colors must be positive integers, got {n!r}")


def to_text(e: LinkExpr) -> str:
    """Canonical textual form; parse(to_text(e)) == e."""
    return str(e)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self._skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise ExprSyntaxError(f"expected '{ch}'", self.pos)
        self.pos += 1

    def word(self) -> str:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if self.pos == start:
            raise ExprSyntaxError("expected a keyword", start)
        return self.text[start: self.pos]

    def integer(self) -> int:
        self._skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise ExprSyntaxError("expected an integer", start)
        return int(self.text[start: self.pos])

    def posint(self, what: str) -> int:
        self._skip_ws()
        start = self.pos
        n = self.integer()
        if n < 1:
            raise ExprSyntaxError(f"{what} must be positive", start)
        return n

    def expr(self) -> LinkExpr:
        self._skip_ws()
        start = self.pos
        kw = self.word()
        if kw == "unknot":
            return Unknot()
        if kw == "cable":
            self.expect("(")
            r = self.integer()
            self.expect(",")
            self._skip_ws()
            spos = self.pos
            s = self.integer()
            if s < 1:
                raise BadCableParams(
                    f"cable strand count must be >= 1, got {s} (at position {spos})")
            self.expect(";")
            i = self.posint("component index")
            self.expect(";")
            child = self.expr()
            self.expect(")")
            return Cable(child, i, r, s)
        if kw == "twist":
            self.expect("(")
            f = self.integer()
            self.expect(";")
            i = self.posint("component index")
            self.expect(";")
            child = self.expr()
            self.expect(")")
            return Twist(child, i, f)
        if kw == "connsum":
            self.expect("(")
            left = self.expr()
            self.expect(",")
            i = self.posint("component index")
            self.expect(";")
            right = self.expr()
            self.expect(",")
            j = self.posint("component index")
            self.expect(")")
            return ConnSum(left, i, right, j)
        raise ExprSyntaxError(f"unknown keyword '{kw}'", start)


def parse(text: str) -> LinkExpr:
    """Parse expression text into a validated tree.

    Raises ExprSyntaxError with a position on malformed text,
    BadComponentIndex on an out-of-range component, and BadCableParams on
    a non-positive strand count.
    """
    p = _Parser(text)
    e = p.expr()
    p._skip_ws()
    if p.pos != len(text):
        raise ExprSyntaxError("trailing input", p.pos)
    return e
