"""Parser for the polynomial text grammar used by the CLI and the service.

Grammar: a sum of terms joined by '+'/'-' (optional leading sign); a term is
a coefficient, a coefficient optionally followed by '*' and an x-part, or a
bare x-part; a coefficient is an integer or integer '/' positive-integer; an
x-part is 'x' with an optional '^' nonnegative exponent.  Whitespace is
ignored everywhere.  Duplicate powers are summed.
"""

from __future__ import annotations

from fractions import Fraction

from polydecomp.polynomials import Poly


class ParseError(ValueError):
    """Syntax error with the 0-based offset of the offending character."""

    def __init__(self, offset: int, message: str) -> None:
        super().__init__(f"syntax error at offset {offset}: {message}")
        self.offset = offset


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def read_integer(self, what: str) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(start, f"expected {what}")
        return int(self.text[start : self.pos])


def parse_poly(text: str) -> Poly:
    """Parse the grammar above into an exact polynomial."""
    scanner = _Scanner(text)
    acc: dict[int, Fraction] = {}

    scanner.skip_ws()
    if not scanner.peek():
        raise ParseError(scanner.pos, "expected term")
    sign = 1
    if scanner.peek() in "+-":
        if scanner.take() == "-":
            sign = -1

    while True:
        exponent, coeff = _parse_term(scanner)
        acc[exponent] = acc.get(exponent, Fraction(0)) + sign * coeff
        scanner.skip_ws()
        if not scanner.peek():
            break
        op = scanner.peek()
        if op not in "+-":
            raise ParseError(scanner.pos, f"expected '+' or '-', found {op!r}")
        scanner.take()
        sign = 1 if op == "+" else -1

    size = max(acc) + 1 if acc else 0
    coeffs = [Fraction(0)] * size
    for exponent, value in acc.items():
        coeffs[exponent] = value
    return Poly(coeffs)


def _parse_term(scanner: _Scanner) -> tuple[int, Fraction]:
    scanner.skip_ws()
    ch = scanner.peek()
    if ch.isdigit():
        numerator = scanner.read_integer("integer")
        denominator = 1
        scanner.skip_ws()
        if scanner.peek() == "/":
            scanner.take()
            scanner.skip_ws()
            den_offset = scanner.pos
            denominator = scanner.read_integer("denominator")
            if denominator == 0:
                raise ParseError(den_offset, "zero denominator")
        coeff = Fraction(numerator, denominator)
        scanner.skip_ws()
        if scanner.peek() == "*":
            scanner.take()
            scanner.skip_ws()
            if scanner.peek() != "x":
                raise ParseError(scanner.pos, "expected 'x' after '*'")
            return _parse_xpart(scanner), coeff
        if scanner.peek() == "x":
            return _parse_xpart(scanner), coeff
        return 0, coeff
    if ch == "x":
        return _parse_xpart(scanner), Fraction(1)
    raise ParseError(scanner.pos, "expected term")


def _parse_xpart(scanner: _Scanner) -> int:
    scanner.take()
    scanner.skip_ws()
    if scanner.peek() == "^":
        scanner.take()
        return scanner.read_integer("exponent")
    return 1
