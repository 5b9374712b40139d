"""Dense integer polynomials with exact resultants and discriminants.

Coefficients are stored ascending (coeffs[i] is the x^i coefficient) with
no trailing zeros, so degree == len(coeffs) - 1.  The zero polynomial has
an empty coefficient tuple and degree -1 by convention.

Text formats (both round-trip):
  * coefficient line, leading coefficient first: "1 0 -3 2" is x^3-3x+2
  * expression: "x^3 - 3*x + 2", with +, -, *, ^, ** and parentheses
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce


class IPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def zero() -> "IPoly":
        return IPoly(())

    @staticmethod
    def const(a: int) -> "IPoly":
        return IPoly((a,))

    @staticmethod
    def x_power(n: int, a: int = 1) -> "IPoly":
        return IPoly([0] * n + [a])

    @staticmethod
    def from_roots(roots) -> "IPoly":
        out = IPoly((1,))
        for r in roots:
            out = out * IPoly((-r, 1))
        return out

    # -- basic structure -----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i <= self.degree else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "IPoly") -> "IPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IPoly([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "IPoly") -> "IPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IPoly([self[i] - other[i] for i in range(n)])

    def __neg__(self) -> "IPoly":
        return IPoly([-a for a in self.coeffs])

    def __mul__(self, other) -> "IPoly":
        if isinstance(other, int):
            return IPoly([a * other for a in self.coeffs])
        if self.is_zero() or other.is_zero():
            return IPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IPoly":
        out, base = IPoly((1,)), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def eval(self, x: int) -> int:
        out = 0
        for a in reversed(self.coeffs):
            out = out * x + a
        return out

    def eval_frac(self, x: Fraction) -> Fraction:
        out = Fraction(0)
        for a in reversed(self.coeffs):
            out = out * x + a
        return out

    def eval_mod(self, x: int, m: int) -> int:
        out = 0
        for a in reversed(self.coeffs):
            out = (out * x + a) % m
        return out

    def derivative(self) -> "IPoly":
        return IPoly([i * a for i, a in enumerate(self.coeffs)][1:])

    def shift(self, c: int) -> "IPoly":
        """p(x + c), by repeated synthetic division."""
        work = list(self.coeffs)
        out = []
        for _ in range(len(work)):
            carry = 0
            for i in reversed(range(len(work))):
                carry = work[i] + carry * c
                work[i] = carry
            out.append(work.pop(0))
        return IPoly(out)

    def scale_x(self, num: int, den: int = 1) -> "IPoly":
        """den^deg * p(num * x / den); integral for any num, den."""
        d = self.degree
        return IPoly([a * num**i * den ** (d - i) for i, a in enumerate(self.coeffs)])

    def reverse(self, degree: int | None = None) -> "IPoly":
        """x^degree * p(1/x); degree defaults to deg p."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below actual degree")
        return IPoly([self[d - i] for i in range(d + 1)])

    def content(self) -> int:
        """gcd of the coefficients with the sign of the leading one; 0 for 0."""
        if self.is_zero():
            return 0
        g = reduce(math.gcd, (abs(a) for a in self.coeffs))
        return -g if self.lc < 0 else g

    def primitive(self) -> "IPoly":
        c = self.content()
        return IPoly([a // c for a in self.coeffs]) if c else self

    def divmod_exact(self, other: "IPoly") -> tuple["IPoly", "IPoly"]:
        """Division with remainder, valid when it stays integral (monic or
        exact divisors); raises if a non-integral quotient appears."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        q = [0] * max(0, len(rem) - len(other.coeffs) + 1)
        dlc = other.lc
        for i in reversed(range(len(q))):
            head = rem[i + other.degree]
            if head % dlc:
                raise ValueError("non-integral polynomial division")
            q[i] = head // dlc
            if q[i]:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= q[i] * b
        return IPoly(q), IPoly(rem)

    def divides(self, other: "IPoly") -> bool:
        """Whether self divides other over the rationals."""
        if self.is_zero():
            return other.is_zero()
        _, r = _frac_divmod(other, self)
        return all(c == 0 for c in r)

    # -- formatting ----------------------------------------------------------

    def coeff_line(self) -> str:
        if self.is_zero():
            return "0"
        return " ".join(str(a) for a in reversed(self.coeffs))

    def expr(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in reversed(range(len(self.coeffs))):
            a = self.coeffs[i]
            if a == 0:
                continue
            mag = abs(a)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = var if mag == 1 else f"{mag}*{var}"
            else:
                body = f"{var}^{i}" if mag == 1 else f"{mag}*{var}^{i}"
            parts.append(("-" if a < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"IPoly({self.expr()})"


def parse_coeff_line(text: str) -> IPoly:
    """Parse "f_d ... f_1 f_0" (leading coefficient first)."""
    try:
        vals = [int(t) for t in text.split()]
    except ValueError as e:
        raise PolyParseError(str(e)) from None
    if not vals:
        raise PolyParseError("empty coefficient list")
    return IPoly(list(reversed(vals)))


class PolyParseError(ValueError):
    def __init__(self, msg: str, pos: int | None = None):
        super().__init__(msg if pos is None else f"{msg} (at position {pos})")
        self.pos = pos


class _ExprParser:
    """Recursive-descent parser for integer polynomial expressions in x."""

    def __init__(self, text: str, var: str = "x"):
        self.text = text
        self.var = var
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> IPoly:
        out = self._sum()
        self._skip()
        if self.pos != len(self.text):
            raise PolyParseError("unexpected trailing input", self.pos)
        return out

    def _sum(self) -> IPoly:
        sign = 1
        while self._peek() in ("+", "-"):
            if self.text[self.pos] == "-":
                sign = -sign
            self.pos += 1
        out = self._product() * sign
        while self._peek() in ("+", "-"):
            sign = 1
            while self._peek() in ("+", "-"):
                if self.text[self.pos] == "-":
                    sign = -sign
                self.pos += 1
            out = out + self._product() * sign
        return out

    def _product(self) -> IPoly:
        out = self._power()
        while True:
            ch = self._peek()
            if ch == "*" and not self.text[self.pos : self.pos + 2] == "**":
                self.pos += 1
                out = out * self._power()
            elif ch == "(" or ch == self.var:
                out = out * self._power()  # implicit multiplication
            else:
                return out

    def _power(self) -> IPoly:
        base = self._atom()
        self._skip()
        if self.text[self.pos : self.pos + 2] == "**":
            self.pos += 2
        elif self._peek() == "^":
            self.pos += 1
        else:
            return base
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise PolyParseError("expected integer exponent", self.pos)
        return base ** int(self.text[start : self.pos])

    def _atom(self) -> IPoly:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            out = self._sum()
            if self._peek() != ")":
                raise PolyParseError("expected ')'", self.pos)
            self.pos += 1
            return out
        if ch == self.var:
            self.pos += 1
            return IPoly((0, 1))
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return IPoly.const(int(self.text[start : self.pos]))
        if ch == "-" or ch == "+":
            self.pos += 1
            sign = -1 if ch == "-" else 1
            return self._atom() * sign
        raise PolyParseError(f"unexpected character {ch!r}", self.pos)


def parse_expr(text: str, var: str = "x") -> IPoly:
    return _ExprParser(text, var).parse()


def parse_poly(text: str, var: str = "x") -> IPoly:
    """Accept either text format, sniffing for the variable."""
    if var in text:
        return parse_expr(text, var)
    return parse_coeff_line(text)


# -- rational-coefficient helpers (internal) ----------------------------------


def _frac_divmod(a: IPoly, b: IPoly) -> tuple[list[Fraction], list[Fraction]]:
    ac = [Fraction(c) for c in a.coeffs]
    bc = [Fraction(c) for c in b.coeffs]
    q = [Fraction(0)] * max(0, len(ac) - len(bc) + 1)
    while len(ac) >= len(bc) and any(ac):
        while ac and ac[-1] == 0:
            ac.pop()
        if len(ac) < len(bc):
            break
        k = len(ac) - len(bc)
        f = ac[-1] / bc[-1]
        q[k] = f
        for i, c in enumerate(bc):
            ac[i + k] -= f * c
        ac.pop()
    return q, ac


def poly_gcd(a: IPoly, b: IPoly) -> IPoly:
    """Primitive gcd over Z (computed via rational Euclid, then normalized)."""
    fa, fb = a, b
    while not fb.is_zero():
        _, rem = _frac_divmod(fa, fb)
        den = math.lcm(*(f.denominator for f in rem)) if rem else 1
        fa, fb = fb, IPoly([int(f * den) for f in rem])
    if fa.is_zero():
        return fa
    g = fa.primitive()
    return g if g.lc > 0 else -g


# -- resultants ----------------------------------------------------------------


def resultant(g: IPoly, h: IPoly) -> int:
    """Resultant as the determinant of the Sylvester matrix, g's rows first."""
    if g.is_zero() or h.is_zero():
        raise ValueError("resultant requires nonzero polynomials")
    m, n = g.degree, h.degree
    if m == 0:
        return g.coeffs[0] ** n
    if n == 0:
        return h.coeffs[0] ** m
    size = m + n
    rows: list[list[int]] = []
    gdesc = list(reversed(g.coeffs))
    hdesc = list(reversed(h.coeffs))
    for i in range(n):
        rows.append([0] * i + gdesc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + hdesc + [0] * (size - n - 1 - i))
    return _bareiss_det(rows)


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free determinant (Bareiss); mutates its argument."""
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def disc(f: IPoly) -> int:
    """Discriminant; zero exactly when f has a repeated root."""
    d = f.degree
    if d < 2:
        raise ValueError("discriminant needs degree >= 2")
    df = f.derivative()
    if df.is_zero():
        return 0
    r = resultant(f, df)
    s = -1 if (d * (d - 1) // 2) % 2 else 1
    val, rem = divmod(s * r, f.lc)
    assert rem == 0
    return val
