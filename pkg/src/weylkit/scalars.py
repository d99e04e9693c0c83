"""Exact Gaussian-rational arithmetic: the coefficient field Q(i).

Every coefficient in the library is a Scalar — a complex number a + b*i whose
real and imaginary parts are arbitrary-precision rationals.  Equality is
canonical (Fraction keeps itself reduced), so all downstream identity checks
are decidable with literal equality.  There is no floating-point mode.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Scalar", "ZERO", "ONE", "I", "parse_scalar", "format_scalar", "ScalarSyntaxError"]

_RatLike = (int, Fraction)


class Scalar:
    """A Gaussian rational re + im*i; immutable by convention."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_integer(self) -> bool:
        """True for rational integers (im = 0, denominator 1)."""
        return not self.im and self.re.denominator == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, _RatLike):
            return Scalar(x)
        return NotImplemented

    def __add__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __sub__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.re * other.re - self.im * other.im,
                      self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("scalar division by zero")
        return Scalar((self.re * other.re + self.im * other.im) / n,
                      (self.im * other.re - self.re * other.im) / n)

    def __rtruediv__(self, other):
        return Scalar._coerce(other) / self

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (ONE / self) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def inverse(self) -> "Scalar":
        return ONE / self

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def sort_key(self):
        """A total order on Q(i) (lexicographic); used only for determinism."""
        return (self.re, self.im)

    # -- text and machine forms ----------------------------------------------

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({self.re!r}, {self.im!r})" if self.im else f"Scalar({self.re!r})"

    def as_tuple(self):
        """Machine form (re_num, re_den, im_num, im_den)."""
        return (self.re.numerator, self.re.denominator,
                self.im.numerator, self.im.denominator)

    @staticmethod
    def from_tuple(t) -> "Scalar":
        rn, rd, im_n, im_d = t
        return Scalar(Fraction(rn, rd), Fraction(im_n, im_d))


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


# -- text grammar -----------------------------------------------------------
#
#   scalar   := rational 'i'? | rational ('+'|'-') rational 'i' | sign? 'i'
#   rational := sign? nat ('/' nat)?
#
# format_scalar produces the shortest of these forms; parse_scalar(format_scalar(s)) = s.


class ScalarSyntaxError(ValueError):
    """Scalar literal rejected; carries the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _fmt_rational(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def format_scalar(s: Scalar) -> str:
    if not s.im:
        return _fmt_rational(s.re)
    if s.im == 1:
        im = "i"
    elif s.im == -1:
        im = "-i"
    else:
        im = _fmt_rational(s.im) + "i"
    if not s.re:
        return im
    sign = "+" if s.im > 0 else "-"
    mag = im.lstrip("+-")
    return f"{_fmt_rational(s.re)}{sign}{mag}"


class _ScalarScanner:
    def __init__(self, text: str, pos: int = 0):
        self.text = text
        self.pos = pos

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        while self.peek() in (" ", "\t"):
            self.pos += 1

    def take_nat(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            raise ScalarSyntaxError("expected a digit", start)
        return int(self.text[start:self.pos])

    def take_rational(self) -> Fraction:
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        num = self.take_nat()
        if self.peek() == "/":
            self.pos += 1
            den = self.take_nat()
            if den == 0:
                raise ScalarSyntaxError("zero denominator", self.pos)
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    def take_scalar(self) -> Scalar:
        """Greedy scan: reads `re ± im i` when the tail is really there, else
        backtracks to the bare rational so `1+2*p` leaves `+2*p` unconsumed."""
        self.skip_ws()
        start = self.pos
        # bare (possibly signed) imaginary unit
        if self.peek() in "+-" and self.text[self.pos + 1:self.pos + 2] == "i":
            self.pos += 2
            return Scalar(0, 1 if self.text[start] == "+" else -1)
        if self.peek() == "i":
            self.pos += 1
            return Scalar(0, 1)
        first = self.take_rational()
        if self.peek() == "i":
            self.pos += 1
            return Scalar(0, first)
        if self.peek() in "+-":
            mark = self.pos
            try:
                second = self.take_rational()
            except ScalarSyntaxError:
                if self.text[mark + 1:mark + 2] == "i":
                    self.pos = mark + 2
                    return Scalar(first, 1 if self.text[mark] == "+" else -1)
                self.pos = mark
                return Scalar(first)
            if self.peek() != "i":
                self.pos = mark
                return Scalar(first)
            self.pos += 1
            return Scalar(first, second)
        return Scalar(first)


def parse_scalar(text: str) -> Scalar:
    sc = _ScalarScanner(text)
    value = sc.take_scalar()
    sc.skip_ws()
    if sc.pos != len(text):
        raise ScalarSyntaxError("trailing input after scalar", sc.pos)
    return value


def scan_scalar(text: str, pos: int = 0) -> tuple[Scalar, int]:
    """Scan a scalar literal embedded at `pos`; returns (value, end position)."""
    sc = _ScalarScanner(text, pos)
    value = sc.take_scalar()
    return value, sc.pos
