"""Exact coefficient fields: the rationals and prime fields F_p.

A FieldSpec with characteristic 0 works with ``fractions.Fraction``
elements; characteristic p > 0 works with plain ints canonically reduced
into [0, p).  All arithmetic is exact, there is no floating point anywhere
in this package.
"""

from fractions import Fraction

from .errors import ParseError, SkoszulError


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, exact for every m < 3.3 * 10^24."""
    if m < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % q == 0:
            return m == q
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


class FieldSpec:
    """The coefficient field: Q when characteristic is 0, else F_p.

    Elements are not wrapped: ints for F_p, Fractions for Q.  The spec
    object supplies the arithmetic so polynomial code never branches on
    the characteristic itself.
    """

    __slots__ = ("p",)

    def __init__(self, characteristic: int):
        if characteristic == 0:
            self.p = 0
            return
        if not (2 <= characteristic < 2**31 and is_prime(characteristic)):
            raise SkoszulError(
                f"characteristic must be 0 or a prime below 2^31, got {characteristic}"
            )
        self.p = characteristic

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.p == other.p

    def __hash__(self):
        return hash(("FieldSpec", self.p))

    def __repr__(self):
        return f"FieldSpec({self.p})"

    @property
    def descriptor(self) -> str:
        return "q" if self.p == 0 else f"gf:{self.p}"

    # -- element arithmetic ------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def coerce(self, value):
        """Bring an int / Fraction / 'a/b' string into canonical form."""
        if isinstance(value, str):
            return self.parse_coefficient(value)
        if self.p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise SkoszulError(f"denominator not invertible mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return a * b % self.p if self.p else a * b

    def neg(self, a):
        return -a % self.p if self.p else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("field inverse of zero")
        return pow(a, -1, self.p) if self.p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        if k < 0:
            return self.inv(self.pow(a, -k))
        return pow(a, k, self.p) if self.p else a**k

    # -- text and serialization --------------------------------------------

    def parse_coefficient(self, text: str):
        """Parse an integer or 'a/b' literal."""
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                frac = Fraction(int(num), int(den))
            else:
                frac = Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coefficient literal {text!r}") from exc
        return self.coerce(frac)

    def serialize_coefficient(self, a):
        """JSON form: int in [0, p) for F_p, 'num/den' string for Q."""
        if self.p:
            return int(a)
        return f"{a.numerator}/{a.denominator}"

    def format_coefficient(self, a) -> str:
        return str(a)


def parse_field(descriptor: str) -> FieldSpec:
    """Parse a field descriptor: 'q' for the rationals, 'gf:p' for F_p."""
    text = descriptor.strip().lower()
    if text == "q":
        return FieldSpec(0)
    if text.startswith("gf:"):
        try:
            p = int(text[3:])
        except ValueError as exc:
            raise ParseError(f"bad field descriptor {descriptor!r}") from exc
        return FieldSpec(p)
    raise ParseError(f"bad field descriptor {descriptor!r} (expected 'q' or 'gf:<p>')")


QQ = FieldSpec(0)
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
