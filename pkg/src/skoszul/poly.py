"""Sparse multivariate polynomials with exact coefficients.

A polynomial in S = K[x_1, ..., x_n] is a map from exponent vectors
(length-n tuples of nonnegative ints) to nonzero field elements.  The
canonical term order is graded lexicographic with x_1 > ... > x_n; the
zero polynomial is the empty map and has total degree -1 by convention.

Values are immutable after construction and every operation is a pure
function, so polynomials can be shared freely across threads.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import ArityMismatch, InvalidExponent, ParseError
from .fields import FieldSpec


def grlex_key(exps: tuple[int, ...]):
    """Sort key realizing graded lex with x_1 > ... > x_n."""
    return (sum(exps), exps)


def monomials_of_degree(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree, grlex-descending."""
    if degree < 0:
        return []
    out = []
    # stars and bars: choose positions of nvars-1 separators among degree+nvars-1 slots
    for bars in itertools.combinations(range(degree + nvars - 1), nvars - 1):
        prev = -1
        exps = []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(degree + nvars - 1 - prev - 1)
        out.append(tuple(exps))
    out.sort(key=grlex_key, reverse=True)
    return out


def monomials_up_to_degree(nvars: int, max_degree: int) -> list[tuple[int, ...]]:
    out = []
    for d in range(max_degree + 1):
        out.extend(monomials_of_degree(nvars, d))
    return out


class Poly:
    """Element of K[x_1, ..., x_n], stored sparsely.

    ``terms`` maps exponent tuples to nonzero coefficients.  Two
    polynomials are equal iff field, variable count and term maps agree.
    Construct through the classmethods or arithmetic; the raw constructor
    trusts its input not to contain zero coefficients.
    """

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: FieldSpec, nvars: int, terms: dict):
        self.field = field
        self.nvars = nvars
        self.terms = terms

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec, nvars: int) -> "Poly":
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field: FieldSpec, nvars: int, value) -> "Poly":
        c = field.coerce(value)
        return cls(field, nvars, {} if not c else {(0,) * nvars: c})

    @classmethod
    def one(cls, field: FieldSpec, nvars: int) -> "Poly":
        return cls.constant(field, nvars, 1)

    @classmethod
    def variable(cls, field: FieldSpec, nvars: int, index: int) -> "Poly":
        """The variable x_{index}, 1-based."""
        if not 1 <= index <= nvars:
            raise ArityMismatch(f"variable index {index} out of range 1..{nvars}")
        exps = tuple(1 if i == index - 1 else 0 for i in range(nvars))
        return cls(field, nvars, {exps: field.one})

    @classmethod
    def monomial(cls, field: FieldSpec, nvars: int, exps, coeff=1) -> "Poly":
        exps = tuple(int(e) for e in exps)
        if len(exps) != nvars:
            raise ArityMismatch(f"exponent vector of length {len(exps)}, expected {nvars}")
        if any(e < 0 for e in exps):
            raise InvalidExponent(f"negative exponent in {exps}")
        c = field.coerce(coeff)
        return cls(field, nvars, {exps: c} if c else {})

    @classmethod
    def from_terms(cls, field: FieldSpec, nvars: int, pairs) -> "Poly":
        """Sum of (exps, coeff) pairs; repeated exponents accumulate."""
        terms: dict = {}
        for exps, coeff in pairs:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ArityMismatch("exponent vector length mismatch")
            c = field.add(terms.get(exps, field.zero), field.coerce(coeff))
            if c:
                terms[exps] = c
            else:
                terms.pop(exps, None)
        return cls(field, nvars, terms)

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def total_degree(self) -> int:
        """Maximal term degree; -1 for the zero polynomial (reporting only)."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def homogeneous_part(self, degree: int) -> "Poly":
        return Poly(self.field, self.nvars,
                    {e: c for e, c in self.terms.items() if sum(e) == degree})

    def homogeneous_degrees(self) -> list[int]:
        return sorted({sum(e) for e in self.terms})

    def leading_term(self) -> tuple[tuple[int, ...], object]:
        """Grlex-largest (exps, coeff); raises on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def coefficient(self, exps) -> object:
        return self.terms.get(tuple(exps), self.field.zero)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def _check_compatible(self, other: "Poly"):
        if self.nvars != other.nvars or self.field != other.field:
            raise ArityMismatch(
                f"incompatible rings: {self.nvars} vars over {self.field.descriptor} vs "
                f"{other.nvars} vars over {other.field.descriptor}"
            )

    # -- arithmetic ----------------------------------------------------------

    def _coerce_operand(self, other):
        if isinstance(other, Poly):
            self._check_compatible(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.field, self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        field = self.field
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = field.add(terms.get(exps, field.zero), c)
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return Poly(field, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return Poly(self.field, self.nvars, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        field = self.field
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                exps = tuple(map(int.__add__, e1, e2))
                c = field.add(out.get(exps, field.zero), field.mul(c1, c2))
                if c:
                    out[exps] = c
                else:
                    del out[exps]
        return Poly(field, self.nvars, out)

    __rmul__ = __mul__

    def scale(self, coeff) -> "Poly":
        c = self.field.coerce(coeff)
        if not c:
            return Poly.zero(self.field, self.nvars)
        mul = self.field.mul
        return Poly(self.field, self.nvars, {e: mul(v, c) for e, v in self.terms.items()})

    def mul_monomial(self, exps: tuple[int, ...], coeff) -> "Poly":
        """Fast multiplication by a single term."""
        c = self.field.coerce(coeff)
        if not c or not self.terms:
            return Poly.zero(self.field, self.nvars)
        mul = self.field.mul
        return Poly(self.field, self.nvars,
                    {tuple(map(int.__add__, e, exps)): mul(v, c)
                     for e, v in self.terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise InvalidExponent(f"polynomial power must be a nonnegative int, got {k!r}")
        result = Poly.one(self.field, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                other = Poly.constant(self.field, self.nvars, other)
            else:
                return NotImplemented
        return (self.field == other.field and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- substitution and division --------------------------------------------

    def substitute(self, images: list["Poly"]) -> "Poly":
        """Image under the K-algebra map x_i -> images[i-1].

        A ring homomorphism; images must all live in one common ring
        (which may differ from self's only in the variable count).
        """
        if len(images) != self.nvars:
            raise ArityMismatch(f"{len(images)} images for {self.nvars} variables")
        if not images:
            raise ArityMismatch("substitution needs at least one variable")
        target = images[0]
        for img in images[1:]:
            target._check_compatible(img)
        if target.field != self.field:
            raise ArityMismatch("substitution images over a different field")
        # fast path: all images are single terms, so each input term maps to one term
        if all(len(img.terms) == 1 for img in images):
            img_terms = [next(iter(img.terms.items())) for img in images]
            field = self.field
            out: dict = {}
            for exps, c in self.terms.items():
                new = [0] * target.nvars
                coeff = c
                for e, (iexps, icoeff) in zip(exps, img_terms):
                    if not e:
                        continue
                    for k, ie in enumerate(iexps):
                        if ie:
                            new[k] += ie * e
                    coeff = field.mul(coeff, field.pow(icoeff, e))
                key = tuple(new)
                s = field.add(out.get(key, field.zero), coeff)
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
            return Poly(field, target.nvars, out)
        powers: dict = {}

        def power(i: int, e: int) -> "Poly":
            got = powers.get((i, e))
            if got is None:
                got = images[i] ** e
                powers[(i, e)] = got
            return got

        out_poly = Poly.zero(self.field, target.nvars)
        for exps, c in self.terms.items():
            t = Poly.constant(self.field, target.nvars, c)
            for i, e in enumerate(exps):
                if e:
                    t = t * power(i, e)
            out_poly = out_poly + t
        return out_poly

    def divide_exact(self, divisor: "Poly") -> "Poly | None":
        """Quotient q with self == q * divisor, or None when no such q exists.

        Leading-term elimination in grlex order; correct over any field
        because an exact quotient forces every intermediate leading term
        to be divisible by the divisor's.
        """
        self._check_compatible(divisor)
        if divisor.is_zero():
            return None
        field = self.field
        lead_exps, lead_coeff = divisor.leading_term()
        quotient: dict = {}
        rest = self
        while rest.terms:
            r_exps, r_coeff = rest.leading_term()
            q_exps = tuple(map(int.__sub__, r_exps, lead_exps))
            if any(e < 0 for e in q_exps):
                return None
            q_coeff = field.div(r_coeff, lead_coeff)
            quotient[q_exps] = q_coeff
            rest = rest - divisor.mul_monomial(q_exps, q_coeff)
        return Poly(field, self.nvars, quotient)

    # -- text and serialization -------------------------------------------------

    def to_obj(self):
        """Serialized form: [[coeff, [e1, ..., en]], ...] in graded-lex order."""
        ser = self.field.serialize_coefficient
        return [[ser(c), list(e)] for e, c in self.sorted_terms()]

    @classmethod
    def from_obj(cls, field: FieldSpec, nvars: int, obj) -> "Poly":
        return cls.from_terms(field, nvars, ((tuple(e), field.coerce(c)) for c, e in obj))

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for exps, c in self.sorted_terms():
            factors = [f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                       for i, e in enumerate(exps) if e]
            text = self.field.format_coefficient(c)
            negative = text.startswith("-")
            if negative:
                text = text[1:]
            if factors and text == "1":
                body = "*".join(factors)
            elif factors:
                body = text + "*" + "*".join(factors)
            else:
                body = text
            if not chunks:
                chunks.append("-" + body if negative else body)
            else:
                chunks.append(("- " if negative else "+ ") + body)
        return " ".join(chunks)

    def __repr__(self):
        return f"Poly({self})"


# -- text syntax ----------------------------------------------------------------
#
# expr   := term (('+' | '-') term)*
# term   := factor ('*' factor)*
# factor := '-' factor | atom ('^' INT)?
# atom   := INT ('/' INT)? | VAR | '(' expr ')'
#
# Variables are x1..xn, with aliases x, y, z, w for the first four when n <= 4.

_ALIASES = {"x": 1, "y": 2, "z": 3, "w": 4}


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j]))
            i = j
        elif ch.isalpha():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("var", text[i:j]))
            i = j
        elif ch in "+-*/^()":
            tokens.append((ch, ch))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r} in polynomial text")
    tokens.append(("end", ""))
    return tokens


class _Parser:
    def __init__(self, text: str, field: FieldSpec, nvars: int):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.field = field
        self.nvars = nvars

    def peek(self):
        return self.tokens[self.pos][0]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}")
        self.pos += 1
        return tok

    def parse(self) -> Poly:
        poly = self.expr()
        if self.peek() != "end":
            raise ParseError(f"trailing input near {self.tokens[self.pos][1]!r}")
        return poly

    def expr(self) -> Poly:
        sign = 1
        while self.peek() in "+-":
            if self.take()[0] == "-":
                sign = -sign
        poly = self.term()
        if sign < 0:
            poly = -poly
        while self.peek() in "+-":
            op = self.take()[0]
            rhs = self.term()
            poly = poly + rhs if op == "+" else poly - rhs
        return poly

    def term(self) -> Poly:
        poly = self.factor()
        while self.peek() == "*":
            self.take()
            poly = poly * self.factor()
        return poly

    def factor(self) -> Poly:
        if self.peek() == "-":
            self.take()
            return -self.factor()
        poly = self.atom()
        if self.peek() == "^":
            self.take()
            exponent = int(self.take("int")[1])
            poly = poly**exponent
        return poly

    def atom(self) -> Poly:
        kind, text = self.take()
        if kind == "int":
            if self.peek() == "/":
                self.take()
                den = self.take("int")[1]
                return Poly.constant(self.field, self.nvars,
                                     self.field.parse_coefficient(f"{text}/{den}"))
            return Poly.constant(self.field, self.nvars, int(text))
        if kind == "var":
            return Poly.variable(self.field, self.nvars, self._var_index(text))
        if kind == "(":
            poly = self.expr()
            self.take(")")
            return poly
        raise ParseError(f"unexpected token {text!r}")

    def _var_index(self, name: str) -> int:
        index = None
        if name.startswith("x") and name[1:].isdigit():
            index = int(name[1:])
        elif name in _ALIASES and self.nvars <= 4:
            index = _ALIASES[name]
        if index is None or not 1 <= index <= self.nvars:
            raise ParseError(f"unknown variable {name!r} (use x1..x{self.nvars})")
        return index


def parse_poly(text: str, field: FieldSpec, nvars: int) -> Poly:
    """Parse the CLI text syntax into a polynomial."""
    return _Parser(text, field, nvars).parse()


def used_variable_count(text: str) -> int:
    """Largest variable index mentioned in a polynomial-syntax string.

    Aliases x, y, z, w count as x1..x4.  Used by the CLI to infer the
    ambient ring of an ideal given as monomial text.
    """
    best = 0
    for kind, tok in _tokenize(text):
        if kind != "var":
            continue
        if tok.startswith("x") and tok[1:].isdigit():
            best = max(best, int(tok[1:]))
        elif tok in _ALIASES:
            best = max(best, _ALIASES[tok])
    return best
