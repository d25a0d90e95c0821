"""Structural ring endomorphisms of S = K[x_1, ..., x_n].

Supported maps fix every coordinate ideal: x_i goes to s_i * x_i with
s_i nonzero.  Built-in families:

  * frobenius(p, e): s_i = x_i^(p^e - 1), only in characteristic p,
  * power(t):        s_i = x_i^(t - 1), any field,
  * custom:          explicit multiplier list.

Flatness of the map matters downstream (the free-resolution theorems
assume it) but is not decidable here for custom multipliers, so an Endo
just records a flatness assertion; the built-in families set it.
"""

from __future__ import annotations

from .errors import (ArityMismatch, CharacteristicMismatch, InvalidExponent,
                     NotStructural, ParseError)
from .fields import FieldSpec, is_prime
from .poly import Poly, parse_poly


class Endo:
    """Endomorphism x_i -> s_i * x_i, with cached iterates.

    Equality ignores the family tag: two endos are the same map iff
    their multiplier lists agree.  The iterate cache is filled
    idempotently, so sharing across threads is safe.
    """

    __slots__ = ("field", "nvars", "multipliers", "family", "params",
                 "flatness_asserted", "_iterates", "_images")

    def __init__(self, field: FieldSpec, nvars: int, multipliers: list[Poly],
                 family: str = "custom", params: dict | None = None,
                 flatness_asserted: bool = False):
        if len(multipliers) != nvars:
            raise ArityMismatch(f"{len(multipliers)} multipliers for {nvars} variables")
        for i, s in enumerate(multipliers):
            if s.nvars != nvars or s.field != field:
                raise ArityMismatch(f"multiplier s_{i + 1} lives in the wrong ring")
            if s.is_zero():
                raise NotStructural(f"multiplier s_{i + 1} is zero")
        self.field = field
        self.nvars = nvars
        self.multipliers = list(multipliers)
        self.family = family
        self.params = dict(params or {})
        self.flatness_asserted = flatness_asserted
        self._iterates: dict[int, "Endo"] = {}
        self._images: list[Poly] | None = None

    # -- constructors ------------------------------------------------------------

    @classmethod
    def identity(cls, field: FieldSpec, nvars: int) -> "Endo":
        ones = [Poly.one(field, nvars)] * nvars
        return cls(field, nvars, ones, family="power", params={"t": 1},
                   flatness_asserted=True)

    @classmethod
    def frobenius(cls, field: FieldSpec, nvars: int, p: int, e: int = 1) -> "Endo":
        """The e-th Frobenius iterate x_i -> x_i^(p^e)."""
        if not is_prime(p):
            raise CharacteristicMismatch(f"{p} is not prime")
        if field.p != p:
            raise CharacteristicMismatch(
                f"frobenius(p={p}) over a field of characteristic {field.p}")
        if e < 0:
            raise InvalidExponent("frobenius iterate needs e >= 0")
        q = p**e
        mult = [Poly.monomial(field, nvars,
                              tuple(q - 1 if j == i else 0 for j in range(nvars)))
                for i in range(nvars)]
        return cls(field, nvars, mult, family="frobenius", params={"p": p, "e": e},
                   flatness_asserted=True)

    @classmethod
    def power_map(cls, field: FieldSpec, nvars: int, t: int) -> "Endo":
        """x_i -> x_i^t over any field."""
        if t < 1:
            raise InvalidExponent("power map needs t >= 1")
        mult = [Poly.monomial(field, nvars,
                              tuple(t - 1 if j == i else 0 for j in range(nvars)))
                for i in range(nvars)]
        return cls(field, nvars, mult, family="power", params={"t": t},
                   flatness_asserted=True)

    @classmethod
    def custom(cls, multipliers: list[Poly], flatness_asserted: bool = False) -> "Endo":
        if not multipliers:
            raise ArityMismatch("need at least one multiplier")
        first = multipliers[0]
        return cls(first.field, first.nvars, multipliers,
                   flatness_asserted=flatness_asserted)

    @classmethod
    def from_images(cls, images: list[Poly], flatness_asserted: bool = False) -> "Endo":
        """Build from the images of the variables, which must each be a
        multiple of the corresponding variable."""
        if not images:
            raise ArityMismatch("need at least one image")
        field, nvars = images[0].field, images[0].nvars
        multipliers = []
        for i, img in enumerate(images):
            xi = Poly.variable(field, nvars, i + 1)
            s = img.divide_exact(xi)
            if s is None or s.is_zero():
                raise NotStructural(f"image of x{i + 1} is not a nonzero multiple of x{i + 1}")
            multipliers.append(s)
        return cls(field, nvars, multipliers, flatness_asserted=flatness_asserted)

    # -- identity -----------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Endo)
                and self.field == other.field and self.nvars == other.nvars
                and self.multipliers == other.multipliers)

    def __hash__(self):
        return hash((self.field, self.nvars, tuple(self.multipliers)))

    def descriptor(self) -> str:
        if self.family == "frobenius":
            return f"frobenius:p={self.params['p']},e={self.params['e']}"
        if self.family == "power":
            return f"power:t={self.params['t']}"
        return "custom:" + ";".join(str(s) for s in self.multipliers)

    def __repr__(self):
        return f"Endo({self.descriptor()})"

    # -- action --------------------------------------------------------------------

    def images(self) -> list[Poly]:
        """The variable images s_i * x_i."""
        if self._images is None:
            self._images = [
                s * Poly.variable(self.field, self.nvars, i + 1)
                for i, s in enumerate(self.multipliers)
            ]
        return self._images

    def apply(self, f: Poly) -> Poly:
        if f.nvars != self.nvars or f.field != self.field:
            raise ArityMismatch("polynomial lives in a different ring than the endomorphism")
        return f.substitute(self.images())

    def apply_matrix(self, rows: list[list[Poly]]) -> list[list[Poly]]:
        """Entrywise action; a ring map, so the sign of each entry survives."""
        return [[self.apply(entry) for entry in row] for row in rows]

    def power(self, e: int) -> "Endo":
        """The e-fold composite; e = 0 is the identity."""
        if e < 0:
            raise InvalidExponent("endomorphism power needs e >= 0")
        got = self._iterates.get(e)
        if got is not None:
            return got
        if e == 0:
            result = Endo.identity(self.field, self.nvars)
        elif e == 1:
            result = self
        else:
            # phi^e(x_i) = phi^(e-1)(s_i x_i) = phi^(e-1)(s_i) * m_(e-1) * x_i
            prev = self.power(e - 1)
            mult = [prev.apply(s) * m for s, m in zip(self.multipliers, prev.multipliers)]
            family, params = "custom", {}
            if self.family == "frobenius":
                family, params = "frobenius", {"p": self.params["p"],
                                               "e": self.params["e"] * e}
            elif self.family == "power":
                family, params = "power", {"t": self.params["t"] ** e}
            result = Endo(self.field, self.nvars, mult, family=family, params=params,
                          flatness_asserted=self.flatness_asserted)
        self._iterates[e] = result
        return result

    def multiplier_product(self, subset) -> Poly:
        """Product of s_i over a subset of 1..n (empty product is 1)."""
        out = Poly.one(self.field, self.nvars)
        for i in subset:
            out = out * self.multipliers[i - 1]
        return out


def parse_endo(descriptor: str, field: FieldSpec, nvars: int) -> Endo:
    """Parse 'frobenius:p=<p>,e=<e>', 'power:t=<t>' or 'custom:<s1>;<s2>;...'."""
    text = descriptor.strip()
    head, sep, rest = text.partition(":")
    head = head.lower()
    if not sep:
        raise ParseError(f"bad endo descriptor {descriptor!r}")
    if head == "frobenius":
        fields = dict(item.split("=") for item in rest.split(",") if item)
        try:
            p, e = int(fields["p"]), int(fields.get("e", 1))
        except (KeyError, ValueError) as exc:
            raise ParseError(f"bad frobenius descriptor {descriptor!r}") from exc
        return Endo.frobenius(field, nvars, p, e)
    if head == "power":
        fields = dict(item.split("=") for item in rest.split(",") if item)
        try:
            t = int(fields["t"])
        except (KeyError, ValueError) as exc:
            raise ParseError(f"bad power descriptor {descriptor!r}") from exc
        return Endo.power_map(field, nvars, t)
    if head == "custom":
        parts = [part for part in rest.split(";") if part.strip()]
        if len(parts) != nvars:
            raise ParseError(f"custom endo needs {nvars} multipliers, got {len(parts)}")
        multipliers = [parse_poly(part, field, nvars) for part in parts]
        return Endo.custom(multipliers, flatness_asserted=False)
    raise ParseError(f"unknown endo family {head!r}")
