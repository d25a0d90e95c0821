"""Monomial ideals with an exact colon / intersection / bracket calculus.

An ideal is stored by its minimal monomial generating set, as a sorted
tuple of exponent vectors.  The zero ideal has no generators; the unit
ideal is generated by the all-zero vector.  Because every input here is
monomial, all operations are Groebner-free lattice arithmetic on
exponents: lcm is a componentwise max, colon by a monomial is a
componentwise truncated difference.
"""

from __future__ import annotations

from .errors import ArityMismatch, InvalidExponent, UndefinedColon
from .poly import Poly, grlex_key


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Does the monomial with exponents a divide the one with exponents b?"""
    return all(x <= y for x, y in zip(a, b))


def _minimalize(vectors) -> tuple[tuple[int, ...], ...]:
    # ascending sweep: a monomial can only be divided by one of lower degree
    unique = sorted(set(vectors), key=grlex_key)
    kept: list[tuple[int, ...]] = []
    for v in unique:
        if not any(_divides(k, v) for k in kept):
            kept.append(v)
    # stored leading-first, matching polynomial term order
    return tuple(sorted(kept, key=grlex_key, reverse=True))


class MonomialIdeal:
    """Finitely generated monomial ideal in n variables."""

    __slots__ = ("nvars", "gens")

    def __init__(self, nvars: int, gens):
        vectors = []
        for g in gens:
            g = tuple(int(e) for e in g)
            if len(g) != nvars:
                raise ArityMismatch(f"generator {g} has wrong length for {nvars} variables")
            if any(e < 0 for e in g):
                raise InvalidExponent(f"negative exponent in generator {g}")
            vectors.append(g)
        self.nvars = nvars
        self.gens = _minimalize(vectors)

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, [])

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, [(0,) * nvars])

    @classmethod
    def from_polys(cls, polys: list[Poly]) -> "MonomialIdeal":
        """Build from monomial polynomials (each must be a single term)."""
        if not polys:
            raise ArityMismatch("need at least one generator polynomial")
        nvars = polys[0].nvars
        gens = []
        for f in polys:
            if not f.is_monomial():
                raise ArityMismatch(f"{f} is not a monomial")
            gens.append(next(iter(f.terms)))
        return cls(nvars, gens)

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def contains_monomial(self, exps) -> bool:
        exps = tuple(exps)
        return any(_divides(g, exps) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        self._check(other)
        return all(self.contains_monomial(g) for g in other.gens)

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal)
                and self.nvars == other.nvars and self.gens == other.gens)

    def __hash__(self):
        return hash((self.nvars, self.gens))

    def _check(self, other: "MonomialIdeal"):
        if self.nvars != other.nvars:
            raise ArityMismatch(
                f"ideals in different rings: {self.nvars} vs {other.nvars} variables")

    # -- the calculus -----------------------------------------------------------

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Generated by lcm(g1, g2) over pairs of generators."""
        self._check(other)
        lcms = [tuple(map(max, g1, g2)) for g1 in self.gens for g2 in other.gens]
        return MonomialIdeal(self.nvars, lcms)

    def colon_monomial(self, m) -> "MonomialIdeal":
        m = tuple(m)
        quotients = [tuple(max(g_e - m_e, 0) for g_e, m_e in zip(g, m)) for g in self.gens]
        return MonomialIdeal(self.nvars, quotients)

    def colon(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """(self : other), the intersection of (self : m) over generators m."""
        self._check(other)
        if other.is_zero():
            raise UndefinedColon("colon by the zero ideal")
        result = self.colon_monomial(other.gens[0])
        for m in other.gens[1:]:
            result = result.intersect(self.colon_monomial(m))
        return result

    def bracket_power(self, q: int) -> "MonomialIdeal":
        """Generated by the q-th powers of the generators."""
        if q < 1:
            raise InvalidExponent(f"bracket power needs q >= 1, got {q}")
        return MonomialIdeal(self.nvars, [tuple(e * q for e in g) for g in self.gens])

    def product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        sums = [tuple(map(int.__add__, g1, g2)) for g1 in self.gens for g2 in other.gens]
        return MonomialIdeal(self.nvars, sums)

    def __add__(self, other):
        """Ideal sum: union of generating sets, re-minimalized."""
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        self._check(other)
        return MonomialIdeal(self.nvars, list(self.gens) + list(other.gens))

    def reduce(self, f: Poly) -> Poly:
        """Canonical representative of f modulo this ideal: drop every
        term divisible by a generator."""
        if f.nvars != self.nvars:
            raise ArityMismatch("polynomial and ideal in different rings")
        kept = {e: c for e, c in f.terms.items() if not self.contains_monomial(e)}
        return Poly(f.field, f.nvars, kept)

    # -- presentation --------------------------------------------------------------

    def generator_polys(self, field) -> list[Poly]:
        return [Poly.monomial(field, self.nvars, g) for g in self.gens]

    def to_obj(self):
        return [list(g) for g in self.gens]

    def __str__(self):
        if not self.gens:
            return "(0)"
        names = []
        for g in self.gens:
            if not any(g):
                names.append("1")
                continue
            names.append("*".join(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                                  for i, e in enumerate(g) if e))
        return "(" + ", ".join(names) + ")"

    def __repr__(self):
        return f"MonomialIdeal({self})"
