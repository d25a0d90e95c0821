"""Graded pieces of the Frobenius algebra of a monomial quotient.

For a proper nonzero monomial ideal I in characteristic p, the level-e
piece is the colon ideal (I^[p^e] : I) read modulo I^[p^e]; because I is
monomial both sides are computed exactly with lattice arithmetic on
exponents.  Two elements u_e, u_1 at levels e and 1 compose to
u_e * u_1^(p^e) at level e + 1, so the ideal of the degree-e part of the
subalgebra generated in degree one obeys

    J_e = J_1 * J_(e-1)^[p] + I^[p^e],       J_0 = (1).

generation_check compares J_e with the true colon ideal level by level
up to a finite horizon; the outcome is evidence at that horizon, never a
statement about all e.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateIdeal, InvalidExponent, SkoszulError
from .fields import is_prime
from .monomial import MonomialIdeal
from .reporting import Report


@dataclass(frozen=True)
class FrobeniusPiece:
    """Level-e data: the colon ideal and its generators surviving mod I^[q]."""

    e: int
    q: int
    colon_ideal: MonomialIdeal
    socle_generators: tuple[tuple[int, ...], ...]

    def to_obj(self):
        return {"e": self.e, "q": self.q,
                "colon": self.colon_ideal.to_obj(),
                "generators_mod_bracket": [list(g) for g in self.socle_generators]}


def _validate(ideal: MonomialIdeal, p: int):
    if ideal.is_zero() or ideal.is_unit():
        raise DegenerateIdeal("Fedder pieces need a proper nonzero monomial ideal")
    if not is_prime(p):
        raise SkoszulError(f"{p} is not prime")


def fedder_piece(ideal: MonomialIdeal, p: int, e: int) -> FrobeniusPiece:
    """The level-e piece (I^[p^e] : I) with its generators outside I^[p^e].

    e = 0 is allowed and gives the unit ideal (I : I) = (1), matching the
    degree-zero part of the algebra.
    """
    _validate(ideal, p)
    if e < 0:
        raise InvalidExponent("level e must be nonnegative")
    q = p**e
    bracket = ideal.bracket_power(q)
    colon = bracket.colon(ideal)
    socle = tuple(g for g in colon.gens if not bracket.contains_monomial(g))
    return FrobeniusPiece(e=e, q=q, colon_ideal=colon, socle_generators=socle)


def generation_check(ideal: MonomialIdeal, p: int, e_max: int) -> Report:
    """Compare the degree-one-generated filtration J_e with the true colon
    ideals for 1 <= e <= e_max.  Equality everywhere means the algebra is
    generated in degree one as far as the horizon sees."""
    _validate(ideal, p)
    if e_max < 2:
        raise InvalidExponent("generation check needs e_max >= 2")
    report = Report(f"degree-one generation of the Frobenius algebra, "
                    f"I = {ideal}, p = {p}, horizon e <= {e_max}")
    level_one = fedder_piece(ideal, p, 1)
    j_current = level_one.colon_ideal
    principal = len(level_one.socle_generators) == 1
    report.add("colon_absorbs_ideal e=1",
               ideal.bracket_power(p).contains_ideal(
                   ideal.product(level_one.colon_ideal)),
               "I * (I^[p] : I) lies in I^[p]")
    levels = [{"e": 1, "colon": level_one.colon_ideal.to_obj(),
               "subalgebra": j_current.to_obj(), "equal": True}]
    all_equal = True
    for e in range(2, e_max + 1):
        piece = fedder_piece(ideal, p, e)
        j_current = level_one.colon_ideal.product(j_current.bracket_power(p)) \
            + ideal.bracket_power(p**e)
        # invariant checks: these fail only on a bug, never on honest input
        report.add(f"subalgebra_contained e={e}",
                   piece.colon_ideal.contains_ideal(j_current),
                   "J_e sits inside the true colon ideal")
        report.add(f"colon_absorbs_ideal e={e}",
                   ideal.bracket_power(p**e).contains_ideal(
                       ideal.product(piece.colon_ideal)),
                   "I * (I^[q] : I) lies in I^[q]")
        # whether equality holds is a finding, reported as payload
        equal = j_current.contains_ideal(piece.colon_ideal)
        all_equal = all_equal and equal
        levels.append({"e": e, "colon": piece.colon_ideal.to_obj(),
                       "subalgebra": j_current.to_obj(), "equal": equal})
    report.payload = {
        "p": p,
        "horizon": e_max,
        "degree_one_generated": all_equal,
        "level_one_principal": principal,
        "principal_skew_form": principal and all_equal,
        "u": [list(g) for g in level_one.socle_generators] if principal else None,
        "levels": levels,
        "note": "bounded-horizon evidence only; levels above e_max are unchecked",
    }
    return report
