"""Arithmetic in the left skew polynomial ring S[T; phi].

The ring is a free left module over S = F_p[x_1, ..., x_n] on the powers
of a symbol T (printed as a capital theta) that does not commute with
coefficients: pushing T across a polynomial applies the twisting
endomorphism, T * f = phi(f) * T.  This script walks through the basic
laws, left normal forms, the augmentation, and the opposite ring.

Run: python3 demos/01_skew_rings.py
"""

from skoszul import (Endo, GF2, GF3, SkewPoly, opposite_product, parse_poly)

print(__doc__)

# -- the defining law ------------------------------------------------------------

field = GF3
phi = Endo.frobenius(field, 1, 3, 1)   # x -> x^3 on F_3[x]
theta = SkewPoly.theta(phi)
x = SkewPoly.from_poly(phi, parse_poly("x1", field, 1))

print("twist: phi =", phi.descriptor(), "so multipliers are",
      [str(s) for s in phi.multipliers])
print("T * x      =", theta * x, "      (the Frobenius law T a = a^p T)")
print("x * T      =", x * theta, "      (coefficients stay on the left)")
print("T^2 * x    =", SkewPoly.theta(phi, 2) * x, "   (iterating phi)")

# -- left normal form -----------------------------------------------------------------

a = (theta - SkewPoly.one(phi)) * x
print("\n(T - 1) * x =", a, "  -- already renormalized: all coefficients left of T")

b = (x + theta) * (x - theta)
print("(x + T)(x - T) =", b, "  -- the ring is not commutative")

# -- the augmentation kills left multiples of (T - 1) -------------------------------------

phi2 = Endo.frobenius(GF2, 2, 2, 1)
q = SkewPoly.from_poly(phi2, parse_poly("x2", GF2, 2), 1)   # x2 * T
t_minus_1 = SkewPoly.theta(phi2) - SkewPoly.one(phi2)
product = q * t_minus_1
print("\nover F_2[x1,x2]:  (x2 T)(T - 1) =", product)
print("augment(sum f_e T^e) = sum f_e   gives:", product.augment(),
      " -- left multiples of (T - 1) always augment to zero")

# -- the opposite ring is the Cartier-side twin ----------------------------------------------

lhs = opposite_product(theta, x)
print("\nopposite product op(T, x) = x * T =", lhs)
print("so the right-handed ring A[eps; phi] is reached by reversing factors;",
      "no separate eps arithmetic is needed")
