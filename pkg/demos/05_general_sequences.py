"""Beyond Frobenius: power maps over Q and non-variable sequences.

The construction needs only a structural endomorphism (phi(y_i) is a
multiple of y_i for every sequence entry), so it runs over the rationals
with the power map x_i -> x_i^t, and over sequences of monomials.  The
short exact sequence of complexes

    0 -> K(y) -> FK -> K(phi(y))[1] -> 0

is verified on matrices, and cycle lifting works over Q as well.

Run: python3 demos/05_general_sequences.py
"""

import random

from skoszul import Endo, GF2, QQ, build_phi_koszul, parse_poly, random_row

print(__doc__)

# -- power endomorphism over the rationals ---------------------------------------------

phi = Endo.power_map(QQ, 2, 3)          # x_i -> x_i^3, s_i = x_i^2
cx = build_phi_koszul(2, phi)
print("n = 2 over Q with", phi.descriptor())
print(cx.verify().render_text())
print()
print(cx.ses_check().render_text())

# -- a pure-power sequence: y_i = x_i^2 -------------------------------------------------

seq = [parse_poly("x1^2", QQ, 2), parse_poly("x2^2", QQ, 2)]
cx2 = build_phi_koszul(2, phi, seq)
print("\nsequence (x1^2, x2^2): multipliers t_i = phi(y_i)/y_i =",
      [str(t) for t in cx2.seq_multipliers])
print("top differential:", cx2.differential(3))
print("identities:", "all pass" if cx2.verify().ok else "FAILED")

rng = random.Random(4)
boundary = random_row(cx2, 2, rng, theta_bound=1, deg_bound=2) * cx2.differential(2)
print("lift of a random boundary over Q:",
      "verified" if cx2.lift_cycle(1, boundary).verified else "FAILED")

# -- monomial sequences inside a bigger ring ----------------------------------------------

frob = Endo.frobenius(GF2, 3, 2, 1)
seq3 = [parse_poly("x1*x2", GF2, 3), parse_poly("x3", GF2, 3)]
cx3 = build_phi_koszul(2, frob, seq3)
print("\nsequence (x1*x2, x3) in F_2[x1,x2,x3]: multipliers",
      [str(t) for t in cx3.seq_multipliers])
print("identities:", "all pass" if cx3.verify(bounds=(1, 2)).ok else "FAILED")
boundary = random_row(cx3, 2, rng, theta_bound=1, deg_bound=2) * cx3.differential(2)
print("lift of a random boundary:",
      "verified" if cx3.lift_cycle(1, boundary).verified else "FAILED")
