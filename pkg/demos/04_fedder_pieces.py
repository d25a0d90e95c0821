"""Frobenius algebra pieces of monomial ideals.

The level-e piece of the algebra attached to a monomial quotient A/I in
characteristic p is the colon ideal (I^[p^e] : I) taken modulo I^[p^e];
for monomial I everything is exact lattice arithmetic on exponents.  Two
levels compose by u_e * u_1^(p^e), so degree-one generation is checked by
comparing the filtration J_e = J_1 * J_(e-1)^[p] + I^[p^e] with the true
colon ideal level by level.

Run: python3 demos/04_fedder_pieces.py
"""

from skoszul import MonomialIdeal, fedder_piece, generation_check

print(__doc__)


def show(ideal, p, e_max=3):
    print(f"I = {ideal}, p = {p}")
    for e in range(1, e_max + 1):
        piece = fedder_piece(ideal, p, e)
        survivors = MonomialIdeal(ideal.nvars, piece.socle_generators) \
            if piece.socle_generators else "(none)"
        print(f"  e={e}: (I^[{piece.q}] : I) = {piece.colon_ideal}"
              f"   new generators mod I^[{piece.q}]: {survivors}")
    report = generation_check(ideal, p, e_max)
    flag = report.payload["degree_one_generated"]
    print(f"  degree-one generated up to e={e_max}: {flag}", end="")
    if report.payload["principal_skew_form"]:
        u = report.payload["u"][0]
        mono = "*".join(f"x{i+1}^{v}" if v > 1 else f"x{i+1}"
                        for i, v in enumerate(u) if v)
        print(f"  (principal, so the algebra has the one-generator skew form"
              f" with u = {mono})")
    else:
        print()
    print()


# a hypersurface: principal with u = (x1 x2)^(p-1)
show(MonomialIdeal(2, [(1, 1)]), 2)
show(MonomialIdeal(2, [(1, 1)]), 3)

# the maximal ideal: the survivor at level one is the socle monomial x1 x2
show(MonomialIdeal(2, [(1, 0), (0, 1)]), 2)

# the triangle x1x2, x2x3, x3x1: still degree-one generated
show(MonomialIdeal(3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)]), 2)

# the path x1x2, x2x3 is NOT: level 2 needs a generator the composition
# law cannot produce, and the gap persists at every later level
show(MonomialIdeal(3, [(1, 1, 0), (0, 1, 1)]), 2)
