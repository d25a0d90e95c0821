import random

import pytest

from skoszul import (GF2, InvalidExponent, MonomialIdeal, Poly, QQ,
                     UndefinedColon, parse_poly)
from helpers import (assert_same_members, colon_mask_oracle,
                     intersect_mask_oracle, membership_mask, monomial_grid)


def ideal(*gens, n=2):
    return MonomialIdeal(n, gens)


def random_ideal(rng, nvars, max_gens=4, max_exp=3):
    count = rng.randint(1, max_gens)
    gens = [tuple(rng.randint(0, max_exp) for _ in range(nvars))
            for _ in range(count)]
    return MonomialIdeal(nvars, gens)


def test_minimal_generators():
    # x divides x^2 and x*y, so they are redundant
    assert ideal((1, 0), (2, 0), (1, 1)).gens == ((1, 0),)
    assert MonomialIdeal.zero(2).is_zero()
    assert MonomialIdeal.unit(2).is_unit()


def test_colon_square_by_product():
    J = ideal((2, 2))
    I = ideal((1, 1))
    got = J.colon(I)
    assert got == ideal((1, 1))
    monos = monomial_grid(2, 4)
    assert_same_members(got, colon_mask_oracle(J, I, monos), monos)


def test_colon_by_unit():
    assert ideal((1, 0)).colon(MonomialIdeal.unit(2)) == ideal((1, 0))


def test_colon_powers_by_variables():
    J = ideal((2, 0), (0, 2))
    I = ideal((1, 0), (0, 1))
    got = J.colon(I)
    assert got == ideal((2, 0), (1, 1), (0, 2))
    monos = monomial_grid(2, 4)
    assert_same_members(got, colon_mask_oracle(J, I, monos), monos)


def test_colon_zero_divisor_rejected():
    with pytest.raises(UndefinedColon):
        ideal((1, 0)).colon(MonomialIdeal.zero(2))


def test_intersect_coprime():
    assert ideal((1, 0)).intersect(ideal((0, 1))) == ideal((1, 1))


def test_intersect_with_overlap():
    J1 = ideal((2, 0), (1, 1))
    J2 = ideal((0, 1))
    got = J1.intersect(J2)
    assert got == ideal((1, 1))
    monos = monomial_grid(2, 3)
    assert_same_members(got, intersect_mask_oracle(J1, J2, monos), monos)


def test_intersect_idempotent():
    J = ideal((2, 1), (0, 3))
    assert J.intersect(J) == J


def test_bracket_power():
    assert ideal((1, 1)).bracket_power(2) == ideal((2, 2))
    assert ideal((1, 0), (0, 1)).bracket_power(3) == ideal((3, 0), (0, 3))
    J = ideal((2, 1), (0, 3))
    assert J.bracket_power(1) == J
    with pytest.raises(InvalidExponent):
        J.bracket_power(0)


def test_bracket_power_composes():
    rng = random.Random(2)
    for _ in range(40):
        J = random_ideal(rng, 3)
        q, r = rng.randint(1, 3), rng.randint(1, 3)
        assert J.bracket_power(q).bracket_power(r) == J.bracket_power(q * r)


def test_reduce_mod():
    f = parse_poly("x1^2*x2 + x1", QQ, 2)
    assert ideal((2, 0)).reduce(f) == parse_poly("x1", QQ, 2)
    assert ideal((1, 0), (0, 1)).reduce(parse_poly("x1*x2", QQ, 2)).is_zero()
    one = Poly.one(QQ, 2)
    assert ideal((1, 0)).reduce(one) == one


def test_reduce_is_multiplicative_up_to_ideal():
    rng = random.Random(9)
    from skoszul import random_poly
    for _ in range(60):
        I = random_ideal(rng, 2)
        f = random_poly(GF2, 2, rng, 4)
        g = random_poly(GF2, 2, rng, 4)
        assert I.reduce(f * g) == I.reduce(I.reduce(f) * g)


def test_colon_membership_equivalence_random():
    # m in (J : I) iff m*g in J for all generators g, degree <= 8, n <= 3
    rng = random.Random(17)
    for nvars in (1, 2, 3):
        monos = monomial_grid(nvars, 8)
        for _ in range(25):
            J = random_ideal(rng, nvars)
            I = random_ideal(rng, nvars)
            if I.is_zero():
                continue
            assert_same_members(J.colon(I), colon_mask_oracle(J, I, monos), monos)


def test_sum_and_product():
    J = ideal((2, 0))
    K = ideal((0, 2))
    assert J + K == ideal((2, 0), (0, 2))
    assert J.product(K) == ideal((2, 2))


def test_membership_and_containment():
    J = ideal((1, 1), (3, 0))
    assert J.contains_monomial((2, 1))
    assert not J.contains_monomial((2, 0))
    assert J.contains_ideal(ideal((4, 4)))


def test_from_polys_requires_monomials():
    from skoszul import ArityMismatch
    with pytest.raises(ArityMismatch):
        MonomialIdeal.from_polys([parse_poly("x1 + x2", QQ, 2)])
    got = MonomialIdeal.from_polys([parse_poly("x1*x2^2", QQ, 2)])
    assert got == ideal((1, 2))


def test_serialization_sorted():
    J = ideal((0, 2), (2, 0), (1, 1))
    assert J.to_obj() == [[2, 0], [1, 1], [0, 2]]
    assert str(J) == "(x1^2, x1*x2, x2^2)"
