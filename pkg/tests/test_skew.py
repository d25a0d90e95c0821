import random

import pytest

from skoszul import (Endo, EndoMismatch, GF2, GF3, MonomialIdeal, Poly, QQ,
                     ShapeMismatch, SkewMatrix, SkewPoly, opposite_product,
                     parse_poly, random_skew)


def frob(field, n, p, e=1):
    return Endo.frobenius(field, n, p, e)


def sp(endo, text, theta=0):
    return SkewPoly.from_poly(endo, parse_poly(text, endo.field, endo.nvars), theta)


def test_theta_pushes_past_variable():
    phi = frob(GF3, 1, 3)
    theta = SkewPoly.theta(phi)
    assert theta * sp(phi, "x1") == sp(phi, "x1^3", theta=1)


def test_product_with_twist_char2():
    phi = frob(GF2, 2, 2)
    lhs = sp(phi, "x1", theta=1) * sp(phi, "x2", theta=1)
    assert lhs == sp(phi, "x1*x2^2", theta=2)


def test_bilinearity_with_law():
    phi = frob(GF3, 1, 3)
    theta = SkewPoly.theta(phi)
    got = (theta - SkewPoly.one(phi)) * sp(phi, "x1")
    assert got == sp(phi, "x1^3", theta=1) - sp(phi, "x1")


def test_left_normal_form_unique():
    phi = frob(GF2, 1, 2)
    a = SkewPoly.from_coeffs(phi, [(0, parse_poly("x1", GF2, 1)),
                                   (2, parse_poly("x1+1", GF2, 1))])
    assert a.theta_degree() == 2
    assert a.coefficient(1).is_zero()
    assert (a - a).is_zero()


def test_endo_mismatch_rejected():
    a = sp(frob(GF2, 1, 2), "x1")
    b = sp(Endo.power_map(GF2, 1, 3), "x1")
    with pytest.raises(EndoMismatch):
        a * b


def test_frobenius_and_power_map_agree_when_maps_agree():
    # x -> x^2 is both frobenius(2, 1) and power(t=2) over F_2
    assert frob(GF2, 1, 2) == Endo.power_map(GF2, 1, 2)


def test_theta_power_law_random():
    rng = random.Random(41)
    from skoszul import random_poly
    for field, make in ((GF2, lambda: frob(GF2, 2, 2)),
                        (QQ, lambda: Endo.power_map(QQ, 2, 3))):
        phi = make()
        for _ in range(50):
            f = random_poly(field, 2, rng, 3)
            e = rng.randint(0, 4)
            lhs = SkewPoly.theta(phi, e) * SkewPoly.from_poly(phi, f)
            rhs = SkewPoly.from_poly(phi, phi.power(e).apply(f), e)
            assert lhs == rhs


def test_associativity_distributivity_random():
    rng = random.Random(43)
    phi = frob(GF3, 2, 3)
    for _ in range(150):
        a = random_skew(phi, rng, 3, 3)
        b = random_skew(phi, rng, 3, 3)
        c = random_skew(phi, rng, 3, 3)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c


def test_opposite_product_reverses():
    phi = frob(GF2, 1, 2)
    a = sp(phi, "x1", theta=1)
    b = sp(phi, "x1")
    assert opposite_product(a, b) == b * a
    assert opposite_product(a, b) != a * b  # the ring really is noncommutative


def test_augment_single_term():
    phi = frob(GF2, 2, 2)
    assert sp(phi, "x1", theta=2).augment() == parse_poly("x1", GF2, 2)


def test_augment_kills_theta_minus_one():
    phi = frob(GF2, 2, 2)
    theta_minus_1 = SkewPoly.theta(phi) - SkewPoly.one(phi)
    assert theta_minus_1.augment().is_zero()
    got = (sp(phi, "x2", theta=1) * theta_minus_1)
    # expands to x2 theta^2 - x2 theta, whose coefficients cancel
    assert got == SkewPoly.from_coeffs(
        phi, [(2, parse_poly("x2", GF2, 2)), (1, parse_poly("-x2", GF2, 2))])
    assert got.augment().is_zero()


def test_augment_kills_left_multiples_random():
    rng = random.Random(47)
    phi = frob(GF3, 2, 3)
    theta_minus_1 = SkewPoly.theta(phi) - SkewPoly.one(phi)
    variables = MonomialIdeal(2, [(1, 0), (0, 1)])
    for _ in range(200):
        q = random_skew(phi, rng, 3, 3)
        assert (q * theta_minus_1).augment().is_zero()
        x1 = sp(phi, "x1")
        assert variables.reduce((q * x1).augment()).is_zero()


def test_matrix_identity_and_shapes():
    phi = frob(GF2, 1, 2)
    m = SkewMatrix.from_polys(phi, [[parse_poly("x1", GF2, 1)],
                                    [parse_poly("x1+1", GF2, 1)]])
    assert SkewMatrix.identity(phi, 2) * m == m
    with pytest.raises(ShapeMismatch):
        m * m


def test_matrix_single_entry_law():
    phi = frob(GF3, 1, 3)
    row = SkewMatrix(phi, [[SkewPoly.theta(phi)]])
    col = SkewMatrix(phi, [[sp(phi, "x1")]])
    assert (row * col)[0, 0] == sp(phi, "x1^3", theta=1)


def test_matrix_row_times_column_vanishes_n1():
    # (s1 - T, phi(x1)) * (x1, T - 1)^T = 0, one twist application suffices
    for phi in (frob(GF2, 1, 2), Endo.power_map(QQ, 1, 3)):
        s1 = phi.multipliers[0]
        row = SkewMatrix(phi, [[SkewPoly.from_poly(phi, s1) - SkewPoly.theta(phi),
                                SkewPoly.from_poly(phi, phi.images()[0])]])
        col = SkewMatrix(phi, [[SkewPoly.from_poly(
                                    phi, Poly.variable(phi.field, 1, 1))],
                               [SkewPoly.theta(phi) - SkewPoly.one(phi)]])
        assert (row * col).is_zero()


def test_matrix_mul_associative_random():
    rng = random.Random(53)
    phi = frob(GF2, 2, 2)
    for _ in range(25):
        a = SkewMatrix(phi, [[random_skew(phi, rng, 2, 2) for _ in range(3)]
                             for _ in range(2)])
        b = SkewMatrix(phi, [[random_skew(phi, rng, 2, 2) for _ in range(2)]
                             for _ in range(3)])
        c = SkewMatrix(phi, [[random_skew(phi, rng, 2, 2) for _ in range(2)]
                             for _ in range(2)])
        assert (a * b) * c == a * (b * c)


def test_serialization_roundtrip():
    phi = frob(GF2, 2, 2)
    a = SkewPoly.from_coeffs(phi, [(0, parse_poly("x1+x2", GF2, 2)),
                                   (3, parse_poly("x1*x2", GF2, 2))])
    obj = a.to_obj()
    assert obj[0][0] == 0 and obj[1][0] == 3  # ascending theta degree
    assert SkewPoly.from_obj(phi, obj) == a
    mat = SkewMatrix(phi, [[a, SkewPoly.one(phi)]])
    assert SkewMatrix.from_obj(phi, mat.to_obj()) == mat
