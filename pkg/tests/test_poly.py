import random
from fractions import Fraction

import pytest

from skoszul import (ArityMismatch, FieldSpec, GF2, Poly, QQ, parse_poly,
                     random_poly)
from skoszul.poly import grlex_key, monomials_of_degree, used_variable_count


def P(text, field=QQ, n=2):
    return parse_poly(text, field, n)


def test_difference_of_squares_over_q():
    assert P("x1+x2") * P("x1-x2") == P("x1^2 - x2^2")


def test_char_two_freshman_dream():
    f = parse_poly("x1+x2", GF2, 2)
    assert f * f == parse_poly("x1^2 + x2^2", GF2, 2)


def test_scalar_monomial_product():
    assert P("2*x1") * P("3*x1") == P("6*x1^2")


def test_arity_mismatch_rejected():
    with pytest.raises(ArityMismatch):
        P("x1", n=2) * parse_poly("x1", QQ, 3)
    with pytest.raises(ArityMismatch):
        P("x1") * parse_poly("x1", GF2, 2)


def test_grlex_order_x1_dominates():
    # x1^2 > x1*x2 > x2^2 > x1 > x2 > 1
    f = P("1 + x2 + x1 + x2^2 + x1*x2 + x1^2")
    exps = [e for e, _ in f.sorted_terms()]
    assert exps == [(2, 0), (1, 1), (0, 2), (1, 0), (0, 1), (0, 0)]


def test_grlex_key_degree_first():
    assert grlex_key((0, 3)) > grlex_key((2, 0))
    assert grlex_key((2, 0)) > grlex_key((1, 1))


def test_zero_polynomial_degree():
    z = Poly.zero(QQ, 2)
    assert z.is_zero() and z.total_degree() == -1
    assert P("x1") - P("x1") == z


def test_substitute_monomial_images():
    f = P("x1*x2")
    assert f.substitute([P("x1^2"), P("x2^2")]) == P("x1^2*x2^2")


def test_substitute_identity():
    f = P("x1^3 + 2*x1*x2 - 5")
    assert f.substitute([P("x1"), P("x2")]) == f


def test_substitute_additive_char2():
    f = parse_poly("x1 + 1", GF2, 1)
    img = parse_poly("x1^2", GF2, 1)
    assert f.substitute([img]) == parse_poly("x1^2 + 1", GF2, 1)


def test_substitute_is_ring_hom_random():
    rng = random.Random(11)
    for field in (QQ, FieldSpec(5)):
        images = [random_poly(field, 2, rng, 2, 2) + Poly.one(field, 2)
                  for _ in range(2)]
        for _ in range(60):
            f = random_poly(field, 2, rng, 3)
            g = random_poly(field, 2, rng, 3)
            assert (f * g).substitute(images) == \
                f.substitute(images) * g.substitute(images)
            assert (f + g).substitute(images) == \
                f.substitute(images) + g.substitute(images)


def test_ring_axioms_random():
    rng = random.Random(5)
    for field in (GF2, FieldSpec(7), QQ):
        for _ in range(100):
            a = random_poly(field, 3, rng, 4)
            b = random_poly(field, 3, rng, 4)
            c = random_poly(field, 3, rng, 4)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a


def test_pow_matches_repeated_product():
    f = P("x1 + 2*x2 - 1")
    assert f**0 == Poly.one(QQ, 2)
    assert f**3 == f * f * f


def test_divide_exact():
    f = P("x1^2 - x2^2")
    assert f.divide_exact(P("x1 - x2")) == P("x1 + x2")
    assert f.divide_exact(P("x1")) is None
    assert Poly.zero(QQ, 2).divide_exact(P("x1")) == Poly.zero(QQ, 2)


def test_divide_exact_random_roundtrip():
    rng = random.Random(3)
    for field in (GF2, QQ):
        for _ in range(60):
            q = random_poly(field, 2, rng, 3)
            g = random_poly(field, 2, rng, 3)
            if g.is_zero():
                continue
            assert (q * g).divide_exact(g) == q


def test_serialization_rational_strings():
    f = P("3/2*x1^2 + x1*x2 - 2")
    assert f.to_obj() == [["3/2", [2, 0]], ["1/1", [1, 1]], ["-2/1", [0, 0]]]
    assert Poly.from_obj(QQ, 2, f.to_obj()) == f


def test_serialization_gf_ints():
    f = parse_poly("x1 - x2", FieldSpec(5), 2)
    assert f.to_obj() == [[1, [1, 0]], [4, [0, 1]]]


def test_parse_aliases_and_fractions():
    assert P("x*y") == P("x1*x2")
    assert P("1/2*x + y^2") == P("x1").scale(Fraction(1, 2)) + P("x2^2")
    assert parse_poly("1/2", FieldSpec(5), 1) == Poly.constant(FieldSpec(5), 1, 3)


def test_parse_rejects_unknown_variable():
    from skoszul import ParseError
    with pytest.raises(ParseError):
        parse_poly("x5", QQ, 3)
    with pytest.raises(ParseError):
        parse_poly("q + 1", QQ, 2)


def test_used_variable_count():
    assert used_variable_count("x*y + z^2") == 3
    assert used_variable_count("x1*x4") == 4


def test_monomials_of_degree_count():
    # C(d + n - 1, n - 1) monomials of degree d in n variables
    assert len(monomials_of_degree(3, 4)) == 15
    assert monomials_of_degree(2, 1) == [(1, 0), (0, 1)]


def test_str_roundtrip_through_parser():
    rng = random.Random(19)
    for field in (QQ, FieldSpec(3)):
        for _ in range(40):
            f = random_poly(field, 3, rng, 4)
            assert parse_poly(str(f), field, 3) == f
