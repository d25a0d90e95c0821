import random

import pytest

from skoszul import (CharacteristicMismatch, Endo, FieldSpec, GF2, GF3,
                     NotStructural, Poly, QQ, parse_endo, parse_poly,
                     random_poly)


def test_frobenius_multipliers():
    phi = Endo.frobenius(GF2, 2, 2, 1)
    assert phi.multipliers == [parse_poly("x1", GF2, 2), parse_poly("x2", GF2, 2)]


def test_power_multipliers():
    phi = Endo.power_map(QQ, 1, 3)
    assert phi.multipliers == [parse_poly("x1^2", QQ, 1)]


def test_non_structural_image_rejected():
    # x1 -> x2 does not fix the coordinate ideal
    with pytest.raises(NotStructural):
        Endo.from_images([parse_poly("x2", QQ, 2), parse_poly("x2", QQ, 2)])
    with pytest.raises(NotStructural):
        Endo.custom([Poly.zero(QQ, 1)])


def test_from_images_accepts_structural():
    phi = Endo.from_images([parse_poly("x1^3", QQ, 2),
                            parse_poly("(x1+1)*x2", QQ, 2)])
    assert phi.multipliers == [parse_poly("x1^2", QQ, 2), parse_poly("x1+1", QQ, 2)]


def test_frobenius_over_q_rejected():
    with pytest.raises(CharacteristicMismatch):
        Endo.frobenius(QQ, 2, 2, 1)
    with pytest.raises(CharacteristicMismatch):
        Endo.frobenius(GF3, 2, 2, 1)


def test_apply_frobenius_char2():
    phi = Endo.frobenius(GF2, 1, 2, 1)
    assert phi.apply(parse_poly("x1 + 1", GF2, 1)) == parse_poly("x1^2 + 1", GF2, 1)


def test_apply_preserves_signs_entrywise():
    phi = Endo.frobenius(GF3, 2, 3, 1)
    row = [parse_poly("-x2", GF3, 2), parse_poly("x1", GF3, 2)]
    twisted = phi.apply_matrix([row])[0]
    assert twisted == [parse_poly("-x2^3", GF3, 2), parse_poly("x1^3", GF3, 2)]


def test_identity_multipliers_fix_everything():
    phi = Endo.identity(QQ, 2)
    f = parse_poly("x1^4 - 3*x2 + 1/2", QQ, 2)
    assert phi.apply(f) == f


def test_power_iteration_frobenius():
    phi = Endo.frobenius(GF2, 2, 2, 1)
    sq = phi.power(2)
    # F^2 sends x_i to x_i^4
    assert sq.apply(parse_poly("x1", GF2, 2)) == parse_poly("x1^4", GF2, 2)
    assert sq == Endo.frobenius(GF2, 2, 2, 2)
    assert phi.power(0).apply(parse_poly("x1+x2", GF2, 2)) == parse_poly("x1+x2", GF2, 2)


def test_power_map_iteration():
    phi = Endo.power_map(QQ, 1, 3)
    assert phi.power(2).apply(parse_poly("x1", QQ, 1)) == parse_poly("x1^9", QQ, 1)


def test_power_additivity_on_polys():
    rng = random.Random(23)
    phi = Endo.frobenius(FieldSpec(3), 2, 3, 1)
    for _ in range(30):
        f = random_poly(FieldSpec(3), 2, rng, 3)
        a, b = rng.randint(0, 2), rng.randint(0, 2)
        assert phi.power(a + b).apply(f) == phi.power(a).apply(phi.power(b).apply(f))


def test_endo_is_ring_hom_random():
    rng = random.Random(29)
    multipliers = [parse_poly("x1 + 1", QQ, 2), parse_poly("x1*x2", QQ, 2)]
    phi = Endo.custom(multipliers)
    for _ in range(100):
        f = random_poly(QQ, 2, rng, 3)
        g = random_poly(QQ, 2, rng, 3)
        assert phi.apply(f * g) == phi.apply(f) * phi.apply(g)
        assert phi.apply(f + g) == phi.apply(f) + phi.apply(g)


def test_frobenius_equals_pe_power_map_on_fp():
    # over F_p the e-th Frobenius of any polynomial is its p^e-th power
    rng = random.Random(31)
    for p, e in ((2, 1), (2, 2), (3, 1)):
        field = FieldSpec(p)
        phi = Endo.frobenius(field, 2, p, e)
        for _ in range(40):
            f = random_poly(field, 2, rng, 3)
            assert phi.apply(f) == f ** (p**e)


def test_descriptor_roundtrip():
    for text, field, n in (("frobenius:p=3,e=2", GF3, 2),
                           ("power:t=4", QQ, 3),
                           ("custom:x1+1;x1*x2", QQ, 2)):
        phi = parse_endo(text, field, n)
        assert parse_endo(phi.descriptor(), field, n) == phi


def test_custom_flatness_flag():
    phi = Endo.custom([parse_poly("x1+1", QQ, 1)], flatness_asserted=True)
    assert phi.flatness_asserted
    assert not parse_endo("custom:x1+1", QQ, 1).flatness_asserted
    assert Endo.frobenius(GF2, 1, 2, 1).flatness_asserted
