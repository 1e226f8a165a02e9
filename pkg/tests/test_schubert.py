import random

import pytest

from gwlines.bipoly import BiPoly, Z1, Z2
from gwlines.residue import euler_poly, gw_n_point_residue, w_poly
from gwlines.schubert import (
    Partition2,
    SchubertClass,
    gw_n_point_schubert,
    integrate_g2n,
    pieri_multiply,
    schur_expand,
    schur_poly,
)


def rand_class(rng, box, max_terms=5, bound=9):
    coeffs = {}
    for _ in range(rng.randint(0, max_terms)):
        a = rng.randint(0, box)
        b = rng.randint(0, a)
        coeffs[Partition2(a, b)] = rng.randint(-bound, bound)
    return SchubertClass(box, coeffs)


def rand_symmetric(rng, box, max_terms=4, bound=9):
    p = BiPoly.zero()
    for _ in range(rng.randint(0, max_terms)):
        a = rng.randint(0, box)
        b = rng.randint(0, a)
        p = p + rng.randint(-bound, bound) * schur_poly(Partition2(a, b))
    return p


def test_partition_validation_and_order():
    assert Partition2(3, 1).weight() == 4
    assert Partition2(0, 0).weight() == 0
    assert Partition2(1, 0) < Partition2(2, 0) < Partition2(2, 1)
    with pytest.raises(ValueError):
        Partition2(1, 2)
    with pytest.raises(ValueError):
        Partition2(-1, -1)
    with pytest.raises(TypeError):
        Partition2(1.0, 0)


def test_class_box_truncation_and_pruning():
    c = SchubertClass(2, {Partition2(3, 1): 5, Partition2(2, 1): 4, Partition2(1, 1): 0})
    assert c.as_dict() == {Partition2(2, 1): 4}
    assert c.coeff(Partition2(3, 1)) == 0
    assert SchubertClass(0, {Partition2(0, 0): 1}).coeff(Partition2(0, 0)) == 1
    with pytest.raises(ValueError):
        SchubertClass(-1)
    with pytest.raises(TypeError):
        SchubertClass(2, {(1, 0): 1})


def test_class_addition():
    box = 3
    c = SchubertClass(box, {Partition2(1, 0): 2})
    d = SchubertClass(box, {Partition2(1, 0): -2, Partition2(2, 2): 1})
    assert (c + d).as_dict() == {Partition2(2, 2): 1}
    with pytest.raises(ValueError):
        c + SchubertClass(4, {Partition2(1, 0): 1})


def test_schur_expand_basics():
    assert schur_expand(BiPoly.one(), 3).as_dict() == {Partition2(0, 0): 1}
    assert schur_expand(Z1 + Z2, 3).as_dict() == {Partition2(1, 0): 1}
    with pytest.raises(ValueError):
        schur_expand(Z1, 3)


def test_schur_expand_euler_classes():
    assert schur_expand(euler_poly(3), 2).as_dict() == {Partition2(2, 2): 27}
    assert schur_expand(euler_poly(3), 3).as_dict() == {
        Partition2(3, 1): 18,
        Partition2(2, 2): 27,
    }
    assert schur_expand(euler_poly(5), 3).as_dict() == {Partition2(3, 3): 2875}


def test_schur_poly_cases():
    assert schur_poly(Partition2(0, 0)) == BiPoly.one()
    assert schur_poly(Partition2(1, 0)) == Z1 + Z2
    assert schur_poly(Partition2(1, 1)) == Z1 * Z2
    assert schur_poly(Partition2(2, 1)) == Z1 * Z2 * (Z1 + Z2)


def test_bialternant_inverts_evaluation():
    # expanding s_(a,b) itself must return exactly that partition
    for box in range(0, 6):
        for a in range(0, box + 1):
            for b in range(0, a + 1):
                part = Partition2(a, b)
                expanded = schur_expand(schur_poly(part), box)
                assert expanded.as_dict() == {part: 1}


def test_expand_then_evaluate_is_identity():
    # within the box, schur_expand is inverse to summing c * s_(a,b)
    rng = random.Random(31)
    for _ in range(60):
        box = rng.randint(0, 5)
        p = rand_symmetric(rng, box)
        expanded = schur_expand(p, box)
        rebuilt = BiPoly.zero()
        for part, c in expanded.items():
            rebuilt = rebuilt + c * schur_poly(part)
        assert rebuilt == p


def test_pieri_textbook_cases():
    box4 = 2  # G(2,4)
    c = pieri_multiply(SchubertClass(box4, {Partition2(1, 0): 1}), 1)
    assert c.as_dict() == {Partition2(2, 0): 1, Partition2(1, 1): 1}
    assert pieri_multiply(SchubertClass(box4, {Partition2(2, 2): 1}), 1).is_zero()
    box5 = 3  # G(2,5)
    c = pieri_multiply(SchubertClass(box5, {Partition2(1, 0): 1}), 2)
    assert c.as_dict() == {Partition2(3, 0): 1, Partition2(2, 1): 1}


def test_pieri_zero_is_identity():
    rng = random.Random(37)
    for _ in range(30):
        c = rand_class(rng, rng.randint(0, 5))
        assert pieri_multiply(c, 0) == c
    with pytest.raises(ValueError):
        pieri_multiply(rand_class(rng, 3), -1)


def test_pieri_commutes():
    rng = random.Random(41)
    for _ in range(60):
        box = rng.randint(0, 5)
        c = rand_class(rng, box)
        p, q = rng.randint(0, 4), rng.randint(0, 4)
        assert pieri_multiply(pieri_multiply(c, p), q) == pieri_multiply(
            pieri_multiply(c, q), p
        )


def test_pieri_matches_polynomial_multiplication():
    # sigma_a acts on the Chern-root picture as multiplication by w_(a+1)
    rng = random.Random(43)
    for _ in range(80):
        box = rng.randint(0, 5)
        p = rand_symmetric(rng, box)
        a = rng.randint(0, box)
        via_poly = schur_expand(p * w_poly(a + 1), box)
        via_pieri = pieri_multiply(schur_expand(p, box), a)
        assert via_poly == via_pieri


def test_integrate_g2n():
    assert integrate_g2n(SchubertClass.point(3)) == 1
    assert integrate_g2n(SchubertClass(3, {Partition2(1, 0): 5})) == 0
    assert integrate_g2n(schur_expand(euler_poly(3), 2)) == 27
    assert integrate_g2n(SchubertClass.fundamental(0)) == 1


def test_gw_n_point_schubert_values():
    assert gw_n_point_schubert(4, 3, [1]) == 27
    assert gw_n_point_schubert(5, 5, [1, 1]) == 2875
    assert gw_n_point_schubert(5, 5, [1, 2]) == 0


def test_gw_n_point_schubert_validation():
    with pytest.raises(ValueError):
        gw_n_point_schubert(2, 1, [1])
    with pytest.raises(ValueError):
        gw_n_point_schubert(5, 0, [1])
    with pytest.raises(ValueError):
        gw_n_point_schubert(5, 5, [])
    with pytest.raises(ValueError):
        gw_n_point_schubert(5, 5, [0, 1])
    with pytest.raises(ValueError):
        gw_n_point_schubert(5, 5, [5, 1])  # sigma_4 does not fit in the box of G(2,5)


def test_cross_engine_random():
    rng = random.Random(47)
    for _ in range(150):
        ambient = rng.randint(3, 9)
        degree = rng.randint(1, ambient + 2)
        n = rng.randint(1, 4)
        powers = [rng.randint(1, ambient - 1) for _ in range(n)]
        assert gw_n_point_schubert(ambient, degree, powers) == gw_n_point_residue(
            ambient, degree, powers
        )
