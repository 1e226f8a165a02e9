import random

import pytest

from gwlines.bipoly import BiPoly, Z1, Z2, ZERO_DEGREE


def rand_poly(rng, max_exp=6, max_terms=8, bound=20):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        key = (rng.randint(0, max_exp), rng.randint(0, max_exp))
        terms[key] = rng.randint(-bound, bound)
    return BiPoly(terms)


def test_zero_coefficients_are_pruned():
    p = BiPoly({(1, 0): 0, (0, 1): 3})
    assert p.as_dict() == {(0, 1): 3}
    assert BiPoly({(2, 2): 0}).is_zero()
    assert BiPoly().is_zero()
    assert not BiPoly()
    assert BiPoly.one()


def test_constructor_rejects_bad_input():
    with pytest.raises(ValueError):
        BiPoly({(-1, 0): 1})
    with pytest.raises(ValueError):
        BiPoly({(0, -2): 1})
    with pytest.raises(TypeError):
        BiPoly({(0.5, 0): 1})
    with pytest.raises(TypeError):
        BiPoly({(0, 0): 1.5})


def test_coeff_and_terms_order():
    p = BiPoly({(2, 0): 1, (0, 2): 2, (1, 1): 3, (0, 0): 4})
    assert p.coeff(1, 1) == 3
    assert p.coeff(5, 5) == 0
    # graded lex: total degree first, then z1 exponent
    assert list(p.terms()) == [((0, 0), 4), ((0, 2), 2), ((1, 1), 3), ((2, 0), 1)]


def test_monomial_and_constant():
    assert BiPoly.monomial(2, 3, 5).as_dict() == {(2, 3): 5}
    assert BiPoly.monomial(1, 0).as_dict() == {(1, 0): 1}
    assert BiPoly.constant(7).coeff(0, 0) == 7
    assert BiPoly.constant(0).is_zero()


def test_addition_and_subtraction():
    p = BiPoly({(1, 0): 2, (0, 1): 1})
    q = BiPoly({(1, 0): -2, (2, 0): 4})
    assert (p + q).as_dict() == {(0, 1): 1, (2, 0): 4}
    assert (p - p).is_zero()
    assert (p + 0) == p
    assert (3 + p).coeff(0, 0) == 3
    assert (p - 1).coeff(0, 0) == -1
    assert (1 - p).coeff(1, 0) == -2


def test_multiplication():
    assert (Z1 * Z2).as_dict() == {(1, 1): 1}
    p = Z1 + Z2
    assert (p * p).as_dict() == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert (2 * p).coeff(1, 0) == 2
    assert (p * 0).is_zero()
    # cancellation inside a product
    assert ((Z1 - Z2) * (Z1 + Z2)).as_dict() == {(2, 0): 1, (0, 2): -1}


def test_power():
    assert (Z1 ** 0) == BiPoly.one()
    assert (Z1 ** 5).as_dict() == {(5, 0): 1}
    p = Z1 + Z2
    assert p ** 3 == p * p * p
    assert BiPoly.zero() ** 0 == BiPoly.one()
    with pytest.raises(ValueError):
        p ** -1


def test_equality_with_ints():
    assert BiPoly.constant(5) == 5
    assert BiPoly.zero() == 0
    assert Z1 != 1
    assert BiPoly() != "0"


def test_homogeneous_degree():
    assert BiPoly({(2, 1): 5, (0, 3): -1}).homogeneous_degree() == 3
    assert BiPoly({(2, 1): 5, (0, 0): 1}).homogeneous_degree() is None
    assert BiPoly().homogeneous_degree() is ZERO_DEGREE
    assert BiPoly.one().homogeneous_degree() == 0


def test_degree_z1():
    assert BiPoly().degree_z1() == -1
    assert BiPoly({(0, 4): 1}).degree_z1() == 0
    assert BiPoly({(3, 0): 1, (1, 5): 2}).degree_z1() == 3


def test_swap_and_symmetry():
    p = BiPoly({(2, 0): 1, (1, 1): 7})
    assert p.swap_vars().as_dict() == {(0, 2): 1, (1, 1): 7}
    assert not p.is_symmetric()
    assert (p + p.swap_vars()).is_symmetric()
    assert BiPoly().is_symmetric()


def test_str_rendering():
    assert str(BiPoly()) == "0"
    assert str(BiPoly.constant(-3)) == "-3"
    assert str(Z1) == "z1"
    assert str(BiPoly({(2, 1): -1})) == "-z1^2*z2"
    assert str(Z1 + Z2 + 1) == "1 + z2 + z1"


def test_ring_axioms_random():
    rng = random.Random(7)
    for _ in range(200):
        p, q, r = (rand_poly(rng) for _ in range(3))
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + BiPoly.zero() == p
        assert p * BiPoly.one() == p
        assert p - p == BiPoly.zero()


def test_pow_matches_repeated_multiplication_random():
    rng = random.Random(11)
    for _ in range(50):
        p = rand_poly(rng, max_exp=3, max_terms=4, bound=5)
        expected = BiPoly.one()
        for e in range(5):
            assert p ** e == expected
            expected = expected * p


def test_swap_is_involution_and_ring_morphism_random():
    rng = random.Random(13)
    for _ in range(100):
        p, q = rand_poly(rng), rand_poly(rng)
        assert p.swap_vars().swap_vars() == p
        assert (p * q).swap_vars() == p.swap_vars() * q.swap_vars()
        assert (p + q).swap_vars() == p.swap_vars() + q.swap_vars()
