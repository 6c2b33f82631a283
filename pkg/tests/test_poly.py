from __future__ import annotations

import random
from fractions import Fraction

import pytest

from coxbasis.errors import NotDivisible
from coxbasis.poly import (
    Poly,
    count_monomials,
    default_names,
    grlex_key,
    linear_form_order,
    monomials_of_degree,
    product,
)


def x_y() -> tuple[Poly, Poly]:
    return Poly.variable(2, 0), Poly.variable(2, 1)


def random_poly(rng: random.Random, nvars: int, max_deg: int, nterms: int) -> Poly:
    out = Poly.zero(nvars)
    for _ in range(nterms):
        exps = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        out = out + Poly.monomial(nvars, exps, Fraction(rng.randint(-5, 5)))
    return out


def test_constructors_and_arithmetic():
    x, y = x_y()
    one = Poly.constant(2, 1)
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert p.total_degree() == 2
    assert p.is_homogeneous()
    assert (x + one) ** 3 == x ** 3 + x ** 2 * 3 + x * 3 + one


def test_zero_polynomial_degree():
    z = Poly.zero(2)
    assert z.is_zero
    assert z.total_degree() == float("-inf")
    assert z.is_homogeneous()


def test_partial_derivative():
    x, y = x_y()
    p = x ** 3 * y + y ** 2
    assert p.partial(0) == x ** 2 * y * 3
    assert p.partial(1) == x ** 3 + y * 2


def test_substitute_is_ring_hom():
    rng = random.Random(7)
    x, y = x_y()
    one = Poly.constant(2, 1)
    sub = [x + y * 2, x * x - one]
    for _ in range(20):
        p = random_poly(rng, 2, 3, 4)
        q = random_poly(rng, 2, 3, 4)
        assert (p * q).substitute(sub) == p.substitute(sub) * q.substitute(sub)
        assert (p + q).substitute(sub) == p.substitute(sub) + q.substitute(sub)


def test_divrem_identity_and_remainder_reduced():
    rng = random.Random(3)
    for _ in range(30):
        f = random_poly(rng, 2, 4, 5)
        g = random_poly(rng, 2, 2, 3)
        if g.is_zero:
            continue
        q, r = f.divrem(g)
        assert q * g + r == f
        lt = g.leading_term()[0]
        for exps in r.terms:
            assert not all(e >= le for e, le in zip(exps, lt))


def test_divide_exact_and_not_divisible():
    x, y = x_y()
    one = Poly.constant(2, 1)
    p = (x + y) * (x * x + y)
    assert p.divide_exact(x + y) == x * x + y
    with pytest.raises(NotDivisible) as info:
        (x * x + one).divide_exact(x + y)
    assert not info.value.remainder.is_zero


def test_division_by_linear_forms_chain():
    # x^2*y - y^3 = y(x-y)(x+y), so each factor divides exactly once.
    x, y = x_y()
    p = x * x * y - y ** 3
    assert linear_form_order(p, x - y) == 1
    assert linear_form_order(p, x + y) == 1
    assert linear_form_order(p, y) == 1
    assert linear_form_order(p, x) == 0
    assert linear_form_order(Poly.zero(2), x - y) == float("inf")
    assert linear_form_order((x - y) ** 4 * y, x - y) == 4


def test_linear_form_order_rejects_nonlinear():
    x, y = x_y()
    with pytest.raises(ValueError):
        linear_form_order(x, x * y)
    with pytest.raises(ValueError):
        linear_form_order(x, Poly.zero(2))


def test_grlex_order():
    # Degree first, then lexicographic on exponents.
    assert grlex_key((0, 2)) < grlex_key((3, 0))
    assert grlex_key((1, 1)) < grlex_key((2, 0))
    assert grlex_key((0, 3)) < grlex_key((1, 2))


def test_monomials_of_degree():
    mons = list(monomials_of_degree(2, 3))
    assert mons == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert len(list(monomials_of_degree(3, 4))) == count_monomials(3, 4) == 15


def test_leading_term_and_monic():
    x, y = x_y()
    p = x * y * 3 + y ** 2 * 6
    assert p.leading_term() == ((1, 1), Fraction(3))
    assert p.monic() == x * y + y ** 2 * 2


def test_homogeneous_detection():
    x, y = x_y()
    assert (x * y + y ** 2).is_homogeneous()
    assert (x * y + y ** 2).homogeneous_degree() == 2
    assert not (x + y ** 2).is_homogeneous()


def test_product_helper():
    x, y = x_y()
    assert product([x, y, x + y], 2) == x * y * (x + y)
    assert product([], 2) == Poly.constant(2, 1)


def test_to_str_and_names():
    x, y = x_y()
    p = x ** 2 - y * 2 + Poly.constant(2, 1)
    assert p.to_str(("x", "y")) == "x^2 - 2*y + 1"
    assert default_names(2) == ["x", "y"]
    assert default_names(4) == ["x1", "x2", "x3", "x4"]
    assert Poly.zero(2).to_str(("x", "y")) == "0"
