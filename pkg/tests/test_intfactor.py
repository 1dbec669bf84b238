"""Integer polynomial factorization tests.

The brute-force irreducibility oracles (rational-root exhaustion, bounded
quadratic-pair search) are independent of the Zassenhaus machinery they
check.
"""

import random
from itertools import product

import pytest

from composita.errors import CapExceededError
from composita.intfactor import (DEFAULT_DEGREE_CAP, factor_int_poly,
                                 is_irreducible, try_exact_div)
from composita.ratpoly import RatPoly


# --- independent oracles ---------------------------------------------------

def divisors(n):
    n = abs(int(n))
    return [d for d in range(1, n + 1) if n % d == 0]


def has_rational_root(ints):
    """Rational root theorem by exhaustive divisor check."""
    f = RatPoly(ints)
    const = next((c for c in ints if c != 0), 0)
    lead = ints[-1]
    from fractions import Fraction
    for p in divisors(const):
        for q in divisors(lead):
            for sign in (1, -1):
                if f.eval(Fraction(sign * p, q)) == 0:
                    return True
    return False


def quadratic_factor_search(ints, coeff_bound):
    """Search integer quadratic factors a x^2 + b x + c by brute force."""
    f = RatPoly(ints)
    for a, b, c in product(range(1, coeff_bound + 1),
                           range(-coeff_bound, coeff_bound + 1),
                           range(-coeff_bound, coeff_bound + 1)):
        q = RatPoly([c, b, a])
        if q.degree == 2 and (f % q).is_zero():
            return q
    return None


def oracle_irreducible_deg3(ints):
    return not has_rational_root(ints)


def oracle_irreducible_deg4(ints, coeff_bound=8):
    return (not has_rational_root(ints)
            and quadratic_factor_search(ints, coeff_bound) is None)


def reassemble(content, factors):
    out = RatPoly.constant(content)
    for g, m in factors:
        out = out * g ** m
    return out


# --- fixed examples ---------------------------------------------------------

def test_difference_of_squares():
    content, factors = factor_int_poly([-1, 0, 1])
    assert content == 1
    assert factors == [(RatPoly([-1, 1]), 1), (RatPoly([1, 1]), 1)]


def test_x_cubed_minus_two_irreducible():
    ints = [-2, 0, 0, 1]
    assert oracle_irreducible_deg3(ints)  # no rational root among divisor pairs
    content, factors = factor_int_poly(ints)
    assert content == 1
    assert factors == [(RatPoly(ints), 1)]
    assert is_irreducible(ints)


def test_x4_plus_4_splits():
    # (x^2-2x+2)(x^2+2x+2) expands exactly to x^4 + 4:
    assert RatPoly([2, -2, 1]) * RatPoly([2, 2, 1]) == RatPoly([4, 0, 0, 0, 1])
    content, factors = factor_int_poly([4, 0, 0, 0, 1])
    assert content == 1
    assert factors == [(RatPoly([2, -2, 1]), 1), (RatPoly([2, 2, 1]), 1)]


def test_content_sign_and_multiplicity():
    # -18 (x-1)^2 (x^2+1)
    f = RatPoly.constant(-18) * RatPoly([-1, 1]) ** 2 * RatPoly([1, 0, 1])
    content, factors = factor_int_poly(f)
    assert content == -18
    assert factors == [(RatPoly([-1, 1]), 2), (RatPoly([1, 0, 1]), 1)]
    assert reassemble(content, factors) == f


def test_power_of_x_and_constants():
    content, factors = factor_int_poly([0, 0, 0, 5])
    assert content == 5
    assert factors == [(RatPoly.x(), 3)]
    assert factor_int_poly([7]) == (7, [])
    with pytest.raises(ValueError):
        factor_int_poly([0])


def test_degree_cap():
    f = RatPoly([-1] + [0] * DEFAULT_DEGREE_CAP + [1])
    with pytest.raises(CapExceededError):
        factor_int_poly(f)


def test_cyclotomic_like():
    # x^4 - 1 = (x-1)(x+1)(x^2+1)
    content, factors = factor_int_poly([-1, 0, 0, 0, 1])
    assert [g.coeffs for g, _ in factors] == [(-1, 1), (1, 1), (1, 0, 1)]
    # x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
    content, factors = factor_int_poly([-1, 0, 0, 0, 0, 0, 1])
    assert sorted(g.degree for g, _ in factors) == [1, 1, 2, 2]
    assert reassemble(content, factors) == RatPoly([-1, 0, 0, 0, 0, 0, 1])


def test_big_coefficient_split():
    # Product of two cubics with fat coefficients must reconstruct exactly.
    a = RatPoly([-2, 0, 0, 1])            # x^3 - 2
    b = RatPoly([97, -35, 11, 1])
    content, factors = factor_int_poly(a * b)
    assert reassemble(content, factors) == a * b
    assert sorted(g.degree for g, _ in factors) == [3, 3]
    for g, _ in factors:
        assert oracle_irreducible_deg3(g.coeffs)


def test_swinnerton_dyer_style():
    # min poly of sqrt(2)+sqrt(3): x^4 - 10x^2 + 1; irreducible but splits
    # mod every prime, which exercises recombination of 4 modular factors.
    ints = [1, 0, -10, 0, 1]
    assert oracle_irreducible_deg4(ints, coeff_bound=12)
    content, factors = factor_int_poly(ints)
    assert factors == [(RatPoly(ints), 1)]


def test_try_exact_div():
    a = RatPoly([2, 3, 1])   # (x+1)(x+2)
    assert try_exact_div(list(a.coeffs), [1, 1]) == [2, 1]
    assert try_exact_div(list(a.coeffs), [1, 2]) is None  # 2x+1 does not divide


def test_randomized_products_reconstruct():
    rng = random.Random(11)
    for _ in range(20):
        n_parts = rng.randint(1, 3)
        f = RatPoly.constant(rng.choice([-3, -1, 1, 2]))
        for _ in range(n_parts):
            deg = rng.randint(1, 3)
            coeffs = [rng.randint(-6, 6) for _ in range(deg)] + [rng.randint(1, 4)]
            f = f * RatPoly(coeffs)
        if f.degree < 1:
            continue
        content, factors = factor_int_poly(f)
        assert reassemble(content, factors) == f
        for g, _ in factors:
            if g.degree <= 3 and g.degree >= 2:
                assert not has_rational_root(list(g.coeffs))
            if g.degree == 4:
                assert oracle_irreducible_deg4(list(g.coeffs))
