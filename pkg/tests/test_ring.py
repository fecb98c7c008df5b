import random
from fractions import Fraction

import pytest

from quadalg.ring import (
    ExactDivisionError,
    LaurentPoly,
    RatQ,
    cyclotomic,
    divide_exact,
    parse_laurent,
    q_factorial,
    q_int,
    vanishes_at_root_of_unity,
)

Q = LaurentPoly.q
ONE = LaurentPoly.one()


def rand_poly(rng, span=4, nterms=4):
    terms = {}
    for _ in range(rng.randint(0, nterms)):
        terms[rng.randint(-span, span)] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return LaurentPoly(terms)


# ---------------------------------------------------------------- q_int

def test_q_int_small_values():
    assert q_int(0) == LaurentPoly.zero()
    assert q_int(1) == ONE
    assert q_int(2) == LaurentPoly({1: 1, -1: 1})          # q + q^-1
    assert q_int(3) == LaurentPoly({2: 1, 0: 1, -2: 1})    # q^2 + 1 + q^-2


def test_q_int_rejects_negative():
    with pytest.raises(ValueError):
        q_int(-1)


def test_q_int_difference_quotient():
    # [n]_q * (q - q^-1) == q^n - q^-n, checked multiplicatively
    mu = Q(1) - Q(-1)
    for n in range(21):
        assert q_int(n) * mu == Q(n) - Q(-n)


def test_q_factorial():
    assert q_factorial((0, 0, 0, 0)) == ONE
    assert q_factorial((2, 0, 0, 0)) == LaurentPoly({1: 1, -1: 1})
    assert q_factorial((1, 1, 1, 1)) == ONE
    assert q_factorial((2, 2, 0, 0)) == q_int(2) * q_int(2)


# ---------------------------------------------------------- ring axioms

def test_ring_axioms_random():
    rng = random.Random(20240811)
    for _ in range(200):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_no_zero_coefficients_stored():
    p = LaurentPoly({2: 1}) - LaurentPoly({2: 1}) + LaurentPoly({0: 3})
    assert set(p.terms) == {0}
    assert not (Q(1) - Q(1))


# -------------------------------------------------------- exact division

def test_divide_exact_examples():
    mu = Q(1) - Q(-1)
    assert divide_exact(Q(2) - Q(-2), mu) == LaurentPoly({1: 1, -1: 1})
    assert divide_exact(mu, mu) == ONE
    # (q^(x-2) - q^(2-x)) / (q - q^-1) at x = 5 is [3]_q
    assert divide_exact(Q(3) - Q(-3), mu) == LaurentPoly({2: 1, 0: 1, -2: 1})


def test_divide_exact_roundtrip_random():
    rng = random.Random(5)
    done = 0
    while done < 100:
        a, b = rand_poly(rng), rand_poly(rng)
        if not a or not b:
            continue
        assert divide_exact(a * b, b) == a
        done += 1


def test_divide_exact_rejects_inexact():
    with pytest.raises(ExactDivisionError):
        divide_exact(Q(1) + ONE, Q(1) - Q(-1))
    with pytest.raises(ExactDivisionError):
        divide_exact(ONE, LaurentPoly.zero())


# ------------------------------------------------------- roots of unity

def test_cyclotomic_small():
    assert cyclotomic(1) == (-1, 1)
    assert cyclotomic(2) == (1, 1)
    assert cyclotomic(3) == (1, 1, 1)
    assert cyclotomic(4) == (1, 0, 1)
    assert cyclotomic(6) == (1, -1, 1)
    assert cyclotomic(12) == (1, 0, -1, 0, 1)


def test_vanishes_examples():
    assert vanishes_at_root_of_unity(Q(2) - Q(-2), 4) is True
    # at a primitive cube root w: w + w^-1 = -1 != 0
    assert vanishes_at_root_of_unity(Q(1) + Q(-1), 3) is False
    assert vanishes_at_root_of_unity(LaurentPoly.zero(), 7) is True


def test_vanishes_qm_minus_one():
    for m in range(1, 13):
        assert vanishes_at_root_of_unity(Q(m) - ONE, m) is True


def test_vanishes_against_numeric_oracle():
    # independent check: evaluate at every primitive m-th root numerically
    import cmath
    from math import gcd

    rng = random.Random(99)
    polys = [rand_poly(rng) for _ in range(20)] + [q_int(n) for n in range(1, 7)]
    for p in polys:
        for m in range(1, 9):
            num = all(
                abs(sum(complex(c) * cmath.exp(2j * cmath.pi * k / m) ** e
                        for e, c in p.terms.items())) < 1e-9
                for k in range(m) if gcd(k, m) == 1
            )
            assert vanishes_at_root_of_unity(p, m) == num, (p, m)


# ------------------------------------------------------ text/JSON forms

def test_str_canonical():
    assert str(LaurentPoly.zero()) == "0"
    assert str(q_int(2)) == "q + q^-1"
    assert str(q_int(3)) == "q^2 + 1 + q^-2"
    assert str(LaurentPoly({1: -1, -1: 1})) == "-q + q^-1"
    assert str(LaurentPoly({2: Fraction(3, 2), 0: -1})) == "3/2*q^2 - 1"


def test_parse_roundtrip():
    rng = random.Random(7)
    for _ in range(100):
        p = rand_poly(rng)
        if not p:
            continue
        assert parse_laurent(str(p)) == p
    assert parse_laurent("q") == Q(1)
    assert parse_laurent("-q^-2 + 5/3") == LaurentPoly({-2: -1, 0: Fraction(5, 3)})


def test_parse_rejects_garbage():
    for bad in ["", "q +", "q^", "* q", "q q"]:
        with pytest.raises(ValueError):
            parse_laurent(bad)


def test_json_roundtrip():
    p = LaurentPoly({3: Fraction(-2, 7), 0: 1, -2: 4})
    assert LaurentPoly.from_json(p.to_json()) == p
    assert p.to_json()[0] == {"exp": 3, "num": "-2", "den": "7"}


# -------------------------------------------------------- fraction field

def test_ratq_normalization():
    mu = Q(1) - Q(-1)
    x = RatQ(q_int(2) * mu, mu)
    assert x.is_laurent() and x.to_laurent() == q_int(2)
    # unit denominators are absorbed
    y = RatQ(ONE, Q(3) * LaurentPoly.const(2))
    assert y.is_laurent() and y.to_laurent() == LaurentPoly({-3: Fraction(1, 2)})


def test_ratq_field_axioms_random():
    rng = random.Random(13)
    done = 0
    while done < 100:
        a, b, c, d = (rand_poly(rng) for _ in range(4))
        if not b or not d:
            continue
        x, y = RatQ(a, b), RatQ(c, d)
        assert x + y == y + x
        assert x * y == y * x
        if y:
            assert (x / y) * y == x
        assert x * (RatQ.one() + y) == x + x * y
        done += 1


def test_ratq_denominator_canonical():
    mu = Q(1) - Q(-1)
    x = RatQ(ONE, mu)
    # canonical denominator is monic in q with nonzero constant term
    assert x.den == LaurentPoly({2: 1, 0: -1})
    assert x.num == Q(1)
    assert str(x) == "(q)/(q^2 - 1)"
