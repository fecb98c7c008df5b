import random
from itertools import product

from quadalg.qcalc import Poly4, QOperator, compose, mul_z, qdiff, scaling
from quadalg.ring import LaurentPoly, RatQ, divide_exact, indices_up_to, q_int

Q = LaurentPoly.q
MU = Q(1) - Q(-1)


def mono(alpha, c=1):
    return Poly4.monomial(alpha, c)


# ----------------------------------------------------------- generators

def test_qdiff_examples():
    # [3]_q derived from the difference quotient (q^3 - q^-3)/(q - q^-1)
    three = divide_exact(Q(3) - Q(-3), MU)
    assert qdiff(4).apply(mono((0, 0, 0, 3))) == mono((0, 0, 0, 2), three)
    assert qdiff(1).apply(mono((0, 1, 0, 0))) == Poly4.zero()
    assert qdiff(2).apply(mono((0, 1, 0, 0))) == Poly4.one()


def test_qdiff_monomial_rule():
    # [d_i] z_i^(m+n) = [m+n]_q z_i^(m+n-1) for all m + n <= 12
    for total in range(13):
        got = qdiff(2).apply(mono((0, total, 0, 0)))
        if total == 0:
            assert got == Poly4.zero()
        else:
            assert got == mono((0, total - 1, 0, 0), q_int(total))


def test_scaling_examples():
    assert scaling(2).apply(mono((0, 2, 1, 0))) == mono((0, 2, 1, 0), Q(-2))
    assert scaling(1).apply(Poly4.one()) == Poly4.one()
    assert scaling(4).apply(mono((0, 0, 0, 1))) == mono((0, 0, 0, 1), Q(-1))
    assert scaling(4, -2).apply(mono((0, 0, 0, 1))) == mono((0, 0, 0, 1), Q(2))


# -------------------------------------------------------- composition

def test_k_from_commutator():
    # [d_i] z_i - q z_i [d_i] == K_i, as exact normal forms
    for i in (1, 2, 3, 4):
        lhs = compose(qdiff(i), mul_z(i)) - compose(mul_z(i), qdiff(i)).scale(Q(1))
        assert lhs == scaling(i), i


def test_k_identity_pointwise():
    for i in (1, 2, 3, 4):
        lhs = compose(qdiff(i), mul_z(i)) - compose(mul_z(i), qdiff(i)).scale(Q(1))
        for beta in indices_up_to(8):
            p = mono(beta)
            assert lhs.apply(p) == scaling(i).apply(p)


def test_compose_identity_and_cross_axes():
    op = compose(scaling(1), qdiff(2))
    assert compose(QOperator.identity(), op) == op
    # disjoint axes commute
    assert op == compose(qdiff(2), scaling(1))
    assert op.terms == {((0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0)): RatQ.one()}


def test_apply_compose_consistency():
    rng = random.Random(6)
    ops = [qdiff(1), scaling(2), mul_z(4), qdiff(4), scaling(3, -1), mul_z(1)]
    for _ in range(40):
        a, b = rng.choice(ops), rng.choice(ops)
        ab = compose(a, b)
        for beta in indices_up_to(3):
            p = mono(beta)
            assert ab.apply(p) == a.apply(b.apply(p))


def test_compose_associative():
    ops = [qdiff(1), scaling(1), mul_z(1), qdiff(4), mul_z(4)]
    for a, b, c in product(ops, repeat=3):
        assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_double_derivative():
    got = compose(qdiff(4), qdiff(4)).apply(mono((0, 0, 0, 2)))
    assert got == Poly4.monomial((0, 0, 0, 0), q_int(2))


def test_zero_operator():
    rng = random.Random(8)
    z = QOperator.zero()
    for _ in range(5):
        beta = tuple(rng.randint(0, 3) for _ in range(4))
        assert z.apply(mono(beta)) == Poly4.zero()


# ------------------------------------------- canonical form uniqueness

def test_canonical_form_identifies_equal_operators():
    # z_i K_i [d_i] == (q - q K_i^2)/(q - q^-1): same canonical term map
    for i in (1, 2, 3, 4):
        lhs = compose(mul_z(i), compose(scaling(i), qdiff(i)))
        rhs = (QOperator.identity() - scaling(i, 2)).scale(RatQ(Q(1)) / RatQ(MU))
        assert lhs == rhs
        # and pointwise, as a second, independent check
        for beta in indices_up_to(5):
            assert lhs.apply(mono(beta)) == rhs.apply(mono(beta))


def test_canonical_terms_never_mix_z_and_d():
    ops = [
        compose(qdiff(4), mul_z(4)),
        compose(mul_z(4), compose(qdiff(4), qdiff(4))),
        compose(compose(mul_z(2, 2), qdiff(2)), scaling(2)),
    ]
    for op in ops:
        for alpha, _, gamma in op.terms:
            assert all(a == 0 or g == 0 for a, g in zip(alpha, gamma))


def test_monomial_constructor_canonicalizes():
    raw = QOperator.monomial((0, 0, 0, 1), (0, 0, 0, 1), (0, 0, 0, 1))
    built = compose(mul_z(4), compose(scaling(4), qdiff(4)))
    assert raw == built


def test_operator_equality_vs_action_sweep():
    # structural equality <=> equal action, sampled both ways
    a = compose(qdiff(1), compose(mul_z(1), qdiff(1)))
    b = compose(qdiff(1), mul_z(1)) * qdiff(1)
    assert a == b
    c = a + scaling(1)
    assert c != a
    assert any(
        c.apply(mono(beta)) != a.apply(mono(beta)) for beta in indices_up_to(3)
    )


def test_str_roundtrip_flavour():
    op = compose(scaling(2), qdiff(1)) - mul_z(4).scale(Q(-1))
    s = str(op)
    assert "K_2" in s and "d_1" in s and "z_4" in s
