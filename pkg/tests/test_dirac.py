from quadalg.dirac import (
    OpMatrix2,
    VectorDualFunctional,
    dirac_minus,
    dirac_minus_parts,
    dirac_plus,
    dirac_plus_parts,
    factorization_check,
    intertwine_bruteforce,
    intertwine_check,
)
from quadalg.qcalc import Poly4, Poly4Vec2, QOperator, compose, mul_z, qdiff, scaling
from quadalg.ring import LaurentPoly, RatQ, indices_up_to
from quadalg.transform import box_operator, right_dual_closed

Q = LaurentPoly.q


# --------------------------------------------------------- matrix shape

def test_dirac_plus_entries():
    dp = dirac_plus()
    assert dp[0, 1] == qdiff(4)
    assert dp[0, 0] == compose(scaling(4), qdiff(2))
    assert dp[1, 1] == compose(scaling(4), qdiff(3)).scale(-Q(-1))
    assert dp[1, 0] == right_dual_closed(1).scale(-Q(-1))


def test_dirac_minus_entries():
    dm = dirac_minus()
    assert dm[0, 0] == compose(scaling(4), qdiff(3))
    assert dm[1, 1] == compose(scaling(4), qdiff(2)).scale(-Q(-1))
    # shared corner entry
    assert dm[1, 0] == dirac_plus()[1, 0]


def test_first_order_plus_extra_decomposition():
    for parts, full in ((dirac_plus_parts(), dirac_plus()),
                        (dirac_minus_parts(), dirac_minus())):
        first, extra = parts
        assert first + extra == full
        # every term of the first-order part is exactly first order in [d]
        for i in (0, 1):
            for j in (0, 1):
                assert first[i, j].dbar_orders() == [1], (i, j)
        # the extra term sits in the lower-left corner and carries the wave operator
        assert extra[0, 0] == QOperator.zero()
        assert extra[0, 1] == QOperator.zero()
        assert extra[1, 1] == QOperator.zero()
        expected = compose(mul_z(4), compose(scaling(4), box_operator())).scale(
            (LaurentPoly.one() - Q(-2)) * -Q(-1)
        )
        assert extra[1, 0] == expected


def test_annihilates_constants():
    v = Poly4Vec2(Poly4.one(), Poly4.zero())
    out = dirac_plus().apply(v)
    assert out == Poly4Vec2(Poly4.zero(), Poly4.zero())


# -------------------------------------------------------- factorization

def test_factorization_exact_normal_forms():
    assert factorization_check()


def test_factorization_products_commute():
    dp, dm = dirac_plus(), dirac_minus()
    assert dp.then(dm) == dm.then(dp)


def test_factorization_pointwise_degree_5():
    dp, dm = dirac_plus(), dirac_minus()
    box = box_operator()
    minus_qinv = -Q(-1)
    for gamma in indices_up_to(5):
        for slot in (1, 2):
            p = Poly4.monomial(gamma)
            v = Poly4Vec2(p, Poly4.zero()) if slot == 1 else Poly4Vec2(Poly4.zero(), p)
            got = dm.apply(dp.apply(v))
            expected = Poly4Vec2(
                box.apply(v.p1).scale(minus_qinv), box.apply(v.p2).scale(minus_qinv)
            )
            assert got == expected, (gamma, slot)
            assert dp.apply(dm.apply(v)) == expected, (gamma, slot)


def test_factorization_samples():
    # (D+ then D-)(z1 z4 e1) = -q^-1 e1 and the e2 companion with z2 z3
    dp, dm = dirac_plus(), dirac_minus()
    v = Poly4Vec2(Poly4.monomial((1, 0, 0, 1)), Poly4.zero())
    out = dm.apply(dp.apply(v))
    assert out == Poly4Vec2(Poly4.monomial((0, 0, 0, 0), -Q(-1)), Poly4.zero())
    v = Poly4Vec2(Poly4.zero(), Poly4.monomial((0, 1, 1, 0)))
    out = dm.apply(dp.apply(v))
    assert out == Poly4Vec2(Poly4.zero(), Poly4.one())


# ----------------------------------------------------------- intertwiner

def test_bruteforce_examples():
    # with p1 = 1 the map reads off the w2 coefficient of the first slot
    # and the -q^-1 w1 coefficient of the second
    g = intertwine_bruteforce(VectorDualFunctional.indicator((0, 1, 0, 0), 1))
    assert g.f1.values.get((0, 0, 0, 0)) == LaurentPoly.one()
    g = intertwine_bruteforce(VectorDualFunctional.indicator((1, 0, 0, 0), 2))
    assert g.f1.values.get((0, 0, 0, 0)) == -Q(-1)

    # with p2 = 1 it picks out w4 and -q^-1 w3 instead
    g = intertwine_bruteforce(VectorDualFunctional.indicator((0, 0, 0, 1), 1))
    assert g.f2.values.get((0, 0, 0, 0)) == LaurentPoly.one()
    g = intertwine_bruteforce(VectorDualFunctional.indicator((0, 0, 1, 0), 2))
    assert g.f2.values.get((0, 0, 0, 0)) == -Q(-1)

    assert not intertwine_bruteforce(VectorDualFunctional())
    # the pushforward lowers the support degree; degree-zero input dies
    assert not intertwine_bruteforce(VectorDualFunctional.indicator((0, 0, 0, 0), 1))


def test_intertwine_check_degree_0():
    assert intertwine_check(0)
    assert intertwine_check(0, "minus")


def test_intertwine_check_degree_4_both_variants():
    assert intertwine_check(4, "plus")
    assert intertwine_check(4, "minus")
