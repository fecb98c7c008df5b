"""Acceptance criteria, one test per criterion, all at exact (zero) tolerance.

Every check is symbolic equality over Q[q, q^-1] or its fraction field;
each test prints a single pass/fail line (visible with ``pytest -s``).
"""

import json

from quadalg.aq import AqElement, center_element, commutator, normal_order, relation_pairs
from quadalg.dirac import dirac_minus, dirac_plus, intertwine_check
from quadalg.qcalc import Poly4, Poly4Vec2
from quadalg.ring import LaurentPoly, RatQ, indices_up_to, q_int, vanishes_at_root_of_unity
from quadalg.suites import SUITES, run_suite
from quadalg.transform import box_operator, verify_dual
from quadalg.uq import MU, UqElement, graded_dimension, star_act, w_embed, w_gen
from quadalg.verma import scan_singular, singular_candidate_plus, singular_test

Q = LaurentPoly.q
ONE = LaurentPoly.one()


def report(num, label, ok):
    print("%s criterion %d: %s" % ("PASS" if ok else "FAIL", num, label))
    assert ok, "criterion %d failed: %s" % (num, label)


def test_criterion_1_aq_relations_and_center():
    ok = all(lhs == rhs for lhs, rhs in relation_pairs())
    omega = center_element()
    ok = ok and all(
        commutator(omega, AqElement.generator(i)) == AqElement.zero() for i in (1, 2, 3, 4)
    )
    report(1, "quadratic algebra relations and central element, exact", ok)


def test_criterion_2_power_identity():
    w1, w4 = AqElement.generator(1), AqElement.generator(4)
    ok = True
    for n in range(1, 9):
        rhs = AqElement(
            {(1, 0, 0, n): ONE, (0, 1, 1, n - 1): -(Q(1) - Q(1 - 2 * n))}
        )
        ok = ok and (w4 ** n) * w1 == rhs
    report(2, "power identity for N = 1..8, exact", ok)


def test_criterion_3_serre_ideal_oracle():
    ok = True
    for word in ((2, 1), (3, 1), (4, 3), (4, 2), (3, 2), (4, 1)):
        lhs = w_gen(word[0]) * w_gen(word[1])
        rhs = w_embed(normal_order(word))
        ok = ok and lhs == rhs
    fm, em = UqElement.f_gen(MU), UqElement.e_gen(MU)
    ok = ok and fm * w_gen(2) == (w_gen(2) * fm).scale(Q(-1))
    # straightened: Em*w2 = w1*Km^-1 exactly modulo the trailing-raising
    # term w2*Em (which kills highest weight vectors); assert both the
    # raising-free part and the exact residual
    lhs = em * w_gen(2)
    ok = ok and lhs == w_gen(1) * UqElement.k_gen(MU, -1) + w_gen(2) * em
    efree = UqElement({k: c for k, c in lhs.terms.items() if not k[2]})
    ok = ok and efree == w_gen(1) * UqElement.k_gen(MU, -1)
    report(3, "transported relations and recorded identities in the Serre quotient", ok)


def test_criterion_4_pbw_dimensions():
    coeffs = [1] + [0] * 6
    for height, mult in ((1, 3), (2, 2), (3, 1)):
        for _ in range(mult):
            for i in range(height, 7):
                coeffs[i] += coeffs[i - height]
    ok = coeffs[:4] == [1, 3, 8, 17]
    ok = ok and [graded_dimension(d) for d in range(7)] == coeffs
    report(4, "graded dimensions match the positive-root generating function", ok)


def test_criterion_5_star_table():
    from quadalg.suites import _star_table

    entries = _star_table()
    ok = len(entries) == 24
    for symbol, i, expected in entries:
        ok = ok and star_act(symbol, AqElement.generator(i)) == expected
    report(5, "all 24 star-action table entries from the Hopf data", ok)


def test_criterion_6_dual_closed_forms():
    ok = all(verify_dual(which, 6) for which in (1, 2, 3, 4, "box"))
    report(6, "dual closed forms agree with brute force through degree 6", ok)


def test_criterion_7_dirac_factorization():
    from quadalg.dirac import OpMatrix2

    dp, dm = dirac_plus(), dirac_minus()
    target = OpMatrix2.diagonal(box_operator()).scale(-Q(-1))
    ok = dp.then(dm) == target and dm.then(dp) == target
    box = box_operator()
    for gamma in indices_up_to(5):
        for slot in (1, 2):
            p = Poly4.monomial(gamma)
            v = Poly4Vec2(p, Poly4.zero()) if slot == 1 else Poly4Vec2(Poly4.zero(), p)
            want = Poly4Vec2(
                box.apply(v.p1).scale(-Q(-1)), box.apply(v.p2).scale(-Q(-1))
            )
            ok = ok and dm.apply(dp.apply(v)) == want and dp.apply(dm.apply(v)) == want
    report(7, "factorization through the wave operator, exact and pointwise", ok)


def test_criterion_8_intertwiner_correspondence():
    ok = intertwine_check(4, "plus") and intertwine_check(4, "minus")
    report(8, "operator matrices realize the algebraic intertwiners to degree 4", ok)


def test_criterion_9_singular_vector():
    u0 = singular_candidate_plus()
    reports, vanishing = scan_singular(u0, range(0, 7), "twisted")
    ok = vanishing == [2]
    for r in reports:
        ok = ok and not r.e_nu and not r.e_mu_sq
    for r in reports:
        if r.x == 2:
            ok = ok and r.vanishes_generically
            continue
        coeffs = list(r.e_beta.laurent_terms().values())
        modulus = abs(2 * r.x - 4)
        for m in range(1, 13):
            expected = m >= 3 and modulus % m == 0
            got = all(vanishes_at_root_of_unity(c, m) for c in coeffs)
            ok = ok and got == expected
    report(9, "primitivity scan: generic x = 2, root-of-unity orders divide 2x-4", ok)


def test_criterion_10_report_determinism():
    ok = True
    for suite in sorted(SUITES):
        first = run_suite(suite)
        second = run_suite(suite)
        ok = ok and first.to_json().encode() == second.to_json().encode()
        ok = ok and json.loads(first.to_json())["ok"] is True
    report(10, "suite JSON reports are byte-identical across consecutive runs", ok)
