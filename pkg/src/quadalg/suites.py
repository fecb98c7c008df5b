"""Named verification suites with deterministic, machine-readable reports.

Each suite runs a fixed list of exact checks and reports one status line
per check.  Reports serialize to canonical JSON (sorted keys, sorted
deterministic content) so that two runs over the same inputs are
byte-identical; wall-clock duration is kept out of the JSON and only
shown in the human-readable rendering.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import aq, dirac, transform, uq, verma
from .aq import AqElement
from .ring import LaurentPoly, RatQ, q_int
from .uq import MU, NU, UqElement

_Q = LaurentPoly.q


@dataclass
class Check:
    name: str
    ok: bool
    witness: str | None = None


@dataclass
class Report:
    suite: str
    parameters: dict
    checks: list = field(default_factory=list)
    duration: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name, ok, witness=None):
        self.checks.append(Check(name, bool(ok), witness if not ok else None))

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "parameters": self.parameters,
            "checks": [
                {"name": c.name, "ok": c.ok, "witness": c.witness} for c in self.checks
            ],
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def render_text(self) -> str:
        lines = ["suite %s  (%s)" % (self.suite, _fmt_params(self.parameters))]
        for c in self.checks:
            mark = "pass" if c.ok else "FAIL"
            line = "  [%s] %s" % (mark, c.name)
            if c.witness:
                line += "  <- " + c.witness
            lines.append(line)
        lines.append(
            "%s: %s  (%.2fs)"
            % (self.suite, "all checks passed" if self.ok else "FAILURES", self.duration)
        )
        return "\n".join(lines)


def _fmt_params(params) -> str:
    if not params:
        return "no parameters"
    return ", ".join("%s=%s" % (k, params[k]) for k in sorted(params))


# ----------------------------------------------------------- the suites


def suite_aq_relations(report):
    names = ["w2*w1", "w3*w1", "w4*w3", "w4*w2", "w3*w2", "w4*w1"]
    for name, (lhs, rhs) in zip(names, aq.relation_pairs()):
        report.add("relation %s" % name, lhs == rhs, str(lhs - rhs))
    omega = aq.center_element()
    for i in (1, 2, 3, 4):
        c = aq.commutator(omega, AqElement.generator(i))
        report.add("center commutes with w%d" % i, not c, str(c))


def suite_aq_power_identity(report, degree):
    w1, w4 = AqElement.generator(1), AqElement.generator(4)
    for n in range(1, degree + 1):
        lhs = (w4 ** n) * w1
        rhs = AqElement(
            {
                (1, 0, 0, n): LaurentPoly.one(),
                (0, 1, 1, n - 1): -(_Q(1) - _Q(1 - 2 * n)),
            }
        )
        report.add("power identity N=%d" % n, lhs == rhs, str(lhs - rhs))


def suite_serre_oracle(report):
    from .aq import normal_order

    words = [(2, 1), (3, 1), (4, 3), (4, 2), (3, 2), (4, 1)]
    for word in words:
        lhs = uq.w_gen(word[0]) * uq.w_gen(word[1])
        rhs = uq.w_embed(normal_order(word))
        diff = lhs - rhs
        report.add("transported relation w%d*w%d" % word, not diff, str(diff))


def suite_dims(report, degree):
    coeffs = [1] + [0] * degree
    for height, mult in ((1, 3), (2, 2), (3, 1)):
        for _ in range(mult):
            for i in range(height, degree + 1):
                coeffs[i] += coeffs[i - height]
    for d in range(degree + 1):
        got = uq.graded_dimension(d)
        report.add(
            "dimension at degree %d" % d,
            got == coeffs[d],
            "got %d, generating function says %d" % (got, coeffs[d]),
        )


def _star_table():
    q = _Q(1)
    table = [
        (("F", MU), 1, AqElement.generator(2)),
        (("F", MU), 3, AqElement.generator(4)),
        (("F", MU), 2, AqElement.zero()),
        (("F", MU), 4, AqElement.zero()),
        (("E", MU), 2, AqElement.generator(1)),
        (("E", MU), 4, AqElement.generator(3)),
        (("E", MU), 1, AqElement.zero()),
        (("E", MU), 3, AqElement.zero()),
        (("K", MU, 1), 1, AqElement.generator(1).scale(q)),
        (("K", MU, 1), 3, AqElement.generator(3).scale(q)),
        (("K", MU, 1), 2, AqElement.generator(2).scale(_Q(-1))),
        (("K", MU, 1), 4, AqElement.generator(4).scale(_Q(-1))),
    ]
    swap = {1: 1, 2: 3, 3: 2, 4: 4}
    mirrored = []
    for symbol, i, value in table:
        sym = (symbol[0], NU) + symbol[2:]
        swapped = AqElement({(g[0], g[2], g[1], g[3]): c for g, c in value.terms.items()})
        mirrored.append((sym, swap[i], swapped))
    return table + mirrored


def _symbol_name(symbol):
    letter = {MU: "m", NU: "n"}[symbol[1]]
    if symbol[0] == "K":
        return "K%s" % letter
    return "%s%s" % (symbol[0], letter)


def suite_star_table(report):
    for symbol, i, expected in _star_table():
        got = uq.star_act(symbol, AqElement.generator(i))
        report.add(
            "%s * w%d" % (_symbol_name(symbol), i),
            got == expected,
            "got %s, expected %s" % (got, expected),
        )


def suite_recorded_identities(report):
    fm = UqElement.f_gen(MU)
    em = UqElement.e_gen(MU)
    w1t, w2t = uq.w_gen(1), uq.w_gen(2)
    diff = fm * w2t - (w2t * fm).scale(_Q(-1))
    report.add("Fm*w2 = q^-1 w2*Fm", not diff, str(diff))
    lhs = em * w2t
    rhs = w1t * UqElement.k_gen(MU, -1) + w2t * em
    report.add(
        "Em*w2 = w1*Km^-1 + w2*Em (exact straightened form)",
        lhs == rhs,
        str(lhs - rhs),
    )
    efree = UqElement({k: c for k, c in lhs.terms.items() if not k[2]})
    report.add(
        "raising-free part of Em*w2 is w1*Km^-1",
        efree == w1t * UqElement.k_gen(MU, -1),
        str(efree),
    )


def suite_dual_closed_forms(report, degree):
    for which in (1, 2, 3, 4, "box"):
        label = "w%s" % which if which != "box" else "center"
        ok = transform.verify_dual(which, degree)
        report.add("closed form of dual(%s) through degree %d" % (label, degree), ok)


def suite_box(report, degree):
    box = transform.box_operator()
    report.add(
        "wave operator matches its displayed normal form",
        box.terms
        == {
            ((0, 0, 0, 0), (0, 1, 1, 0), (1, 0, 0, 1)): RatQ.one(),
            ((0, 0, 0, 0), (0, 0, 0, 0), (0, 1, 1, 0)): RatQ(-_Q(1)),
        },
        str(box),
    )
    report.add(
        "wave operator is the dual of the center through degree %d" % degree,
        transform.verify_dual("box", degree),
    )


def suite_dirac_factorization(report, degree):
    from .qcalc import Poly4, Poly4Vec2
    from .ring import indices_up_to

    dp, dm = dirac.dirac_plus(), dirac.dirac_minus()
    target = dirac.OpMatrix2.diagonal(transform.box_operator()).scale(-_Q(-1))
    pm = dp.then(dm)
    mp = dm.then(dp)
    report.add("D+ then D- equals -q^-1 diag(box, box) exactly", pm == target)
    report.add("D- then D+ equals -q^-1 diag(box, box) exactly", mp == target)
    report.add("the two products agree", pm == mp)
    box = transform.box_operator()
    bad = None
    for gamma in indices_up_to(degree):
        for slot in (1, 2):
            p = Poly4.monomial(gamma)
            v = Poly4Vec2(p, Poly4.zero()) if slot == 1 else Poly4Vec2(Poly4.zero(), p)
            expected = Poly4Vec2(
                box.apply(v.p1).scale(-_Q(-1)), box.apply(v.p2).scale(-_Q(-1))
            )
            if dm.apply(dp.apply(v)) != expected or dp.apply(dm.apply(v)) != expected:
                bad = (gamma, slot)
                break
        if bad:
            break
    report.add(
        "pointwise factorization on monomials through degree %d" % degree,
        bad is None,
        "first failure at %s" % (bad,),
    )


def suite_dirac_intertwine(report, degree):
    for variant in ("plus", "minus"):
        ok = dirac.intertwine_check(degree, variant)
        report.add(
            "matrix matches the algebraic intertwiner (%s) through degree %d"
            % (variant, degree),
            ok,
        )


def suite_singular_vector(report, scan, convention):
    u0 = verma.singular_candidate_plus()
    reports, vanishing = verma.scan_singular(u0, scan, convention)
    for r in reports:
        report.add("E_nu kills the candidate at x=%d" % r.x, not r.e_nu, str(r.e_nu))
        report.add(
            "E_mu^2 kills the candidate at x=%d" % r.x, not r.e_mu_sq, str(r.e_mu_sq)
        )
    expected_x = 2 if convention == "twisted" else -2
    report.add(
        "generic vanishing exactly at x=%d" % expected_x,
        vanishing == ([expected_x] if expected_x in scan else []),
        "vanishing at %s" % (vanishing,),
    )
    for r in reports:
        if r.vanishes_generically:
            continue
        modulus = abs(2 * r.x - 4) if convention == "twisted" else abs(2 * r.x + 4)
        expected = tuple(m for m in range(1, 13) if m >= 3 and modulus % m == 0)
        extra = tuple(m for m in r.root_of_unity_orders if m > 12)
        got = tuple(m for m in r.root_of_unity_orders if m <= 12)
        report.add(
            "root-of-unity orders at x=%d are the divisors >= 3 of %d" % (r.x, modulus),
            got == expected and all(modulus % m == 0 for m in extra),
            "got %s, expected %s" % (r.root_of_unity_orders, expected),
        )


SUITES = {
    "aq-relations": (suite_aq_relations, None),
    "aq-power-identity": (suite_aq_power_identity, 8),
    "serre-oracle": (suite_serre_oracle, None),
    "dims": (suite_dims, 6),
    "star-table": (suite_star_table, None),
    "recorded-identities": (suite_recorded_identities, None),
    "dual-closed-forms": (suite_dual_closed_forms, 6),
    "box": (suite_box, 6),
    "dirac-factorization": (suite_dirac_factorization, 5),
    "dirac-intertwine": (suite_dirac_intertwine, 4),
    "singular-vector": (suite_singular_vector, None),
}


def run_suite(name, degree=None, scan=None, convention="twisted") -> Report:
    """Run one named suite; raises KeyError on an unknown name."""
    if name not in SUITES:
        raise KeyError(name)
    fn, default_degree = SUITES[name]
    params = {}
    start = time.monotonic()
    if name == "singular-vector":
        scan = scan if scan is not None else range(0, 7)
        params = {"scan": "%d..%d" % (min(scan), max(scan)), "convention": convention}
        report = Report(name, params)
        fn(report, list(scan), convention)
    elif default_degree is not None:
        bound = degree if degree is not None else default_degree
        params = {"degree": bound}
        report = Report(name, params)
        fn(report, bound)
    else:
        report = Report(name, params)
        fn(report)
    report.duration = time.monotonic() - start
    return report
