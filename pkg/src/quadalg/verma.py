"""Verma module machinery: weights, the raising action on lowered vectors,
and the singular-vector scan for the degree-one intertwiner candidate.

A weight (m, n, x) declares the character values q^m, q^n, q^x of the
three Cartan generators on the highest weight line.  Under the default
"twisted" convention the generators act on v by the inverse character
(K_mu v = q^-m v, ...), which is the convention induced on functions by
twisting with the inverse character and the antipode; the "plain"
convention drops the inversion.  The active convention is recorded in
every report.

The candidate u0+ = w2 - q^-1 w1 F_mu applied to the highest weight
vector of the (1, 0, x) weight is primitive exactly when the raising
generator along beta kills it; the obstruction is the q-integer
[x - 2]_q (twisted convention), which vanishes at generic q iff x = 2
and otherwise vanishes at the primitive m-th roots of unity with
m | 2x - 4 and m >= 3 (the two classical points q = 1, -1 never kill a
nonzero q-integer).
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import LaurentPoly, RatQ, q_int, vanishes_at_root_of_unity
from .uq import BETA, LETTER_NAMES, MU, NU, UqElement, w_gen

_Q = LaurentPoly.q

CONVENTIONS = ("twisted", "plain")


@dataclass(frozen=True)
class Weight:
    """Character exponents (m, n, x) for the Cartan generators."""

    m: int
    n: int
    x: int

    def exponent_of(self, kexp, convention="twisted") -> int:
        """The q-exponent by which K_mu^a K_nu^b K_beta^c acts on v."""
        if convention not in CONVENTIONS:
            raise ValueError("convention must be twisted or plain, got %r" % (convention,))
        a, b, c = kexp
        raw = a * self.m + b * self.n + c * self.x
        return -raw if convention == "twisted" else raw


class VermaVector:
    """A combination of quotient-basis lowering words applied to v."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in terms.items():
                c = c if isinstance(c, RatQ) else RatQ(c)
                if c:
                    clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def highest_weight(cls):
        return cls({(): RatQ.one()})

    @classmethod
    def zero(cls):
        return cls()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, VermaVector):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, RatQ.zero()) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return VermaVector(out)

    def scale(self, c):
        c = c if isinstance(c, RatQ) else RatQ(c)
        return VermaVector({w: c * v for w, v in self.terms.items()})

    def laurent_terms(self):
        """Coefficients cleared to Laurent form, {word: LaurentPoly}."""
        return {w: c.to_laurent() for w, c in self.terms.items()}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            c = self.terms[w]
            mon = "*".join(LETTER_NAMES[i] for i in w) if w else "1"
            head = mon if c == RatQ.one() and w else "(%s)*%s" % (c, mon)
            parts.append(head + "*v")
        return " + ".join(parts)

    def __repr__(self):
        return "VermaVector(%s)" % self


def _evaluate(element: UqElement, weight: Weight, convention: str) -> VermaVector:
    """Evaluate a straightened element on v: raising kills, Cartan scales."""
    out = {}
    for (fw, kexp, ew), c in element.terms.items():
        if ew:
            continue
        k = weight.exponent_of(kexp, convention)
        if k:
            c = c * RatQ(_Q(k))
        s = out.get(fw, RatQ.zero()) + c
        if s:
            out[fw] = s
        else:
            out.pop(fw, None)
    return VermaVector(out)


def apply_element(element: UqElement, v: VermaVector, weight: Weight,
                  convention: str = "twisted") -> VermaVector:
    """The action of an arbitrary straightened element on a Verma vector."""
    out = VermaVector.zero()
    for word, c in v.terms.items():
        lowered = element * UqElement({(word, (0, 0, 0), ()): RatQ.one()})
        out = out + _evaluate(lowered, weight, convention).scale(c)
    return out


_GENS = {
    "Fm": UqElement.f_gen(MU), "Fn": UqElement.f_gen(NU), "Fb": UqElement.f_gen(BETA),
    "Em": UqElement.e_gen(MU), "En": UqElement.e_gen(NU), "Eb": UqElement.e_gen(BETA),
    "Km": UqElement.k_gen(MU), "Kn": UqElement.k_gen(NU), "Kb": UqElement.k_gen(BETA),
    "Km^-1": UqElement.k_gen(MU, -1), "Kn^-1": UqElement.k_gen(NU, -1),
    "Kb^-1": UqElement.k_gen(BETA, -1),
}


def act(generator, v: VermaVector, weight: Weight, convention: str = "twisted") -> VermaVector:
    """Action of a single named generator (e.g. "Eb", "Fm", "Kb^-1") on v."""
    if isinstance(generator, UqElement):
        g = generator
    else:
        try:
            g = _GENS[generator]
        except KeyError:
            raise ValueError("unknown generator %r" % (generator,)) from None
    return apply_element(g, v, weight, convention)


def singular_candidate_plus() -> UqElement:
    """The degree-one candidate w2 - q^-1 w1 F_mu."""
    return w_gen(2) - (w_gen(1) * UqElement.f_gen(MU)).scale(_Q(-1))


def target_weight(weight: Weight) -> Weight:
    """The weight reached by the candidate from a (1, 0, x) source."""
    if (weight.m, weight.n) != (1, 0):
        raise ValueError("source weight must have (m, n) = (1, 0), got %r" % (weight,))
    return Weight(0, 1, weight.x + 1)


@dataclass
class SingularReport:
    """Exact raising values of u0 v and the root-of-unity bookkeeping."""

    x: int
    convention: str
    e_mu: VermaVector
    e_mu_sq: VermaVector
    e_nu: VermaVector
    e_beta: VermaVector
    vanishes_generically: bool
    root_of_unity_orders: tuple

    @property
    def minimal_root_of_unity_order(self):
        """Smallest order killing the obstruction, or None."""
        return self.root_of_unity_orders[0] if self.root_of_unity_orders else None


def _divisors(n: int):
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0]


def singular_test(u0: UqElement, x: int, convention: str = "twisted",
                  max_order: int | None = None) -> SingularReport:
    """Raising values on u0 v for the weight (1, 0, x), with exact scalars.

    The beta obstruction is reported with the root-of-unity orders at
    which it vanishes; by default the divisors of 2x - 4 (twisted) or
    2x + 4 (plain) and every order up to 12 are scanned.
    """
    weight = Weight(1, 0, x)
    v = VermaVector.highest_weight()
    u0v = apply_element(u0, v, weight, convention)
    e_mu = act("Em", u0v, weight, convention)
    report = SingularReport(
        x=x,
        convention=convention,
        e_mu=e_mu,
        e_mu_sq=act("Em", e_mu, weight, convention),
        e_nu=act("En", u0v, weight, convention),
        e_beta=act("Eb", u0v, weight, convention),
        vanishes_generically=False,
        root_of_unity_orders=(),
    )
    report.vanishes_generically = not report.e_beta
    if not report.vanishes_generically:
        modulus = 2 * x - 4 if convention == "twisted" else 2 * x + 4
        orders = set(_divisors(modulus)) | set(range(1, (max_order or 12) + 1))
        coeffs = list(report.e_beta.laurent_terms().values())
        found = [
            m for m in sorted(orders)
            if all(vanishes_at_root_of_unity(c, m) for c in coeffs)
        ]
        report.root_of_unity_orders = tuple(found)
    return report


def scan_singular(u0: UqElement, xs, convention: str = "twisted"):
    """Reports for each x in the scan; returns (reports, generically vanishing xs)."""
    reports = [singular_test(u0, x, convention) for x in xs]
    vanishing = [r.x for r in reports if r.vanishes_generically]
    return reports, vanishing


def expected_beta_obstruction(x: int, convention: str = "twisted") -> LaurentPoly:
    """The predicted beta obstruction coefficient: [x-2]_q resp. -[x+2]_q."""
    if convention == "twisted":
        n = x - 2
        return q_int(n) if n >= 0 else -q_int(-n)
    return -q_int(x + 2)
