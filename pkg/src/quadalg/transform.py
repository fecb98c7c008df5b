"""The divided-powers correspondence between functionals on the quadratic
algebra and polynomials on C^4, and the right-multiplication duals.

A functional f is known through its values f(w^gamma); the associated
polynomial is

    Psi_f(z) = sum_gamma f(w^gamma) z^gamma / [gamma]_q!

(divided-powers normalization).  Right multiplication w^gamma -> w^gamma w0
dualizes to an operator on functionals; through Psi these duals become
q-difference operators with closed forms:

    dual(w4) = [d_4]                 dual(w2) = K_4 [d_2]
    dual(w3) = K_4 [d_3]
    dual(w1) = K_2 K_3 K_4^2 [d_1] + z_4 (1 - q^-2) K_4 box
    box      = dual(w1 w4 - q w2 w3) = K_2 K_3 [d_1][d_4] - q [d_2][d_3]

``verify_dual`` checks each closed form against brute-force right
multiplication on every monomial indicator up to a degree bound.
"""

from __future__ import annotations

from .aq import AqElement, center_element
from .qcalc import Poly4, QOperator, compose, mul_z, qdiff, scaling
from .ring import (
    LaurentPoly,
    RatQ,
    indices_up_to,
    mi_check,
    mi_degree,
    q_factorial,
)

_Q = LaurentPoly.q


class DualFunctional:
    """A finitely supported functional on the monomial basis w^gamma."""

    __slots__ = ("values",)

    def __init__(self, values=None):
        clean = {}
        if values:
            for g, c in values.items():
                if c:
                    clean[mi_check(g)] = c
        self.values = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def indicator(cls, gamma):
        return cls({mi_check(gamma): LaurentPoly.one()})

    def __bool__(self):
        return bool(self.values)

    def __eq__(self, other):
        if not isinstance(other, DualFunctional):
            return NotImplemented
        return self.values == other.values

    def __add__(self, other):
        out = dict(self.values)
        for g, c in other.values.items():
            s = out.get(g, LaurentPoly.zero()) + c
            if s:
                out[g] = s
            else:
                out.pop(g, None)
        return DualFunctional(out)

    def scale(self, c):
        return DualFunctional({g: c * v for g, v in self.values.items()})

    def max_degree(self) -> int:
        return max((mi_degree(g) for g in self.values), default=-1)

    def evaluate(self, a: AqElement):
        """Linear extension: the value on an arbitrary algebra element."""
        out = LaurentPoly.zero()
        for g, c in a.terms.items():
            v = self.values.get(g)
            if v is not None:
                out = out + c * v
        return out

    def __str__(self):
        if not self.values:
            return "0"
        return " + ".join(
            "(%s)*delta%s" % (self.values[g], (g,)) for g in sorted(self.values)
        )


def psi(f: DualFunctional) -> Poly4:
    """The divided-powers polynomial of a functional."""
    return Poly4(
        {g: RatQ(v, q_factorial(g)) for g, v in f.values.items()}
    )


def psi_inv(p: Poly4) -> DualFunctional:
    """Inverse of psi on finitely supported data."""
    out = {}
    for g, c in p.terms.items():
        out[g] = (c * RatQ(q_factorial(g))).to_laurent()
    return DualFunctional(out)


def right_dual_bruteforce(w0: AqElement):
    """The operator f -> (g: g(w^gamma) = f(w^gamma w0)), computed in the algebra.

    Returns a callable on DualFunctional.  Right multiplication by w0 is
    evaluated with the normal-ordering engine; products are cached per
    basis monomial.
    """
    cache = {}

    def act(f: DualFunctional) -> DualFunctional:
        bound = f.max_degree()
        out = {}
        for g in indices_up_to(max(bound, 0)) if bound >= 0 else []:
            prod = cache.get(g)
            if prod is None:
                prod = AqElement.monomial(g) * w0
                cache[g] = prod
            val = f.evaluate(prod)
            if val:
                out[g] = val
        return DualFunctional(out)

    return act


def box_operator() -> QOperator:
    """The quantized wave operator K_2 K_3 [d_1][d_4] - q [d_2][d_3]."""
    main = compose(compose(scaling(2), scaling(3)), compose(qdiff(1), qdiff(4)))
    return main - compose(qdiff(2), qdiff(3)).scale(_Q(1))


def right_dual_closed(which) -> QOperator:
    """Closed form of the dual of right multiplication by w1..w4 or the center ("box")."""
    if which == 4:
        return qdiff(4)
    if which == 2:
        return compose(scaling(4), qdiff(2))
    if which == 3:
        return compose(scaling(4), qdiff(3))
    if which == 1:
        first = compose(
            compose(scaling(2), scaling(3)), compose(scaling(4, 2), qdiff(1))
        )
        extra = compose(mul_z(4), compose(scaling(4), box_operator())).scale(
            LaurentPoly.one() - _Q(-2)
        )
        return first + extra
    if which == "box":
        return box_operator()
    raise ValueError("argument must be one of 1, 2, 3, 4, 'box'; got %r" % (which,))


def _brute_element(which) -> AqElement:
    if which == "box":
        return center_element()
    return AqElement.generator(which)


def verify_dual(which, degree_bound: int) -> bool:
    """True iff the closed form matches brute-force right multiplication
    through psi on every monomial indicator of total degree <= degree_bound."""
    if degree_bound < 0:
        raise ValueError("degree bound must be >= 0")
    closed = right_dual_closed(which)
    brute = right_dual_bruteforce(_brute_element(which))
    for gamma in indices_up_to(degree_bound):
        f = DualFunctional.indicator(gamma)
        if psi(brute(f)) != closed.apply(psi(f)):
            return False
    return True
