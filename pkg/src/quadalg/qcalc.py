"""Exact q-difference operator calculus on polynomials in z1..z4.

Operators are linear combinations of z^alpha o K^delta o [d]^gamma where
[d_i] is the symmetric q-derivative (z_i^n -> [n]_q z_i^(n-1)) and K_i
scales a monomial by q^(-alpha_i).  Per axis these satisfy

    [d] z = q z [d] + K        K z = q^-1 z K        K [d] = q [d] K

and distinct axes commute.

The raw monomial family is linearly *dependent* as operators, e.g.

    z o K o [d] = (q - q K^2) / (q - q^-1),

so structural equality of arbitrary term maps would not decide operator
equality.  A canonical form fixes this: on each axis a term never carries
both a z-power and a [d]-power (min(alpha_i, gamma_i) = 0).  Writing
t_i = q^(-n_i) for the action on z^n, an operator decomposes by shift
vector alpha - gamma with a Laurent-polynomial "symbol" in t; canonical
terms are in bijection with (shift, symbol) pairs, so equality of
canonical term maps is equality of operators.  Composition is computed
on symbols and re-expanded.

Coefficients live in the fraction field Q(q): re-expansion can introduce
denominators of q - q^-1 even for integer inputs (see the identity
above).  All displayed operators of interest have plain Laurent
coefficients.
"""

from __future__ import annotations

from functools import lru_cache

from .ring import LaurentPoly, RatQ, mi_check, q_int

_Q = LaurentPoly.q
_MU = RatQ(_Q(1) - _Q(-1))  # q - q^-1
ZERO4 = (0, 0, 0, 0)


def _coerce_scalar(c) -> RatQ:
    if isinstance(c, RatQ):
        return c
    return RatQ(c)


# ------------------------------------------------------------ Poly4


class Poly4:
    """A polynomial in z1..z4 with exact Q(q) coefficients, stored sparsely."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for a, c in terms.items():
                c = _coerce_scalar(c)
                if c:
                    clean[mi_check(a)] = c
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({ZERO4: RatQ.one()})

    @classmethod
    def monomial(cls, alpha, coeff=1):
        return cls({mi_check(alpha): _coerce_scalar(coeff)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly4):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return Poly4({a: -c for a, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Poly4):
            return NotImplemented
        out = dict(self.terms)
        for a, c in other.terms.items():
            s = out.get(a, RatQ.zero()) + c
            if s:
                out[a] = s
            else:
                out.pop(a, None)
        return Poly4(out)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _coerce_scalar(c)
        return Poly4({a: c * v for a, v in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for a in sorted(self.terms):
            mon = "*".join(
                "z_%d" % (i + 1) if n == 1 else "z_%d^%d" % (i + 1, n)
                for i, n in enumerate(a) if n
            )
            c = self.terms[a]
            if not mon:
                parts.append("(%s)" % c)
            elif c == RatQ.one():
                parts.append(mon)
            else:
                parts.append("(%s)*%s" % (c, mon))
        return " + ".join(parts)

    def __repr__(self):
        return "Poly4(%s)" % self


class Poly4Vec2:
    """A pair of Poly4 components (C^2-valued polynomials)."""

    __slots__ = ("p1", "p2")

    def __init__(self, p1=None, p2=None):
        self.p1 = p1 if p1 is not None else Poly4.zero()
        self.p2 = p2 if p2 is not None else Poly4.zero()

    def __eq__(self, other):
        if not isinstance(other, Poly4Vec2):
            return NotImplemented
        return self.p1 == other.p1 and self.p2 == other.p2

    def __add__(self, other):
        return Poly4Vec2(self.p1 + other.p1, self.p2 + other.p2)

    def __str__(self):
        return "(%s, %s)" % (self.p1, self.p2)


# --------------------------------------------- symbol-level machinery

# A symbol is dict[shift 4-tuple] -> dict[t-exponent 4-tuple] -> RatQ.


@lru_cache(maxsize=None)
def _axis_factor(g: int):
    """Symbol of [d]^g on one axis: prod_{j<g} (q^-j t^-1 - q^j t)/(q - q^-1), as {exp: RatQ}."""
    if g == 0:
        return ((0, RatQ.one()),)
    prev = dict(_axis_factor(g - 1))
    j = g - 1
    lo = RatQ(_Q(-j)) / _MU
    hi = -RatQ(_Q(j)) / _MU
    out = {}
    for e, c in prev.items():
        for de, dc in ((-1, lo), (1, hi)):
            k = e + de
            s = out.get(k, RatQ.zero()) + c * dc
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return tuple(sorted(out.items()))


def _tpoly_add_into(acc, tp, factor=None):
    for e, c in tp.items():
        if factor is not None:
            c = c * factor
        s = acc.get(e, RatQ.zero()) + c
        if s:
            acc[e] = s
        else:
            acc.pop(e, None)


def _tpoly_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
            s = out.get(e, RatQ.zero()) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _tpoly_shift_arg(tp, s):
    """Substitute t_i -> t_i * q^(-s_i), i.e. scale each t^e term by q^(-s.e)."""
    out = {}
    for e, c in tp.items():
        k = s[0] * e[0] + s[1] * e[1] + s[2] * e[2] + s[3] * e[3]
        out[e] = c * RatQ(_Q(-k)) if k else c
    return out


def _term_symbol(alpha, delta, gamma, coeff):
    """Symbol of coeff * z^alpha K^delta [d]^gamma (shift is alpha - gamma)."""
    k = sum(g * d for g, d in zip(gamma, delta))
    tp = {tuple(delta): coeff * RatQ(_Q(k)) if k else coeff}
    for i in range(4):
        if gamma[i]:
            fac = {}
            for e, c in _axis_factor(gamma[i]):
                exp = [0, 0, 0, 0]
                exp[i] = e
                fac[tuple(exp)] = c
            tp = _tpoly_mul(tp, fac)
    return tp


def _divide_axis(tp, i, g):
    """Exact division of a t-polynomial by the axis-i factor of [d]^g."""
    if g == 0 or not tp:
        return dict(tp)
    div = dict(_axis_factor(g))
    hi = g
    lead = div[hi]
    # split into fibers over the other axes
    fibers = {}
    for e, c in tp.items():
        rest = e[:i] + e[i + 1 :]
        fibers.setdefault(rest, {})[e[i]] = c
    out = {}
    for rest, fib in fibers.items():
        vmin = min(fib) - (-g)  # valuation bound for an exact quotient
        quot = {}
        while fib:
            emax = max(fib)
            fexp = emax - hi
            if fexp < vmin:
                raise ArithmeticError("non-exact symbol division (invalid operator data)")
            f = fib[emax] / lead
            quot[fexp] = f
            for de, dc in div.items():
                k = fexp + de
                s = fib.get(k, RatQ.zero()) - f * dc
                if s:
                    fib[k] = s
                else:
                    fib.pop(k, None)
        for e_i, c in quot.items():
            e = rest[:i] + (e_i,) + rest[i:]
            out[e] = c
    return out


# ------------------------------------------------------------ QOperator


class QOperator:
    """A q-difference operator in canonical normal form.

    Terms map (alpha, delta, gamma) -> coefficient with, on every axis,
    min(alpha_i, gamma_i) = 0; two operators are equal iff their term
    maps are equal.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None, _canonical=False):
        if not terms:
            self.terms = {}
            return
        if _canonical:
            self.terms = {k: c for k, c in terms.items() if c}
            return
        self.terms = _from_symbol(_to_symbol(terms))

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def identity(cls):
        return cls({(ZERO4, ZERO4, ZERO4): RatQ.one()}, _canonical=True)

    @classmethod
    def scalar(cls, c):
        c = _coerce_scalar(c)
        return cls({(ZERO4, ZERO4, ZERO4): c} if c else {}, _canonical=True)

    @classmethod
    def monomial(cls, alpha, delta, gamma, coeff=1):
        alpha = mi_check(alpha)
        gamma = mi_check(gamma)
        delta = tuple(int(d) for d in delta)
        return cls({(alpha, delta, gamma): _coerce_scalar(coeff)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, QOperator):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return QOperator({k: -c for k, c in self.terms.items()}, _canonical=True)

    def __add__(self, other):
        if not isinstance(other, QOperator):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, RatQ.zero()) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return QOperator(out, _canonical=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _coerce_scalar(c)
        if not c:
            return QOperator.zero()
        return QOperator({k: c * v for k, v in self.terms.items()}, _canonical=True)

    def __mul__(self, other):
        """Composition self o other (other applied first)."""
        if isinstance(other, (int, LaurentPoly, RatQ)):
            return self.scale(other)
        if not isinstance(other, QOperator):
            return NotImplemented
        return compose(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly, RatQ)):
            return self.scale(other)
        return NotImplemented

    # -- action ----------------------------------------------------------

    def apply(self, p: Poly4) -> Poly4:
        out = {}
        for (alpha, delta, gamma), c in self.terms.items():
            for beta, pc in p.terms.items():
                if any(b < g for b, g in zip(beta, gamma)):
                    continue
                coeff = c * pc
                for i in range(4):
                    for j in range(gamma[i]):
                        coeff = coeff * RatQ(q_int(beta[i] - j))
                if not coeff:
                    continue
                k = sum(d * (b - g) for d, b, g in zip(delta, beta, gamma))
                if k:
                    coeff = coeff * RatQ(_Q(-k))
                target = tuple(a + b - g for a, b, g in zip(alpha, beta, gamma))
                s = out.get(target, RatQ.zero()) + coeff
                if s:
                    out[target] = s
                else:
                    out.pop(target, None)
        return Poly4(out)

    def __call__(self, p: Poly4) -> Poly4:
        return self.apply(p)

    def dbar_orders(self):
        """Sorted set of total [d]-orders over the canonical terms."""
        return sorted({sum(g) for (_, _, g) in self.terms})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for alpha, delta, gamma in sorted(self.terms):
            c = self.terms[(alpha, delta, gamma)]
            factors = []
            for i, n in enumerate(alpha):
                if n:
                    factors.append("z_%d" % (i + 1) if n == 1 else "z_%d^%d" % (i + 1, n))
            for i, n in enumerate(delta):
                if n:
                    factors.append("K_%d" % (i + 1) if n == 1 else "K_%d^%d" % (i + 1, n))
            for i, n in enumerate(gamma):
                if n:
                    factors.append("d_%d" % (i + 1) if n == 1 else "d_%d^%d" % (i + 1, n))
            mon = "*".join(factors)
            if not mon:
                parts.append("(%s)" % c)
            elif c == RatQ.one():
                parts.append(mon)
            else:
                parts.append("(%s)*%s" % (c, mon))
        return " + ".join(parts)

    def __repr__(self):
        return "QOperator(%s)" % self


def _to_symbol(terms):
    sym = {}
    for (alpha, delta, gamma), c in terms.items():
        if not c:
            continue
        shift = tuple(a - g for a, g in zip(alpha, gamma))
        tp = _term_symbol(alpha, delta, gamma, c)
        _tpoly_add_into(sym.setdefault(shift, {}), tp)
    return {s: tp for s, tp in sym.items() if tp}


def _from_symbol(sym):
    terms = {}
    for shift, tp in sym.items():
        alpha = tuple(max(s, 0) for s in shift)
        gamma = tuple(max(-s, 0) for s in shift)
        r = dict(tp)
        for i in range(4):
            r = _divide_axis(r, i, gamma[i])
        for delta, c in r.items():
            k = sum(g * d for g, d in zip(gamma, delta))
            if k:
                c = c * RatQ(_Q(-k))
            if c:
                terms[(alpha, delta, gamma)] = c
    return terms


def compose(a: QOperator, b: QOperator) -> QOperator:
    """The composition a o b (b acts first), in canonical normal form."""
    sa = _to_symbol(a.terms)
    sb = _to_symbol(b.terms)
    sym = {}
    for s2, c2 in sb.items():
        for s1, c1 in sa.items():
            shift = tuple(x + y for x, y in zip(s1, s2))
            tp = _tpoly_mul(c2, _tpoly_shift_arg(c1, s2))
            _tpoly_add_into(sym.setdefault(shift, {}), tp)
    sym = {s: tp for s, tp in sym.items() if tp}
    return QOperator(_from_symbol(sym), _canonical=True)


# ------------------------------------------------- generator operators


def qdiff(i: int) -> QOperator:
    """The symmetric q-derivative along axis i: z_i^n -> [n]_q z_i^(n-1)."""
    if i not in (1, 2, 3, 4):
        raise ValueError("axis must be 1..4, got %r" % (i,))
    e = [0, 0, 0, 0]
    e[i - 1] = 1
    return QOperator({(ZERO4, ZERO4, tuple(e)): RatQ.one()}, _canonical=True)


def scaling(i: int, power: int = 1) -> QOperator:
    """The scaling operator K_i^power: z^alpha -> q^(-power*alpha_i) z^alpha."""
    if i not in (1, 2, 3, 4):
        raise ValueError("axis must be 1..4, got %r" % (i,))
    e = [0, 0, 0, 0]
    e[i - 1] = power
    return QOperator({(ZERO4, tuple(e), ZERO4): RatQ.one()}, _canonical=True)


def mul_z(i: int, power: int = 1) -> QOperator:
    """Multiplication by z_i^power."""
    if i not in (1, 2, 3, 4):
        raise ValueError("axis must be 1..4, got %r" % (i,))
    if power < 0:
        raise ValueError("z powers must be non-negative")
    e = [0, 0, 0, 0]
    e[i - 1] = power
    return QOperator({(tuple(e), ZERO4, ZERO4): RatQ.one()}, _canonical=True)
