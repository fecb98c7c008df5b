"""Exact scalar arithmetic in the ring Q[q, q^-1] of Laurent polynomials.

Everything downstream (normal ordering, operator calculus, ideal
membership) runs over this ring or over its fraction field, with
rational coefficients throughout.  No floating point anywhere.

Also provides the q-combinatorics ([n]_q, q-factorials of multi-indices)
and an exact root-of-unity vanishing test via cyclotomic reduction.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("coefficients must be int or Fraction, got %r" % (x,))


class LaurentPoly:
    """A Laurent polynomial in q with Fraction coefficients.

    Stored sparsely as {exponent: coefficient} with no zero coefficients,
    so equality is structural.  Instances are immutable by convention.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = _as_fraction(c)
                if c:
                    clean[int(k)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def q(cls, exp: int = 1) -> "LaurentPoly":
        return cls({exp: 1})

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: _as_fraction(c)})

    # -- ring structure ----------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self.terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-other if isinstance(other, LaurentPoly) else LaurentPoly.const(-other))

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers only for monomials; use divide_exact")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- inspection ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Top exponent; raises on the zero polynomial."""
        return max(self.terms)

    @property
    def valuation(self) -> int:
        """Bottom exponent; raises on the zero polynomial."""
        return min(self.terms)

    def coeff(self, exp: int) -> Fraction:
        return self.terms.get(exp, Fraction(0))

    def subs_q_inverse(self) -> "LaurentPoly":
        """The image under the bar involution q -> q^-1."""
        return LaurentPoly({-k: c for k, c in self.terms.items()})

    def is_unit(self) -> bool:
        """True for c*q^k with c != 0."""
        return len(self.terms) == 1

    # -- text and JSON forms -------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif mag == 1:
                body = "q" if k == 1 else "q^%d" % k
            else:
                body = "%s*q%s" % (mag, "" if k == 1 else "^%d" % k)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return "LaurentPoly(%s)" % self

    def to_json(self) -> list:
        return [
            {"exp": k, "num": str(self.terms[k].numerator), "den": str(self.terms[k].denominator)}
            for k in sorted(self.terms, reverse=True)
        ]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({int(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in data})


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coeff>\d+(?:/\d+)?)\s*(?:\*\s*(?P<qa>q)(?:\^(?P<expa>-?\d+))?)?
          | (?P<qb>q)(?:\^(?P<expb>-?\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the canonical textual form, e.g. ``q^2 + 1 - 3/2*q^-1``."""
    pos = 0
    total = {}
    text = text.strip()
    if not text:
        raise ValueError("empty Laurent polynomial")
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError("bad Laurent term at position %d in %r" % (pos, text))
        if not first and m.group("sign") is None:
            raise ValueError("missing +/- at position %d in %r" % (pos, text))
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coeff") is not None:
            c = Fraction(m.group("coeff"))
            if m.group("qa"):
                k = int(m.group("expa")) if m.group("expa") else 1
            else:
                k = 0
        else:
            c = Fraction(1)
            k = int(m.group("expb")) if m.group("expb") else 1
        total[k] = total.get(k, 0) + sign * c
        pos = m.end()
        first = False
    return LaurentPoly(total)


# -- q-combinatorics ---------------------------------------------------


@lru_cache(maxsize=None)
def q_int(n: int) -> LaurentPoly:
    """The symmetric q-integer (q^n - q^-n)/(q - q^-1) = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n < 0:
        raise ValueError("q_int requires n >= 0, got %d" % n)
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_factorial_int(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("q_factorial requires n >= 0, got %d" % n)
    if n == 0:
        return LaurentPoly.one()
    return q_factorial_int(n - 1) * q_int(n)


def q_factorial(gamma) -> LaurentPoly:
    """Product of the single-index q-factorials over a multi-index."""
    out = LaurentPoly.one()
    for n in gamma:
        out = out * q_factorial_int(n)
    return out


# -- exact division and polynomial helpers -----------------------------


def _to_dense(p: LaurentPoly):
    """(shift, [c_0..c_d]) with p = q^shift * sum c_i q^i and c_0 != 0."""
    v = p.valuation
    d = p.degree
    return v, [p.terms.get(k, Fraction(0)) for k in range(v, d + 1)]


def _dense_trim(cs):
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _dense_divmod(num, den):
    num = list(num)
    out = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        f = num[i + len(den) - 1] / lead
        if f:
            out[i] = f
            for j, c in enumerate(den):
                num[i + j] -= f * c
    return out, _dense_trim(num)


def divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient num/den when the division is exact in Q[q, q^-1]; hard error otherwise."""
    if not den:
        raise ExactDivisionError("division by the zero polynomial")
    if not num:
        return LaurentPoly.zero()
    vn, dn = _to_dense(num)
    vd, dd = _to_dense(den)
    quo, rem = _dense_divmod(dn, dd)
    if rem:
        raise ExactDivisionError("non-exact division: %s by %s" % (num, den))
    return LaurentPoly({vn - vd + i: c for i, c in enumerate(quo)})


def _dense_gcd(a, b):
    a = _dense_trim(list(a))
    b = _dense_trim(list(b))
    while b:
        _, r = _dense_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of the polynomial parts, as a Laurent polynomial with valuation 0."""
    if not a:
        return _monic_val0(b)
    if not b:
        return _monic_val0(a)
    _, da = _to_dense(a)
    _, db = _to_dense(b)
    g = _dense_gcd(da, db)
    return LaurentPoly({i: c for i, c in enumerate(g)})


def _monic_val0(p: LaurentPoly) -> LaurentPoly:
    if not p:
        return LaurentPoly.zero()
    v, d = _to_dense(p)
    lead = d[-1]
    return LaurentPoly({i: c / lead for i, c in enumerate(d)})


# -- cyclotomic reduction ----------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic(m: int):
    """Coefficient tuple (ascending) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("cyclotomic order must be >= 1")
    # x^m - 1 divided by the cyclotomics of all proper divisors
    num = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            num, rem = _dense_divmod(num, [Fraction(c) for c in cyclotomic(d)])
            assert not rem
    return tuple(num)


def vanishes_at_root_of_unity(p: LaurentPoly, m: int) -> bool:
    """True iff p(q) = 0 at every primitive m-th root of unity.

    Negative exponents are cleared with a unit q-power (harmless at roots
    of unity) and the result is reduced modulo the m-th cyclotomic
    polynomial; vanishing is equivalent to a zero remainder.
    """
    if m < 1:
        raise ValueError("root-of-unity order must be >= 1")
    if not p:
        return True
    v = p.valuation
    shifted = p * LaurentPoly.q(-v) if v < 0 else p
    _, dense = _to_dense(shifted)
    if shifted.valuation > 0:
        dense = [Fraction(0)] * shifted.valuation + dense
    _, rem = _dense_divmod(dense, [Fraction(c) for c in cyclotomic(m)])
    return not rem


# -- fraction field -----------------------------------------------------


class RatQ:
    """An element of Q(q), stored as num/den with a canonical denominator.

    The denominator is a monic polynomial in q with nonzero constant
    term; all q-power units are absorbed into the numerator.  Exact
    arithmetic; equality is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = LaurentPoly.const(num)
        if den is None:
            den = LaurentPoly.one()
        elif isinstance(den, (int, Fraction)):
            den = LaurentPoly.const(den)
        if not den:
            raise ZeroDivisionError("zero denominator in RatQ")
        if not num:
            self.num = LaurentPoly.zero()
            self.den = LaurentPoly.one()
            return
        if den.is_unit():
            (k, c), = den.terms.items()
            self.num = num * LaurentPoly({-k: Fraction(1) / c})
            self.den = LaurentPoly.one()
            return
        g = laurent_gcd(num, den)
        if g.degree > 0:
            num = divide_exact(num, g)
            den = divide_exact(den, g)
        vd, dd = _to_dense(den)
        lead = dd[-1]
        self.den = LaurentPoly({i: c / lead for i, c in enumerate(dd)})
        self.num = num * LaurentPoly({-vd: Fraction(1) / lead})

    @classmethod
    def zero(cls) -> "RatQ":
        return cls(0)

    @classmethod
    def one(cls) -> "RatQ":
        return cls(1)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = _coerce_ratq(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        out = object.__new__(RatQ)
        out.num = -self.num
        out.den = self.den
        return out

    def __add__(self, other):
        other = _coerce_ratq(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatQ(self.num + other.num, self.den)
        return RatQ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_ratq(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_ratq(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.terms == {0: Fraction(1)} and other.den.terms == {0: Fraction(1)}:
            out = object.__new__(RatQ)
            out.num = self.num * other.num
            out.den = self.den
            return out
        return RatQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_ratq(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero in RatQ")
        return RatQ(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce_ratq(other) / self

    def inverse(self) -> "RatQ":
        return RatQ(self.den, self.num)

    def is_laurent(self) -> bool:
        return self.den == LaurentPoly.one()

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ExactDivisionError("not a Laurent polynomial: %s" % self)
        return self.num

    def __str__(self):
        if self.is_laurent():
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "RatQ(%s)" % self


def _coerce_ratq(x):
    if isinstance(x, RatQ):
        return x
    if isinstance(x, (int, Fraction)):
        return RatQ(x)
    if isinstance(x, LaurentPoly):
        return RatQ(x)
    return NotImplemented


# -- multi-indices ------------------------------------------------------

ZERO4 = (0, 0, 0, 0)


def mi_check(gamma):
    """Validate a 4-part multi-index of non-negative integers."""
    g = tuple(int(x) for x in gamma)
    if len(g) != 4 or any(x < 0 for x in g):
        raise ValueError("multi-index must be 4 non-negative integers, got %r" % (gamma,))
    return g


def mi_add(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def mi_degree(a) -> int:
    return a[0] + a[1] + a[2] + a[3]


def unit_index(i: int):
    """The multi-index with a single 1 in axis i (1-based)."""
    e = [0, 0, 0, 0]
    e[i - 1] = 1
    return tuple(e)


def all_indices(degree: int):
    """All 4-part multi-indices of the given total degree, lexicographic."""
    out = []
    for a in range(degree, -1, -1):
        for b in range(degree - a, -1, -1):
            for c in range(degree - a - b, -1, -1):
                out.append((a, b, c, degree - a - b - c))
    return sorted(out)


def indices_up_to(degree: int):
    out = []
    for d in range(degree + 1):
        out.extend(all_indices(d))
    return out
