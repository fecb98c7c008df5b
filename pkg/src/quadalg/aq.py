"""The quadratic algebra on four generators w1..w4 with PBW normal ordering.

Defining relations, oriented toward the normal order w1 < w2 < w3 < w4:

    w1 w2 = q w2 w1        w1 w3 = q w3 w1        w3 w4 = q w4 w3
    w2 w4 = q w4 w2        w2 w3 = w3 w2
    w1 w4 - w4 w1 = (q - q^-1) w2 w3

Elements are stored on the ordered monomial basis w1^a w2^b w3^c w4^d.
Rewriting strictly decreases the lexicographic order of words of a fixed
length, so normal ordering terminates; confluence is checked in the test
suite by reducing with two different strategies.
"""

from __future__ import annotations

from .ring import LaurentPoly, mi_add, mi_check

_Q = LaurentPoly.q
_MU = _Q(1) - _Q(-1)  # q - q^-1

GENERATORS = (1, 2, 3, 4)


def _word_of(gamma):
    word = []
    for i, n in enumerate(gamma):
        word.extend([i + 1] * n)
    return tuple(word)


def _exponents_of(word):
    g = [0, 0, 0, 0]
    for letter in word:
        g[letter - 1] += 1
    return tuple(g)


def reduce_word(word, coeff=None, rightmost=False):
    """Normal-order a word of generator indices; returns {multi-index: coeff}.

    ``rightmost`` switches the strategy from first to last inversion; both
    must agree (local confluence), which the tests assert on all short words.
    """
    if coeff is None:
        coeff = LaurentPoly.one()
    out = {}
    stack = [(tuple(word), coeff)]
    qinv = _Q(-1)
    while stack:
        w, c = stack.pop()
        spot = None
        rng = range(len(w) - 2, -1, -1) if rightmost else range(len(w) - 1)
        for i in rng:
            if w[i] > w[i + 1]:
                spot = i
                break
        if spot is None:
            g = _exponents_of(w)
            s = out.get(g, LaurentPoly.zero()) + c
            if s:
                out[g] = s
            else:
                out.pop(g, None)
            continue
        a, b = w[spot], w[spot + 1]
        swapped = w[:spot] + (b, a) + w[spot + 2 :]
        if (a, b) == (4, 1):
            # w4 w1 = w1 w4 - (q - q^-1) w2 w3
            stack.append((swapped, c))
            stack.append((w[:spot] + (2, 3) + w[spot + 2 :], c * (-_MU)))
        elif (a, b) == (3, 2):
            stack.append((swapped, c))
        else:
            stack.append((swapped, c * qinv))
    return out


class AqElement:
    """A linear combination of normal-ordered monomials with Laurent coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for g, c in terms.items():
                if c:
                    clean[mi_check(g)] = c
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0, 0, 0): LaurentPoly.one()})

    @classmethod
    def monomial(cls, gamma, coeff=None):
        return cls({mi_check(gamma): coeff if coeff is not None else LaurentPoly.one()})

    @classmethod
    def generator(cls, i):
        if i not in GENERATORS:
            raise ValueError("generator index must be 1..4, got %r" % (i,))
        e = [0, 0, 0, 0]
        e[i - 1] = 1
        return cls.monomial(tuple(e))

    # -- algebra ----------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, AqElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return AqElement({g: -c for g, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, AqElement):
            return NotImplemented
        out = dict(self.terms)
        for g, c in other.terms.items():
            s = out.get(g, LaurentPoly.zero()) + c
            if s:
                out[g] = s
            else:
                out.pop(g, None)
        return AqElement(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, AqElement):
            return NotImplemented
        out = {}
        for g1, c1 in self.terms.items():
            w1 = _word_of(g1)
            for g2, c2 in other.terms.items():
                for g, c in reduce_word(w1 + _word_of(g2), c1 * c2).items():
                    s = out.get(g, LaurentPoly.zero()) + c
                    if s:
                        out[g] = s
                    else:
                        out.pop(g, None)
        return AqElement(out)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = AqElement.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c):
        if isinstance(c, int):
            c = LaurentPoly.const(c)
        return AqElement({g: c * v for g, v in self.terms.items()})

    def degrees(self):
        return sorted({sum(g) for g in self.terms})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for g in sorted(self.terms):
            c = self.terms[g]
            mon = "*".join(
                "w%d" % (i + 1) if n == 1 else "w%d^%d" % (i + 1, n)
                for i, n in enumerate(g) if n
            )
            if not mon:
                parts.append("(%s)" % c)
            elif c == LaurentPoly.one():
                parts.append(mon)
            else:
                parts.append("(%s)*%s" % (c, mon))
        return " + ".join(parts)

    def __repr__(self):
        return "AqElement(%s)" % self


def normal_order(word) -> AqElement:
    """Normal-ordered expansion of an arbitrary product of generators."""
    for letter in word:
        if letter not in GENERATORS:
            raise ValueError("generator index must be 1..4, got %r" % (letter,))
    return AqElement(reduce_word(tuple(word)))


def multiply(a: AqElement, b: AqElement) -> AqElement:
    return a * b


def commutator(a: AqElement, b: AqElement) -> AqElement:
    return a * b - b * a


def center_element() -> AqElement:
    """The central element w1 w4 - q w2 w3."""
    return AqElement(
        {
            (1, 0, 0, 1): LaurentPoly.one(),
            (0, 1, 1, 0): -_Q(1),
        }
    )


def relation_pairs():
    """The relations as (lhs, rhs) AqElement pairs, lhs the reversed product.

    Each pair encodes one defining relation in the form
    ``normal_order(reversed word) == rhs`` with rhs expressed on the
    ordered basis, e.g. w2*w1 == q^-1 * w1w2 and
    w4*w1 == w1w4 - (q - q^-1) w2w3.
    """
    qinv = _Q(-1)
    pairs = [
        (normal_order((2, 1)), AqElement({(1, 1, 0, 0): qinv})),
        (normal_order((3, 1)), AqElement({(1, 0, 1, 0): qinv})),
        (normal_order((4, 3)), AqElement({(0, 0, 1, 1): qinv})),
        (normal_order((4, 2)), AqElement({(0, 1, 0, 1): qinv})),
        (normal_order((3, 2)), AqElement({(0, 1, 1, 0): LaurentPoly.one()})),
        (
            normal_order((4, 1)),
            AqElement({(1, 0, 0, 1): LaurentPoly.one(), (0, 1, 1, 0): -_MU}),
        ),
    ]
    return pairs
