"""Elements of Q(r, s).

A value is stored as ``r**a * s**b * num / den`` where ``num`` and ``den`` are
polynomials (see :mod:`poly`) neither divisible by ``r`` nor by ``s``,
``gcd(num, den) == 1`` and ``den`` is monic in graded lex order.  This form is
canonical, so equality is structural.
"""

from math import lcm, gcd as igcd

from gmpy2 import mpq

from . import poly as P
from ..errors import DivisionByZero


def _strip(p):
    """Split off the largest monomial factor: returns (p / r^i s^j, (i, j))."""
    m = P.min_exps(p)
    if m == (0, 0):
        return p, m
    return P.shift(p, (-m[0], -m[1])), m


class RatFunc:
    __slots__ = ("num", "den", "sh", "_hash")

    def __init__(self, num=None, den=None, sh=(0, 0), _canonical=False):
        # num/den may carry negative exponents unless _canonical is set
        if num is None:
            num = {}
        if _canonical:
            self.num, self.den, self.sh = num, den, sh
        else:
            self.num, self.den, self.sh = _normalize(num, den if den is not None else P.ONE, sh)
        self._hash = None

    # -- constructors --

    @classmethod
    def const(cls, c):
        c = mpq(c)
        if not c:
            return ZERO
        return cls({(0, 0): c}, P.ONE, (0, 0), _canonical=True)

    @classmethod
    def monomial(cls, a, b, c=1):
        c = mpq(c)
        if not c:
            return ZERO
        return cls({(0, 0): c}, P.ONE, (a, b), _canonical=True)

    @classmethod
    def from_terms(cls, terms):
        """Build from a Laurent dict {(a, b): coeff}."""
        terms = {m: mpq(c) for m, c in terms.items() if c}
        if not terms:
            return ZERO
        p, m = _strip(terms)
        return cls(p, P.ONE, m, _canonical=True)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RatFunc):
            return x
        return cls.const(x)

    # -- predicates --

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_poly(self):
        """True if the value is a Laurent polynomial."""
        return P.is_one(self.den)

    def is_monomial(self):
        return P.is_one(self.den) and len(self.num) == 1

    def const_value(self):
        """The rational value if constant, else None."""
        if self.sh == (0, 0) and P.is_one(self.den) and len(self.num) == 1:
            c = self.num.get((0, 0))
            if c is not None:
                return c
        if not self.num:
            return mpq(0)
        return None

    # -- laurent views --

    def numerator_terms(self):
        return P.shift(self.num, self.sh)

    def denominator_terms(self):
        return self.den

    # -- arithmetic --

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, (int, type(mpq(0)))):
                other = RatFunc.const(other)
            else:
                return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        sa, sb = self.sh, other.sh
        m = (min(sa[0], sb[0]), min(sa[1], sb[1]))
        if self.den == other.den:
            n = P.add(P.shift(self.num, (sa[0] - m[0], sa[1] - m[1])),
                      P.shift(other.num, (sb[0] - m[0], sb[1] - m[1])))
            if not n:
                return ZERO
            if P.is_one(self.den):
                n, k = _strip(n)
                return RatFunc(n, P.ONE, (m[0] + k[0], m[1] + k[1]), _canonical=True)
            return RatFunc(n, self.den, m)
        n = P.add(P.mul(P.shift(self.num, (sa[0] - m[0], sa[1] - m[1])), other.den),
                  P.mul(P.shift(other.num, (sb[0] - m[0], sb[1] - m[1])), self.den))
        if not n:
            return ZERO
        return RatFunc(n, P.mul(self.den, other.den), m)

    __radd__ = __add__

    def __neg__(self):
        if not self.num:
            return self
        return RatFunc(P.neg(self.num), self.den, self.sh, _canonical=True)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, (int, type(mpq(0)))):
                other = RatFunc.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RatFunc.coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, (int, type(mpq(0)))):
                if not other:
                    return ZERO
                return RatFunc(P.scale(self.num, mpq(other)), self.den, self.sh, _canonical=True)
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        sh = (self.sh[0] + other.sh[0], self.sh[1] + other.sh[1])
        d1, d2 = self.den, other.den
        one1, one2 = P.is_one(d1), P.is_one(d2)
        if one1 and one2:
            return RatFunc(P.mul(self.num, other.num), P.ONE, sh, _canonical=True)
        n1, n2 = self.num, other.num
        if not one2:
            g = P.gcd(n1, d2)
            if not P.is_one(g):
                n1, d2 = P.divexact(n1, g), P.divexact(d2, g)
        if not one1:
            g = P.gcd(n2, d1)
            if not P.is_one(g):
                n2, d1 = P.divexact(n2, g), P.divexact(d1, g)
        num, den = P.mul(n1, n2), P.mul(d1, d2)
        _, lc = P.lead(den)
        if lc != 1:
            inv = 1 / lc
            num, den = P.scale(num, inv), P.scale(den, inv)
        return RatFunc(num, den, sh, _canonical=True)

    __rmul__ = __mul__

    def inv(self):
        if not self.num:
            raise DivisionByZero("inverse of zero")
        _, lc = P.lead(self.num)
        inv = 1 / lc
        return RatFunc(P.scale(self.den, inv), P.scale(self.num, inv),
                       (-self.sh[0], -self.sh[1]), _canonical=True)

    def __truediv__(self, other):
        return self * RatFunc.coerce(other).inv()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inv()

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        if n == 0:
            return ONE
        if P.is_one(self.den) and len(self.num) == 1:
            (m, c), = self.num.items()
            return RatFunc({m: c ** n}, P.ONE, (self.sh[0] * n, self.sh[1] * n), _canonical=True)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    # -- structure --

    def swap(self):
        """Exchange r and s."""
        if not self.num:
            return self
        num = {(j, i): c for (i, j), c in self.num.items()}
        den = {(j, i): c for (i, j), c in self.den.items()}
        _, lc = P.lead(den)
        if lc != 1:
            inv = 1 / lc
            num, den = P.scale(num, inv), P.scale(den, inv)
        return RatFunc(num, den, (self.sh[1], self.sh[0]), _canonical=True)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, (int, type(mpq(0)))):
                other = RatFunc.const(other)
            else:
                return NotImplemented
        return self.sh == other.sh and self.num == other.num and self.den == other.den

    def __hash__(self):
        h = self._hash
        if h is None:
            c = self.const_value()
            if c is not None:
                h = hash(c)
            else:
                h = hash((self.sh, frozenset(self.num.items()), frozenset(self.den.items())))
            self._hash = h
        return h

    def __repr__(self):
        return f"RatFunc({self.render()!r})"

    def __str__(self):
        return self.render()

    def render(self):
        return render_ratfunc(self)


def _normalize(num, den, sh):
    if not num:
        return {}, P.ONE, (0, 0)
    if not den:
        raise DivisionByZero("zero denominator")
    num, mn = _strip(num)
    den, md = _strip(den)
    sh = (sh[0] + mn[0] - md[0], sh[1] + mn[1] - md[1])
    if not P.is_const(den):
        g = P.gcd(num, den)
        if not P.is_one(g):
            num, den = P.divexact(num, g), P.divexact(den, g)
    _, lc = P.lead(den)
    if lc != 1:
        inv = 1 / lc
        num, den = P.scale(num, inv), P.scale(den, inv)
    return num, den, sh


ZERO = RatFunc({}, P.ONE, (0, 0), _canonical=True)
ONE = RatFunc({(0, 0): mpq(1)}, P.ONE, (0, 0), _canonical=True)
R = RatFunc.monomial(1, 0)
S = RatFunc.monomial(0, 1)


# -- text --

def _mono_text(a, b, var_r="r", var_s="s"):
    parts = []
    for v, e in ((var_r, a), (var_s, b)):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def render_laurent(terms):
    """Render {(a, b): int} as a signed sum, highest graded-lex term first."""
    if not terms:
        return "0"
    out = []
    for m in sorted(terms, key=P.grlex_key, reverse=True):
        c = terms[m]
        mono = _mono_text(*m)
        neg = c < 0
        c = -c if neg else c
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def integer_scaled(num, den):
    """Scale num/den by one rational so all coefficients are coprime integers."""
    coeffs = list(num.values()) + list(den.values())
    L = lcm(*[int(c.denominator) for c in coeffs])
    G = 0
    for c in coeffs:
        G = igcd(G, int(c * L))
    k = mpq(L, G)
    _, lc = P.lead(den)
    if lc * k < 0:
        k = -k
    return ({m: int(c * k) for m, c in num.items()},
            {m: int(c * k) for m, c in den.items()})


def render_ratfunc(f):
    if not f.num:
        return "0"
    n, d = integer_scaled(P.shift(f.num, f.sh), f.den)
    sign = ""
    if not P.is_one(d) and n[max(n, key=P.grlex_key)] < 0:
        sign, n = "-", {m: -c for m, c in n.items()}
    ntext = render_laurent(n)
    if P.is_const(d):
        dv = d[(0, 0)]
        if dv == 1:
            return ntext
        return f"{sign}({ntext})/{dv}"
    return f"{sign}({ntext})/({render_laurent(d)})"
