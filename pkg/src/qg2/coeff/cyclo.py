"""Arithmetic in Q(theta) = Q[x] / Phi_ell(x), theta a primitive ell-th root of 1."""

from functools import lru_cache

from gmpy2 import mpq

from ..errors import DivisionByZero, ModeMismatch


def _pdivmod(a, b):
    # dense lists, low degree first
    a = list(a)
    q = [mpq(0)] * max(len(a) - len(b) + 1, 0)
    inv = 1 / b[-1]
    while len(a) >= len(b) and any(a):
        k = len(a) - len(b)
        t = a[-1] * inv
        q[k] = t
        for i, c in enumerate(b):
            a[k + i] -= t * c
        a.pop()
        while a and not a[-1]:
            a.pop()
    while a and not a[-1]:
        a.pop()
    return q, a


def _pmul(a, b):
    if not a or not b:
        return []
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and not out[-1]:
        out.pop()
    return out


def _psub(a, b):
    out = list(a) + [mpq(0)] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    while out and not out[-1]:
        out.pop()
    return out


@lru_cache(maxsize=None)
def cyclotomic(n):
    """Coefficients of Phi_n, low degree first, as a tuple of ints."""
    p = [mpq(-1)] + [mpq(0)] * (n - 1) + [mpq(1)]
    for d in range(1, n):
        if n % d == 0:
            p, rem = _pdivmod(p, [mpq(c) for c in cyclotomic(d)])
            assert not rem
    return tuple(int(c) for c in p)


class _Field:
    """Per-ell tables shared by all CycloNum values."""

    def __init__(self, ell):
        self.ell = ell
        self.phi_poly = cyclotomic(ell)
        self.deg = len(self.phi_poly) - 1
        self.prime = all(c == 1 for c in self.phi_poly)
        self.tail = [mpq(c) for c in self.phi_poly[:-1]]
        zero = (mpq(0),) * self.deg
        powers = []
        for k in range(ell):
            raw = [mpq(0)] * max(k + 1, self.deg)
            raw[k] = mpq(1)
            powers.append(self.reduce(raw))
        self.powers = powers
        self.zero = zero

    def reduce(self, raw):
        raw = list(raw)
        d = self.deg
        if self.prime:
            for k in range(len(raw) - 1, d - 1, -1):
                v = raw[k]
                if v:
                    for i in range(k - d, k):
                        raw[i] -= v
        else:
            tail = self.tail
            for k in range(len(raw) - 1, d - 1, -1):
                v = raw[k]
                if v:
                    base = k - d
                    for i, c in enumerate(tail):
                        if c:
                            raw[base + i] -= v * c
        out = raw[:d]
        if len(out) < d:
            out += [mpq(0)] * (d - len(out))
        return tuple(out)


@lru_cache(maxsize=None)
def field(ell):
    return _Field(ell)


class CycloNum:
    __slots__ = ("F", "c", "_hash")

    def __init__(self, F, coeffs):
        self.F = F
        self.c = coeffs
        self._hash = None

    @classmethod
    def const(cls, ell, v):
        F = field(ell)
        c = [mpq(0)] * F.deg
        c[0] = mpq(v)
        return cls(F, tuple(c))

    @classmethod
    def theta_power(cls, ell, k):
        F = field(ell)
        return cls(F, F.powers[k % ell])

    @classmethod
    def from_power_sums(cls, ell, vec):
        """Sum of vec[k] * theta^k over k in [0, ell)."""
        F = field(ell)
        out = [mpq(0)] * F.deg
        for k, v in enumerate(vec):
            if v:
                for i, c in enumerate(F.powers[k]):
                    if c:
                        out[i] += v * c
        return cls(F, tuple(out))

    @property
    def ell(self):
        return self.F.ell

    def _check(self, other):
        if isinstance(other, CycloNum):
            if other.F is not self.F:
                raise ModeMismatch("cyclotomic numbers of different orders")
            return other
        if isinstance(other, (int, type(mpq(0)))):
            return CycloNum.const(self.F.ell, other)
        raise ModeMismatch(f"cannot combine CycloNum with {type(other).__name__}")

    def is_zero(self):
        return not any(self.c)

    def __bool__(self):
        return any(self.c)

    def __add__(self, other):
        other = self._check(other)
        return CycloNum(self.F, tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.F, tuple(-a for a in self.c))

    def __sub__(self, other):
        other = self._check(other)
        return CycloNum(self.F, tuple(a - b for a, b in zip(self.c, other.c)))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, type(mpq(0)))):
            return CycloNum(self.F, tuple(a * other for a in self.c))
        other = self._check(other)
        a, b = self.c, other.c
        d = self.F.deg
        raw = [mpq(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        raw[i + j] += x * y
        return CycloNum(self.F, self.F.reduce(raw))

    __rmul__ = __mul__

    def inv(self):
        if not any(self.c):
            raise DivisionByZero("inverse of zero")
        # extended Euclid: find u with u*a = 1 mod Phi
        a = list(self.c)
        while a and not a[-1]:
            a.pop()
        m = [mpq(c) for c in self.F.phi_poly]
        r0, r1 = m, a
        s0, s1 = [], [mpq(1)]
        while len(r1) > 1:
            q, rem = _pdivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        if not r1:
            raise DivisionByZero("non-invertible cyclotomic element")
        k = 1 / r1[0]
        u = [x * k for x in s1]
        return CycloNum(self.F, self.F.reduce(u))

    def __truediv__(self, other):
        return self * self._check(other).inv()

    def __rtruediv__(self, other):
        return self._check(other) * self.inv()

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = CycloNum.const(self.F.ell, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.F is other.F and self.c == other.c
        if isinstance(other, (int, type(mpq(0)))):
            return self.c[0] == other and not any(self.c[1:])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not any(self.c[1:]):
                self._hash = hash(self.c[0])
            else:
                self._hash = hash((self.F.ell, self.c))
        return self._hash

    def render(self):
        terms = [(k, v) for k, v in enumerate(self.c) if v]
        if not terms:
            return "0"
        out = []
        for k, v in reversed(terms):
            mono = "" if k == 0 else ("theta" if k == 1 else f"theta^{k}")
            neg = v < 0
            v = -v if neg else v
            if not mono:
                body = str(v)
            elif v == 1:
                body = mono
            else:
                body = f"{v}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    __str__ = render

    def __repr__(self):
        return f"CycloNum({self.render()!r}, ell={self.F.ell})"

