"""Q(r, s)(zeta) with zeta a primitive cube root of unity (zeta^2 = -1 - zeta)."""

from gmpy2 import mpq

from .ratfunc import RatFunc, ZERO, ONE
from ..errors import DivisionByZero, ModeMismatch

_SCALARS = (int, type(mpq(0)))


class ZetaNum:
    __slots__ = ("a", "b")

    def __init__(self, a, b=ZERO):
        self.a = a
        self.b = b

    @staticmethod
    def _coerce(x):
        if isinstance(x, ZetaNum):
            return x
        if isinstance(x, RatFunc):
            return ZetaNum(x)
        if isinstance(x, _SCALARS):
            return ZetaNum(RatFunc.const(x))
        raise ModeMismatch(f"cannot combine ZetaNum with {type(x).__name__}")

    def is_zero(self):
        return not self.a and not self.b

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __add__(self, o):
        o = self._coerce(o)
        return ZetaNum(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return ZetaNum(-self.a, -self.b)

    def __sub__(self, o):
        o = self._coerce(o)
        return ZetaNum(self.a - o.a, self.b - o.b)

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        o = self._coerce(o)
        a, b, c, d = self.a, self.b, o.a, o.b
        if not b and not d:
            return ZetaNum(a * c)
        bd = b * d
        return ZetaNum(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def inv(self):
        a, b = self.a, self.b
        if not b:
            if not a:
                raise DivisionByZero("inverse of zero")
            return ZetaNum(a.inv())
        # (a + b zeta)((a - b) - b zeta) = a^2 - ab + b^2
        n = (a * a - a * b + b * b).inv()
        return ZetaNum((a - b) * n, -b * n)

    def __truediv__(self, o):
        return self * self._coerce(o).inv()

    def __rtruediv__(self, o):
        return self._coerce(o) * self.inv()

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out, base = ZetaNum(ONE), self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, o):
        try:
            o = self._coerce(o)
        except ModeMismatch:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def render(self):
        if not self.b:
            return self.a.render()
        if not self.a:
            return f"({self.b.render()})*zeta"
        return f"{self.a.render()} + ({self.b.render()})*zeta"

    __str__ = render

    def __repr__(self):
        return f"ZetaNum({self.render()!r})"


ZETA = ZetaNum(ZERO, ONE)
