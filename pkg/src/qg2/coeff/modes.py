"""Coefficient modes.

A mode fixes the coefficient field and the specialization of the formal
parameters r, s into it.  Everything above this layer only talks to a mode
through ``lift`` (image of an element of Q(r, s)), ``mono`` (image of
``r**a * s**b``), ``zero``/``one`` and ``coerce``.
"""

from functools import lru_cache
from math import gcd

from gmpy2 import mpq

from . import poly as P
from .cyclo import CycloNum, field
from .ratfunc import RatFunc, ZERO, ONE
from .zeta import ZetaNum
from ..errors import InvalidArgs, PoleAtSpecialization

_SCALARS = (int, type(mpq(0)))


class CoeffMode:
    kind = None
    generic = False

    def lift(self, f):
        raise NotImplementedError

    def mono(self, a, b):
        return self._mono(a, b)

    def coerce(self, x):
        if isinstance(x, RatFunc):
            return self.lift(x)
        if isinstance(x, _SCALARS):
            return self.const(x)
        return x

    def render(self, c):
        return c.render()

    def __eq__(self, other):
        return type(self) is type(other) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


class Generic(CoeffMode):
    kind = "generic"
    generic = True

    def __init__(self):
        self.zero = ZERO
        self.one = ONE
        self._mono = lru_cache(maxsize=None)(RatFunc.monomial)

    def key(self):
        return ("generic",)

    def lift(self, f):
        return f

    def const(self, v):
        return RatFunc.const(v)

    def __repr__(self):
        return "Generic()"


def validate_root(ell, y, z):
    if ell < 2:
        raise InvalidArgs(f"ell must be at least 2, got {ell}")
    if gcd(ell, 3) != 1:
        raise InvalidArgs(f"ell={ell} must be coprime to 3")
    if (3 * y - 3 * z) % ell == 0:
        raise InvalidArgs(f"r^3 = s^3 at (ell, y, z) = ({ell}, {y}, {z})")
    if (4 * y - 4 * z) % ell == 0:
        raise InvalidArgs(f"r^4 = s^4 at (ell, y, z) = ({ell}, {y}, {z})")


class RootOfUnity(CoeffMode):
    kind = "root"

    def __init__(self, ell=5, y=1, z=2, check=True):
        if check:
            validate_root(ell, y, z)
        self.ell, self.y, self.z = ell, y, z
        self.F = field(ell)
        self.zero = CycloNum.const(ell, 0)
        self.one = CycloNum.const(ell, 1)
        self._mono = lru_cache(maxsize=None)(self._theta_mono)

    def key(self):
        return ("root", self.ell, self.y, self.z)

    def _theta_mono(self, a, b):
        return CycloNum.theta_power(self.ell, a * self.y + b * self.z)

    def theta(self, k=1):
        return CycloNum.theta_power(self.ell, k)

    def const(self, v):
        return CycloNum.const(self.ell, v)

    def _eval(self, terms):
        ell, y, z = self.ell, self.y, self.z
        vec = [mpq(0)] * ell
        for (a, b), c in terms.items():
            vec[(a * y + b * z) % ell] += c
        return CycloNum.from_power_sums(ell, vec)

    def lift(self, f):
        c = f.const_value()
        if c is not None:
            return self.const(c)
        num = self._eval(P.shift(f.num, f.sh))
        if P.is_one(f.den):
            return num
        den = self._eval(f.den)
        if not den:
            raise PoleAtSpecialization(
                f"denominator {f.render()} vanishes at r=theta^{self.y}, s=theta^{self.z}, ell={self.ell}")
        return num * den.inv()

    def __repr__(self):
        return f"RootOfUnity(ell={self.ell}, y={self.y}, z={self.z})"


def specialize(f, mode):
    if not isinstance(mode, RootOfUnity):
        raise InvalidArgs("specialize needs a root-of-unity mode")
    return mode.lift(RatFunc.coerce(f))


class Twisted(CoeffMode):
    """Q(r, s)(zeta) with r, s mapped to zeta^k r, zeta^k s (or zeta^k s, zeta^k r if swapped).

    ``Twisted(0, False)`` is the plain extension used as the source algebra
    when checking the isomorphism families.
    """
    kind = "twisted"

    def __init__(self, k=0, swap=False):
        self.k = k % 3
        self.swap = swap
        self.zero = ZetaNum(ZERO)
        self.one = ZetaNum(ONE)
        self._mono = lru_cache(maxsize=None)(self._zmono)
        self._lift = lru_cache(maxsize=4096)(self._lift_raw)

    def key(self):
        return ("twisted", self.k, self.swap)

    def _zpow(self, n):
        n %= 3
        if n == 0:
            return self.one
        if n == 1:
            return ZetaNum(ZERO, ONE)
        return ZetaNum(-ONE, -ONE)

    def _zmono(self, a, b):
        if self.swap:
            a, b = b, a
        return ZetaNum(RatFunc.monomial(a, b)) * self._zpow(self.k * (a + b))

    def const(self, v):
        return ZetaNum(RatFunc.const(v))

    def _split(self, terms):
        parts = [{}, {}, {}]
        for (a, b), c in terms.items():
            parts[(self.k * (a + b)) % 3][(a, b)] = c
        n0, n1, n2 = (RatFunc.from_terms(p) for p in parts)
        return ZetaNum(n0 - n2, n1 - n2)

    def _lift_raw(self, f):
        if self.swap:
            f = f.swap()
        if self.k == 0:
            return ZetaNum(f)
        num = self._split(P.shift(f.num, f.sh))
        if P.is_one(f.den):
            return num
        return num / self._split(f.den)

    def lift(self, f):
        return self._lift(f)

    def __repr__(self):
        return f"Twisted(k={self.k}, swap={self.swap})"


GENERIC = Generic()


def make_mode(name="generic", ell=5, y=1, z=2):
    if name == "generic":
        return GENERIC
    if name == "root":
        return RootOfUnity(ell, y, z)
    raise InvalidArgs(f"unknown mode {name!r}")
