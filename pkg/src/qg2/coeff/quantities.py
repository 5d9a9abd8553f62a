"""(r, s)-integers, factorials, binomials and the pairing table."""

from functools import lru_cache

from .modes import GENERIC
from .ratfunc import RatFunc, ONE
from ..errors import InvalidArgs


@lru_cache(maxsize=None)
def rs_integer(n, i=1):
    """[n]_i = (r^{in} - s^{in}) / (r^i - s^i) = sum_k r^{i(n-1-k)} s^{ik}."""
    if n < 0:
        raise InvalidArgs(f"n must be non-negative, got {n}")
    return RatFunc.from_terms({(i * (n - 1 - k), i * k): 1 for k in range(n)})


@lru_cache(maxsize=None)
def rs_factorial(n, i=1):
    out = ONE
    for k in range(2, n + 1):
        out = out * rs_integer(k, i)
    return out


@lru_cache(maxsize=None)
def rs_binomial(n, m, i=1):
    if m < 0 or m > n:
        raise InvalidArgs(f"binomial needs 0 <= m <= n, got n={n}, m={m}")
    return rs_factorial(n, i) / (rs_factorial(m, i) * rs_factorial(n - m, i))


def rs_quantity(kind, n, m=0, i=1, mode=GENERIC):
    if i not in (1, 2, 3):
        raise InvalidArgs(f"exponent scale must be 1, 2 or 3, got {i}")
    if kind == "integer":
        f = rs_integer(n, i)
    elif kind == "factorial":
        if n < 0:
            raise InvalidArgs(f"n must be non-negative, got {n}")
        f = rs_factorial(n, i)
    elif kind == "binomial":
        f = rs_binomial(n, m, i)
    else:
        raise InvalidArgs(f"unknown quantity {kind!r}")
    return mode.lift(f)


@lru_cache(maxsize=None)
def _theta_binomial(n, j):
    # Gaussian binomial in q = r s^-1 via q-Pascal: (n j) = (n-1 j-1) + q^j (n-1 j)
    if j == 0 or j == n:
        return ONE
    return _theta_binomial(n - 1, j - 1) + RatFunc.monomial(j, -j) * _theta_binomial(n - 1, j)


def theta_binomial(n, j, mode=GENERIC):
    if j < 0 or j > n:
        raise InvalidArgs(f"theta_binomial needs 0 <= j <= n, got n={n}, j={j}")
    return mode.lift(_theta_binomial(n, j))


# <w_i', w_j> for i, j in {1, 2}, as exponents (a, b) of r^a s^b
PAIRING_EXPS = {
    (1, 1): (1, -1),
    (1, 2): (-3, 0),
    (2, 1): (0, 3),
    (2, 2): (3, -3),
}


def pairing_scalar(i, j, mode=GENERIC):
    if (i, j) not in PAIRING_EXPS:
        raise InvalidArgs(f"pairing indices must be 1 or 2, got ({i}, {j})")
    return mode.mono(*PAIRING_EXPS[(i, j)])
