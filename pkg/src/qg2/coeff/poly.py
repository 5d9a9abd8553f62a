"""Sparse bivariate polynomials over Q in (r, s) and their GCD.

A polynomial is a plain ``dict`` mapping exponent pairs ``(i, j)`` of
``r**i * s**j`` to nonzero ``mpq`` coefficients.  Exponents are non-negative
everywhere in this module; Laurent shifts are handled by :mod:`ratfunc`.

The GCD views a polynomial as univariate in ``r`` with coefficients in
``Q[s]`` and runs a subresultant remainder sequence, extracting contents in
``Q[s]`` with the ordinary Euclidean algorithm.
"""

from gmpy2 import mpq

ONE = {(0, 0): mpq(1)}


def grlex_key(m):
    # graded lex with r > s
    return (m[0] + m[1], m[0])


def lead(p):
    m = max(p, key=grlex_key)
    return m, p[m]


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for m, c in b.items():
        v = out.get(m)
        if v is None:
            out[m] = c
        else:
            v = v + c
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def sub(a, b):
    out = dict(a)
    for m, c in b.items():
        v = out.get(m)
        if v is None:
            out[m] = -c
        else:
            v = v - c
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def neg(a):
    return {m: -c for m, c in a.items()}


def scale(a, c):
    if not c:
        return {}
    return {m: v * c for m, v in a.items()}


def shift(a, d):
    di, dj = d
    if not di and not dj:
        return a
    return {(i + di, j + dj): c for (i, j), c in a.items()}


def mul(a, b):
    if len(a) == 1:
        (m, c), = a.items()
        if m == (0, 0):
            return scale(b, c)
        return {(i + m[0], j + m[1]): v * c for (i, j), v in b.items()}
    if len(b) == 1:
        return mul(b, a)
    out = {}
    get = out.get
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            m = (i1 + i2, j1 + j2)
            out[m] = get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def min_exps(a):
    return min(i for i, _ in a), min(j for _, j in a)


def is_one(a):
    return len(a) == 1 and a.get((0, 0)) == 1


def is_const(a):
    return len(a) == 1 and (0, 0) in a


def monic(a):
    if not a:
        return a
    _, c = lead(a)
    if c == 1:
        return a
    inv = 1 / c
    return {m: v * inv for m, v in a.items()}


def divexact(a, b):
    """Quotient ``a / b``; raises ``ArithmeticError`` if ``b`` does not divide ``a``."""
    if is_const(b):
        return scale(a, 1 / b[(0, 0)])
    (bi, bj), bc = lead(b)
    binv = 1 / bc
    rem = dict(a)
    q = {}
    while rem:
        (i, j), c = lead(rem)
        di, dj = i - bi, j - bj
        if di < 0 or dj < 0:
            raise ArithmeticError("inexact polynomial division")
        t = c * binv
        q[(di, dj)] = t
        for (k, l), v in b.items():
            key = (k + di, l + dj)
            nv = rem.get(key, 0) - t * v
            if nv:
                rem[key] = nv
            else:
                rem.pop(key, None)
    return q


# -- univariate helpers over Q (lists, low degree first, no trailing zeros) --

def _utrim(u):
    while u and not u[-1]:
        u.pop()
    return u


def _uadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return _utrim(out)


def _usub(a, b):
    out = list(a) + [mpq(0)] * (len(b) - len(a))
    for k, c in enumerate(b):
        out[k] -= c
    return _utrim(out)


def _umul(a, b):
    if not a or not b:
        return []
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _utrim(out)


def _udivmod(a, b):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    rem = list(a)
    db = len(b) - 1
    inv = 1 / b[-1]
    q = [mpq(0)] * max(len(a) - db, 0)
    while len(rem) - 1 >= db and rem:
        k = len(rem) - 1 - db
        t = rem[-1] * inv
        q[k] = t
        for i, c in enumerate(b):
            rem[k + i] -= t * c
        rem.pop()
        _utrim(rem)
    return _utrim(q), rem


def _udivexact(a, b):
    q, rem = _udivmod(a, b)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return q


def _umonic(a):
    if not a or a[-1] == 1:
        return a
    inv = 1 / a[-1]
    return [c * inv for c in a]


def _ugcd(a, b):
    while b:
        a, b = b, _udivmod(a, b)[1]
    return _umonic(a)


def _upow(a, n):
    out = [mpq(1)]
    for _ in range(n):
        out = _umul(out, a)
    return out


# -- Q[s][r] view ------------------------------------------------------------

def _to_rpoly(p):
    deg = max(i for i, _ in p)
    rows = [[] for _ in range(deg + 1)]
    for (i, j), c in p.items():
        row = rows[i]
        if len(row) <= j:
            row.extend([mpq(0)] * (j + 1 - len(row)))
        row[j] = c
    return rows


def _from_rpoly(rows):
    return {(i, j): c for i, row in enumerate(rows) for j, c in enumerate(row) if c}


def _rtrim(rows):
    while rows and not rows[-1]:
        rows.pop()
    return rows


def _content(rows):
    g = []
    for row in rows:
        if row:
            g = _ugcd(g, row) if g else _umonic(row)
            if len(g) == 1:
                break
    return g


def _prem(a, b):
    db = len(b) - 1
    lcb = b[-1]
    rem = [list(c) for c in a]
    e = len(a) - db
    while rem and len(rem) - 1 >= db:
        c = rem[-1]
        k = len(rem) - 1 - db
        rem = [_umul(x, lcb) for x in rem]
        for i, y in enumerate(b):
            rem[k + i] = _usub(rem[k + i], _umul(c, y))
        _rtrim(rem)
        e -= 1
    if e > 0:
        f = _upow(lcb, e)
        rem = [_umul(x, f) for x in rem]
    return rem


def _subresultant(u, v):
    g = [mpq(1)]
    h = [mpq(1)]
    while True:
        delta = len(u) - len(v)
        rem = _prem(u, v)
        if not rem:
            return v
        if len(rem) == 1:
            return [[mpq(1)]]
        div = _umul(g, _upow(h, delta))
        u, v = v, [_udivexact(c, div) for c in rem]
        g = u[-1]
        if delta:
            h = _udivexact(_upow(g, delta), _upow(h, delta - 1))


def _gcd_coprime_to_rs(a, b):
    ra, rb = _to_rpoly(a), _to_rpoly(b)
    ca, cb = _content(ra), _content(rb)
    c = _ugcd(ca, cb)
    if len(ra) == 1 or len(rb) == 1:
        g = [[mpq(1)]]
    else:
        pa = [_udivexact(x, ca) for x in ra]
        pb = [_udivexact(x, cb) for x in rb]
        if len(pa) < len(pb):
            pa, pb = pb, pa
        g = _subresultant(pa, pb)
        gc = _content(g)
        g = [_udivexact(x, gc) for x in g]
    return _from_rpoly([_umul(x, c) for x in g])


def gcd(a, b):
    """Monic greatest common divisor (graded lex, r > s)."""
    if not a:
        return monic(b)
    if not b:
        return monic(a)
    ma, mb = min_exps(a), min_exps(b)
    mono = (min(ma[0], mb[0]), min(ma[1], mb[1]))
    if len(a) == 1 or len(b) == 1:
        return {mono: mpq(1)}
    a0, b0 = shift(a, (-ma[0], -ma[1])), shift(b, (-mb[0], -mb[1]))
    if a0 == b0:
        g = a0
    elif len(a0) == 1 or len(b0) == 1:
        g = ONE
    else:
        g = _gcd_coprime_to_rs(a0, b0)
    return monic(shift(g, mono))
