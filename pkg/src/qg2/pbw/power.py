"""Closed-form commutation identities for powers of root vectors.

Each identity is keyed by the shape of its left-hand side, e.g. ``"e1 E112^a"``
means e1 * E112^a.  ``power_identity(name, a, alg)`` returns (lhs, rhs): the
left side multiplied out by the engine and the right side assembled from the
closed formula.  Factors with a negative exponent can only occur in terms
whose scalar vanishes (a binomial [a k] with k > a); such terms are dropped
after checking that the scalar is indeed zero.
"""

from ..coeff.ratfunc import RatFunc, ONE, ZERO
from ..coeff.quantities import rs_integer, rs_binomial
from ..errors import InvalidArgs

r = RatFunc.monomial(1, 0)
s = RatFunc.monomial(0, 1)
ZETA = (r**3 - s**3) / (r + s)
ETA = r**2 - s**2 - r * s


def qi(n, i=1):
    return rs_integer(n, i) if n >= 0 else ZERO


def qb(n, m, i=1):
    if m < 0 or m > n:
        return ZERO
    return rs_binomial(n, m, i)


def _build(alg, terms):
    """Sum of coeff * product of factors; factors are (name, exponent)."""
    out = alg.element({})
    for coeff, word in terms:
        merged = []
        for name, n in word:
            if merged and merged[-1][0] == name:
                merged[-1] = (name, merged[-1][1] + n)
            else:
                merged.append((name, n))
        merged = [(name, n) for name, n in merged if n != 0]
        if any(n < 0 and not name.startswith("w") for name, n in merged):
            if coeff:
                raise AssertionError(f"negative power with nonzero scalar in {word}")
            continue
        if not coeff:
            continue
        x = alg.scalar(alg.mode.lift(coeff))
        for name, n in merged:
            x = x * (alg.gen(name) ** n)
        out = out + x
    return out


def _simple_f_rhs(k, a):
    rk, sk = (r, s) if k == 1 else (r**3, s**3)
    ek, fk, wk, wkp = f"e{k}", f"f{k}", f"w{k}", f"w{k}'"
    c = qi(a, k * (k == 1) + 3 * (k == 2)) / (rk - sk)
    return [(ONE, [(fk, 1), (ek, a)]),
            (c * sk**(1 - a), [(ek, a - 1), (wk, 1)]),
            (-c * rk**(1 - a), [(ek, a - 1), (wkp, 1)])]


# name -> (lhs word builder, rhs term builder)
IDENTITIES = {
    "E12^a e2": (
        lambda a: [("E12", a), ("e2", 1)],
        lambda a: [(r**(3 * a), [("e2", 1), ("E12", a)])]),
    "e1 E1112^a": (
        lambda a: [("e1", 1), ("E1112", a)],
        lambda a: [(r**(3 * a), [("E1112", a), ("e1", 1)])]),
    "e1 E112^a": (
        lambda a: [("e1", 1), ("E112", a)],
        lambda a: [((r**2 * s)**a, [("E112", a), ("e1", 1)]),
                   (r**(2 * (a - 1)) * qi(a), [("E112", a - 1), ("E1112", 1)])]),
    "e1 E11212^a": (
        lambda a: [("e1", 1), ("E11212", a)],
        lambda a: [((r * s)**(3 * a), [("E11212", a), ("e1", 1)]),
                   (r**(3 * a - 2) * ZETA * qi(a, 3), [("E11212", a - 1), ("E112", 2)])]),
    "E11212^a e2": (
        lambda a: [("E11212", a), ("e2", 1)],
        lambda a: [((r**2 * s)**(3 * a), [("e2", 1), ("E11212", a)]),
                   (r**(3 * (2 * a - 1)) * (r - s) * (r**2 - s**2) * qi(a, 3),
                    [("E12", 3), ("E11212", a - 1)])]),
    "e1 e2^a": (
        lambda a: [("e1", 1), ("e2", a)],
        lambda a: [(s**(3 * a), [("e2", a), ("e1", 1)]),
                   (qi(a, 3), [("e2", a - 1), ("E12", 1)])]),
    "E112^a e2": (
        lambda a: [("E112", a), ("e2", 1)],
        lambda a: [((r * s)**(3 * a), [("e2", 1), ("E112", a)]),
                   (r**(3 * (a - 2)) * (r**2 - s**2) * r**4 * s**(2 * (a - 1)) * qi(a),
                    [("E12", 2), ("E112", 2), ("E112", a - 3)]),
                   (r**(3 * (a - 2)) * (r**2 - s**2) * r**3 * s**(a - 2) * qi(2) * qb(a, 2),
                    [("E12", 1), ("E11212", 1), ("E112", 1), ("E112", a - 3)]),
                   (r**(3 * (a - 2)) * (r**2 - s**2) * qi(2) * qb(a, 3),
                    [("E11212", 2), ("E112", a - 3)])]),
    "e1^a e2": (
        lambda a: [("e1", a), ("e2", 1)],
        lambda a: [(s**(3 * a), [("e2", 1), ("e1", a)]),
                   (s**(2 * (a - 1)) * qi(a), [("E12", 1), ("e1", a - 1)]),
                   (s**(a - 2) * qb(a, 2), [("E112", 1), ("e1", a - 2)]),
                   (qb(a, 3), [("E1112", 1), ("e1", a - 3)])]),
    "e1 E12^a": (
        lambda a: [("e1", 1), ("E12", a)],
        lambda a: [((r * s**2)**a, [("E12", a), ("e1", 1)]),
                   ((r * s)**(a - 1) * qi(a), [("E12", a - 1), ("E112", 1)]),
                   (r**(a - 2) * qb(a, 2), [("E12", a - 2), ("E11212", 1)])]),
    "E1112^a e2": (
        lambda a: [("E1112", a), ("e2", 1)],
        lambda a: [((r * s**2)**(3 * a), [("e2", 1), ("E1112", a)]),
                   (r**2 * s * (r * s)**(3 * (a - 1)) * (r**3 - s**3) * qi(a, 3),
                    [("E12", 1), ("E112", 1), ("E1112", a - 1)]),
                   (r * ETA * (r * s)**(3 * (a - 1)) * qi(a, 3),
                    [("E11212", 1), ("E1112", a - 1)]),
                   (r**(3 * (a - 1)) * ZETA * (r - s) * qi(2, 3) * qb(a, 2, 3),
                    [("E112", 3), ("E1112", a - 2)])]),
    "e1^a f1": (
        lambda a: [("e1", a), ("f1", 1)],
        lambda a: _simple_f_rhs(1, a)),
    "e2^a f2": (
        lambda a: [("e2", a), ("f2", 1)],
        lambda a: _simple_f_rhs(2, a)),
    "E12^a f1": (
        lambda a: [("E12", a), ("f1", 1)],
        lambda a: [(ONE, [("f1", 1), ("E12", a)]),
                   (-r**(2 * (a - 1)) * qi(3) * qi(a), [("e2", 1), ("E12", a - 1), ("w1'", 1)])]),
    "E112^a f1": (
        lambda a: [("E112", a), ("f1", 1)],
        lambda a: [(ONE, [("f1", 1), ("E112", a)]),
                   (-(r * s)**(a - 1) * qi(2)**2 * qi(a), [("E12", 1), ("E112", a - 1), ("w1'", 1)]),
                   (-r**(a - 2) * qi(2)**2 * qb(a, 2), [("E11212", 1), ("E112", a - 2), ("w1'", 1)])]),
    "E1112^a f1": (
        lambda a: [("E1112", a), ("f1", 1)],
        lambda a: [(ONE, [("f1", 1), ("E1112", a)]),
                   (-qi(3) * qi(a, 3), [("E112", 1), ("E1112", a - 1), ("w1'", 1)])]),
    "E11212^a f1": (
        lambda a: [("E11212", a), ("f1", 1)],
        lambda a: [(ONE, [("f1", 1), ("E11212", a)]),
                   (-r**(3 * a - 2) * (r**2 - s**2) * qi(3) * qi(a, 3),
                    [("E12", 2), ("E11212", a - 1), ("w1'", 1)])]),
    "E12^a f2": (
        lambda a: [("E12", a), ("f2", 1)],
        lambda a: [(ONE, [("f2", 1), ("E12", a)]),
                   (s**(2 * (a - 1)) * qi(a), [("w2", 1), ("E12", a - 3), ("E12", 2), ("e1", 1)]),
                   (s**(a - 2) * qb(a, 2), [("w2", 1), ("E12", a - 3), ("E12", 1), ("E112", 1)]),
                   (qb(a, 3), [("w2", 1), ("E12", a - 3), ("E11212", 1)])]),
    "E112^a f2": (
        lambda a: [("E112", a), ("f2", 1)],
        lambda a: [(ONE, [("f2", 1), ("E112", a)]),
                   (r**(3 * (a - 2)) * (r**2 - s**2) * qi(2) * qb(a, 3),
                    [("w2", 1), ("E112", a - 3), ("E1112", 2)]),
                   (r**(3 * (a - 2)) * (r**2 - s**2) * r**3 * s**(a - 2) * qi(2) * qb(a, 2),
                    [("w2", 1), ("E112", a - 3), ("E112", 1), ("E1112", 1), ("e1", 1)]),
                   (r**(3 * (a - 2)) * (r**2 - s**2) * qi(a) * r**4 * s**(2 * (a - 1)),
                    [("w2", 1), ("E112", a - 3), ("E112", 2), ("e1", 2)])]),
    "E1112^a f2": (
        lambda a: [("E1112", a), ("f2", 1)],
        lambda a: [(ONE, [("f2", 1), ("E1112", a)]),
                   (r**(-3 * (a - 2)) * (r**2 - s**2) * (r - s) * qi(a, 3),
                    [("w2", 1), ("e1", 3), ("E1112", a - 1)])]),
    "E11212^a f2": (
        lambda a: [("E11212", a), ("f2", 1)],
        lambda a: [(ONE, [("f2", 1), ("E11212", a)]),
                   (r * (r * s)**(3 * (a - 1)) * qi(a, 3) * ETA,
                    [("w2", 1), ("E11212", a - 1), ("E1112", 1)]),
                   (r * (r * s)**(3 * (a - 1)) * qi(a, 3) * r * s * (r**3 - s**3),
                    [("w2", 1), ("E11212", a - 1), ("E112", 1), ("e1", 1)]),
                   (r**(3 * (a - 1)) * ZETA * (r - s) * qi(2, 3) * qb(a, 2, 3),
                    [("w2", 1), ("E11212", a - 2), ("E112", 3)])]),
}

# The statement of the E12^a f2 formula as typeset lacks the factor [a] on its
# first correction term; its own induction step (s^{2a}[a+1] E12^2 e1) carries it.
# IDENTITIES uses the corrected form; this is the literal one, kept for reporting.
AS_TYPESET = {
    "E12^a f2": lambda a: [(ONE, [("f2", 1), ("E12", a)]),
                           (s**(2 * (a - 1)), [("w2", 1), ("E12", a - 3), ("E12", 2), ("e1", 1)]),
                           (s**(a - 2) * qb(a, 2), [("w2", 1), ("E12", a - 3), ("E12", 1), ("E112", 1)]),
                           (qb(a, 3), [("w2", 1), ("E12", a - 3), ("E11212", 1)])],
}

# valid ranges of a; the e1^a e2 formula is only claimed for a > 4
MIN_A = {"e1^a e2": 5}


def identity_names():
    return list(IDENTITIES)


def power_identity(name, a, alg, check_range=True):
    if name not in IDENTITIES:
        raise InvalidArgs(f"unknown identity {name!r}")
    if a < 1 or (check_range and a < MIN_A.get(name, 1)):
        raise InvalidArgs(f"a={a} outside the validity range of {name!r}")
    lhs_word, rhs_terms = IDENTITIES[name]
    lhs = _build(alg, [(ONE, lhs_word(a))])
    rhs = _build(alg, rhs_terms(a))
    return lhs, rhs


def typeset_identity(name, a, alg):
    """(lhs, rhs) with rhs taken literally from the typeset statement."""
    lhs_word, _ = IDENTITIES[name]
    return _build(alg, [(ONE, lhs_word(a))]), _build(alg, AS_TYPESET[name](a))


# -- fast paths for the straightening engine --

_SLOT = {"e2": 0, "E12": 1, "E11212": 2, "E112": 3, "E1112": 4, "e1": 5}

# (letter slot, power slot) -> identity whose left side is letter * power^a
FAST_IDENTITIES = {
    (5, 4): "e1 E1112^a",
    (5, 3): "e1 E112^a",
    (5, 2): "e1 E11212^a",
    (5, 1): "e1 E12^a",
    (5, 0): "e1 e2^a",
}


def closed_form_terms(x, k, a):
    """Normal-ordered E-block expansion of E_x * E_k^a from a closed formula.

    Returns a list of (6-tuple, RatFunc) or None if no formula is known.
    """
    name = FAST_IDENTITIES.get((x, k))
    if name is None:
        return None
    out = []
    for coeff, word in IDENTITIES[name][1](a):
        if not coeff:
            continue
        v = [0] * 6
        last = -1
        for letter, n in word:
            if n == 0:
                continue
            if n < 0:
                raise AssertionError(f"negative power with nonzero scalar in {word}")
            slot = _SLOT[letter]
            if slot < last:
                raise AssertionError(f"closed form {name!r} is not normal ordered")
            last = slot
            v[slot] += n
        out.append((tuple(v), coeff))
    return out
