"""Straightening rules over Q(r, s).

E_RULES[(x, y)] for slots x > y lists the normal-ordered expansion of
E_x * E_y as pairs (exponent 6-tuple, RatFunc).  The F table is generated from
it by the anti-automorphism tau (reverse words, swap r and s, E slot p goes to
F slot 5 - p).
"""

from ..coeff.ratfunc import RatFunc, ONE

r = RatFunc.monomial(1, 0)
s = RatFunc.monomial(0, 1)

# slot names, see roots.py
_E2, _E12, _E11212, _E112, _E1112, _E1 = range(6)


def _m(**kw):
    slots = {"e2": _E2, "E12": _E12, "E11212": _E11212, "E112": _E112, "E1112": _E1112, "e1": _E1}
    v = [0] * 6
    for k, n in kw.items():
        v[slots[k]] = n
    return tuple(v)


def _build_e_rules():
    eta = r**2 - s**2 - r * s
    zeta = (r**3 - s**3) / (r + s)
    R = {}
    # root vector definitions read as rewrites
    R[(_E1, _E2)] = [(_m(E12=1), ONE), (_m(e2=1, e1=1), s**3)]
    R[(_E1, _E12)] = [(_m(E112=1), ONE), (_m(E12=1, e1=1), r * s**2)]
    R[(_E1, _E112)] = [(_m(E1112=1), ONE), (_m(E112=1, e1=1), r**2 * s)]
    R[(_E112, _E12)] = [(_m(E11212=1), ONE), (_m(E12=1, E112=1), r**2 * s)]
    # q-commuting pairs
    R[(_E12, _E2)] = [(_m(e2=1, E12=1), r**3)]
    R[(_E1, _E1112)] = [(_m(E1112=1, e1=1), r**3)]
    R[(_E1112, _E112)] = [(_m(E112=1, E1112=1), r**3)]
    R[(_E11212, _E12)] = [(_m(E12=1, E11212=1), r**3)]
    R[(_E112, _E11212)] = [(_m(E11212=1, E112=1), r**3)]
    # the remaining relations
    R[(_E112, _E2)] = [(_m(e2=1, E112=1), (r * s)**3), (_m(E12=2), r * (r**2 - s**2))]
    R[(_E11212, _E2)] = [(_m(e2=1, E11212=1), (r**2 * s)**3),
                         (_m(E12=3), r**3 * (r - s) * (r**2 - s**2))]
    R[(_E1112, _E2)] = [(_m(e2=1, E1112=1), (r * s**2)**3),
                        (_m(E12=1, E112=1), r**2 * s * (r**3 - s**3)),
                        (_m(E11212=1), r * eta)]
    R[(_E1112, _E12)] = [(_m(E12=1, E1112=1), (r * s)**3), (_m(E112=2), r * zeta)]
    R[(_E1, _E11212)] = [(_m(E11212=1, e1=1), (r * s)**3), (_m(E112=2), r * zeta)]
    R[(_E1112, _E11212)] = [(_m(E11212=1, E1112=1), (r**2 * s)**3),
                            (_m(E112=3), r**3 * zeta * (r - s))]
    assert len(R) == 15
    return R


E_RULES = _build_e_rules()


def tau_block(c):
    """E exponent block -> F exponent block of tau(E^c) (and vice versa)."""
    return tuple(c[5 - q] for q in range(6))


def _build_f_rules():
    R = {}
    for (a, b), rhs in E_RULES.items():
        # tau(E_a E_b) = F_{5-b} F_{5-a}
        R[(5 - b, 5 - a)] = [(tau_block(m), c.swap()) for m, c in rhs]
    return R


F_RULES = _build_f_rules()

# E_p = X Y - c Y X
E_DEFS = {
    _E12: (_E1, _E2, s**3),
    _E112: (_E1, _E12, r * s**2),
    _E1112: (_E1, _E112, r**2 * s),
    _E11212: (_E112, _E12, r**2 * s),
}

# F_q = U V - c V U, in F slots; tau(X Y - c Y X) = tau(Y) tau(X) - c' tau(X) tau(Y)
F_DEFS = {5 - p: (5 - y, 5 - x, c.swap()) for p, (x, y, c) in E_DEFS.items()}

# r_i - s_i for the simple roots: (r - s, r^3 - s^3)
SIMPLE_DIFF = {1: r - s, 2: r**3 - s**3}
