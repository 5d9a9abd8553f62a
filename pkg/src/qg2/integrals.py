"""Integrals of the Borel part b of u_{r,s}(G2), distinguished group-likes and the dual integrals.

Everything is computed in the restricted quotient at r = theta^y, s = theta^z.
The integrals of b* are handled through their images in b' (f_j for eta_j,
w_j' for gamma_j), never as functionals.
"""

from .coeff.modes import RootOfUnity
from .coeff.quantities import PAIRING_EXPS
from .errors import InvalidArgs
from .hopf import antipode, counit
from .pairing import Character, nondegeneracy_check
from .pbw import roots as RT
from .pbw.ops import get_algebra

# slots of the F vectors in the order F2, F12, F11212, F112, F1112, F1
F_PRODUCT_ORDER = (5, 4, 3, 2, 1, 0)


class IntegralPair:
    """t, x, y = t x (left integral) and y' = x t (right integral) in b."""

    def __init__(self, alg, t, x, y, y_prime):
        self.alg = alg
        self.t = t
        self.x = x
        self.y = y
        self.y_prime = y_prime


def restricted_algebra(ell, y, z):
    if not nondegeneracy_check(ell, y, z):
        raise InvalidArgs(f"(ell, y, z) = ({ell}, {y}, {z}) fails gcd(3(y^2+z^2+yz), ell) = 1")
    return get_algebra(RootOfUnity(ell, y, z), restricted=True, fast_paths=True)


def torus_sum(alg, primed=False):
    """prod_i (1 + w_i + ... + w_i^(ell-1)), or the same in the w_i'."""
    ell = alg.ell
    out = alg.element({})
    for a in range(ell):
        for b in range(ell):
            out = out + (alg.torus(0, 0, a, b) if primed else alg.torus(a, b))
    return out


def build_integrals(ell, y, z):
    alg = restricted_algebra(ell, y, z)
    top = ell - 1
    t = torus_sum(alg)
    x = alg.monomial((top,) * 6 + (0,) * 10)
    return IntegralPair(alg, t, x, t * x, x * t)


def _pairing_power(alg, i, k1, k2):
    """<w_i', w1>^k1 <w_i', w2>^k2."""
    a = k1 * PAIRING_EXPS[(i, 1)][0] + k2 * PAIRING_EXPS[(i, 2)][0]
    b = k1 * PAIRING_EXPS[(i, 1)][1] + k2 * PAIRING_EXPS[(i, 2)][1]
    return alg.mode.mono(a, b)


def gamma_character(alg):
    """gamma(w_k) = <w1', w_k>^10 <w2', w_k>^6, gamma(e_k) = 0."""
    return Character.from_pairing(alg, 10, 6)


def b_generators(alg):
    G = alg.gen
    return [(n, G(n)) for n in ("e1", "e2", "w1", "w2")]


def e1_chain_scalar(alg):
    """c with e1 X = c X e1 for X = E2^(l-1) E12^(l-1) E11212^(l-1) E112^(l-1) E1112^(l-1)."""
    top = alg.ell - 1
    return alg.mode.mono(9 * top, 9 * top)


def verify_integral_property(p):
    """[(label, ok, detail)] for the left/right integral properties and their consequences."""
    alg = p.alg
    top = alg.ell - 1
    rep = []

    def add(label, lhs, rhs):
        ok = lhs == rhs
        rep.append((label, ok, "" if ok else f"{lhs} != {rhs}"))

    for name, b in b_generators(alg):
        eps = counit(b)
        add(f"{name} y = eps({name}) y", b * p.y, p.y * eps)
        add(f"y' {name} = eps({name}) y'", p.y_prime * b, p.y_prime * eps)
    add("eps(y) = 0", counit(p.y), alg.zero)
    add("eps(y') = 0", counit(p.y_prime), alg.zero)
    # the explicit scalar picked up by e1 on its way to E1^(l-1)
    X = alg.monomial((top,) * 5 + (0,) * 11)
    e1 = alg.gen("e1")
    add("e1 X = r^(9(l-1)) s^(9(l-1)) X e1", e1 * X, X * e1 * e1_chain_scalar(alg))
    # S maps right integrals to left integrals
    sy = antipode(p.y_prime)
    add("S(y') != 0", bool(sy), True)
    for name, b in b_generators(alg):
        add(f"{name} S(y') = eps({name}) S(y')", b * sy, sy * counit(b))
    dim = left_integral_dimension(p)
    add("dim of left integrals in span{torus x} = 1", dim, 1)
    return rep


def left_integral_dimension(p):
    """Nullity of v -> (b v - eps(b) v)_b over v in span{w^a x : a in (Z/l)^2}.

    Also checks that y is in the solution space (raises if not).
    """
    alg = p.alg
    ell = alg.ell
    basis = [alg.torus(a, b) * p.x for a in range(ell) for b in range(ell)]
    gens = b_generators(alg)
    # columns: images of each basis vector, concatenated over generators
    cols = []
    for v in basis:
        col = {}
        for k, (name, b) in enumerate(gens):
            img = b * v - v * counit(b)
            for m, c in img.terms.items():
                col[(k, m)] = c
        cols.append(col)
    rank = _rank(cols, alg)
    return len(basis) - rank


def _rank(cols, alg):
    """Rank of a list of sparse column vectors {row key: coefficient}."""
    rows = sorted({k for c in cols for k in c})
    index = {k: i for i, k in enumerate(rows)}
    mat = [[alg.zero] * len(cols) for _ in rows]
    for j, c in enumerate(cols):
        for k, v in c.items():
            mat[index[k]][j] = v
    rank = 0
    ncols = len(cols)
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = mat[rank][col].inv()
        mat[rank] = [v * inv for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def distinguished_character_check(p):
    """y a = gamma(a) y for a = e_k, w_k, with gamma from the pairing with w1'^10 w2'^6."""
    alg = p.alg
    gamma = gamma_character(alg)
    rep = []
    for name, a in b_generators(alg):
        lhs = p.y * a
        rhs = p.y * gamma(a)
        ok = lhs == rhs
        rep.append((f"y {name} = gamma({name}) y", ok, "" if ok else f"{lhs} != {rhs}"))
    return rep


def ordered_f_product(alg):
    """F = F2^(l-1) F12^(l-1) F11212^(l-1) F112^(l-1) F1112^(l-1) F1^(l-1), multiplied out."""
    top = alg.ell - 1
    out = alg.unit()
    for q in F_PRODUCT_ORDER:
        out = out * alg.F_vec(q, top)
    return out


def distinguished_grouplike_check(alg):
    """g = w1^-10 w2^-6: (w_i' | g) = gamma_i(g), and w_k' F = <w_k', w1>^-10 <w_k', w2>^-6 F w_k'."""
    G = alg.gen
    rep = []
    F = ordered_f_product(alg)
    rep.append(("F != 0", bool(F), ""))
    for k in (1, 2):
        wk = G(f"w{k}'")
        c = _pairing_power(alg, k, -10, -6)
        lhs, rhs = wk * F, F * wk * c
        ok = lhs == rhs
        rep.append((f"w{k}' F = <w{k}',w1>^-10 <w{k}',w2>^-6 F w{k}'", ok, "" if ok else f"{lhs} != {rhs}"))
    g = G("w1") ** -10 * G("w2") ** -6
    for i in (1, 2):
        gamma_i = Character.from_pairing(alg, 1 if i == 1 else 0, 1 if i == 2 else 0)
        lhs = gamma_i(g)
        rhs = _pairing_power(alg, i, -10, -6)
        ok = lhs == rhs
        rep.append((f"(w{i}' | g) = gamma_{i}(g)", ok, "" if ok else f"{lhs} != {rhs}"))
    return rep


def dual_integrals(ell, y, z):
    """b'-images (lambda, lambda') of the left and right integrals of b*."""
    alg = restricted_algebra(ell, y, z)
    F = ordered_f_product(alg)
    nu = torus_sum(alg, primed=True)
    return nu * F, F * nu


def dual_integral_check(ell, y, z):
    """gamma_k lambda' = gamma_k(g) lambda', eta_k lambda' = 0, and the right integral property."""
    alg = restricted_algebra(ell, y, z)
    lam, lam_p = dual_integrals(ell, y, z)
    G = alg.gen
    rep = [("lambda' != 0", bool(lam_p), ""), ("lambda != 0", bool(lam), "")]

    def add(label, lhs, rhs):
        ok = lhs == rhs
        rep.append((label, ok, "" if ok else f"{lhs} != {rhs}"))

    for k in (1, 2):
        wk, fk = G(f"w{k}'"), G(f"f{k}")
        add(f"gamma_{k} lambda' = gamma_{k}(g) lambda'", wk * lam_p, lam_p * _pairing_power(alg, k, -10, -6))
        add(f"eta_{k} lambda' = 0", fk * lam_p, alg.zero)
        add(f"lambda' gamma_{k} = lambda'", lam_p * wk, lam_p)
        add(f"lambda' eta_{k} = 0", lam_p * fk, alg.zero)
        add(f"gamma_{k} lambda = lambda", wk * lam, lam)
        add(f"eta_{k} lambda = 0", fk * lam, alg.zero)
    return rep


def integrals_report(ell=5, y=1, z=2):
    """All integral-related checks as [(label, ok, detail)]."""
    p = build_integrals(ell, y, z)
    rep = verify_integral_property(p)
    rep += distinguished_character_check(p)
    rep += distinguished_grouplike_check(p.alg)
    rep += dual_integral_check(ell, y, z)
    return rep
