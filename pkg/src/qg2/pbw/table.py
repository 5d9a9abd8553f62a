"""The straightening identities among E root vectors, as printed.

Each entry is (label, (x, y), rhs) meaning E_x E_y = sum c * E^block, with
slots as in roots.py.  The rewrite table in rules.py contains the same
relations, so the identities are also checked by a route that does not use
it: both sides are expanded into generator words and their difference is
tested for membership in the Serre ideal.
"""

from .oracle import expand_block, oracle_for, wadd, wmul
from .power import ETA, ZETA
from .rules import _m, r, s

E2, E12, E11212, E112, E1112, E1 = range(6)

STRAIGHTENING = [
    ("E112 e2", (E112, E2),
     [(_m(e2=1, E112=1), (r * s)**3), (_m(E12=2), r * (r**2 - s**2))]),
    ("E11212 e2", (E11212, E2),
     [(_m(e2=1, E11212=1), (r**2 * s)**3), (_m(E12=3), r**3 * (r - s) * (r**2 - s**2))]),
    ("E1112 e2", (E1112, E2),
     [(_m(e2=1, E1112=1), (r * s**2)**3), (_m(E12=1, E112=1), r**2 * s * (r**3 - s**3)),
      (_m(E11212=1), r * ETA)]),
    ("E1112 E12", (E1112, E12),
     [(_m(E12=1, E1112=1), (r * s)**3), (_m(E112=2), r * ZETA)]),
    ("e1 E11212", (E1, E11212),
     [(_m(E11212=1, e1=1), (r * s)**3), (_m(E112=2), r * ZETA)]),
    ("E1112 E112", (E1112, E112), [(_m(E112=1, E1112=1), r**3)]),
    ("E1112 E11212", (E1112, E11212),
     [(_m(E11212=1, E1112=1), (r**2 * s)**3), (_m(E112=3), r**3 * ZETA * (r - s))]),
    ("E11212 E12", (E11212, E12), [(_m(E12=1, E11212=1), r**3)]),
    ("E112 E11212", (E112, E11212), [(_m(E11212=1, E112=1), r**3)]),
]


def _unit(p):
    v = [0] * 6
    v[p] = 1
    return tuple(v)


def straightening_report(alg):
    """[(label, engine_ok, oracle_ok)] over a generic-mode algebra.

    engine_ok: the engine product E_x E_y equals the printed right side.
    oracle_ok: E_x E_y - rhs, written in generator words, lies in the Serre ideal.
    """
    oracle = oracle_for("E")
    rep = []
    for label, (x, y), rhs in STRAIGHTENING:
        lhs = alg.E_vec(x) * alg.E_vec(y)
        printed = alg.element({})
        for block, c in rhs:
            printed = printed + alg.monomial(block + (0,) * 10, alg.mode.lift(c))
        words = wmul(expand_block(_unit(x), "E"), expand_block(_unit(y), "E"))
        for block, c in rhs:
            words = wadd(words, expand_block(block, "E"), -c)
        rep.append((label, lhs == printed, oracle.in_ideal(words)))
    return rep


def pbw_blocks(max_degree):
    """E exponent blocks of generator degree 1..max_degree, grouped by weight."""
    from itertools import product
    from .roots import E_ROOTS, weight
    caps = [max_degree // (a + b) for a, b in E_ROOTS]
    out = {}
    for c in product(*(range(k + 1) for k in caps)):
        w = weight(c)
        if 0 < w[0] + w[1] <= max_degree:
            out.setdefault(w, []).append(c)
    return out


def pbw_rank_report(max_degree=6):
    """[(weight, count, rank, quotient dim)] per weight.

    count is the number of PBW monomials, rank the oracle rank of their word
    expansions (independence) and quotient dim the dimension of the free
    algebra modulo the Serre ideal in that weight (spanning).
    """
    from math import comb
    oracle = oracle_for("E")
    rep = []
    for w, blocks in sorted(pbw_blocks(max_degree).items()):
        polys = [expand_block(c, "E") for c in blocks]
        qdim = comb(w[0] + w[1], w[1]) - len(oracle.echelon(*w))
        rep.append((w, len(blocks), oracle.rank(polys), qdim))
    return rep
