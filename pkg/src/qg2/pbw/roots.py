"""Root data, letter names and torus conjugation scalars.

A PBW monomial is a 16-tuple of ints::

    (c0..c5 | b1 b2 b1' b2' | d0..d5)

The first block holds exponents of E2, E12, E11212, E112, E1112, E1 (in that
order), the middle block the torus exponents of w1, w2, w1', w2', and the last
block exponents of F1, F1112, F112, F11212, F12, F2.  The F vector at slot q
carries the same root as the E vector at slot 5 - q.
"""

from ..coeff.quantities import PAIRING_EXPS

E_NAMES = ("E2", "E12", "E11212", "E112", "E1112", "E1")
F_NAMES = ("F1", "F1112", "F112", "F11212", "F12", "F2")
T_NAMES = ("w1", "w2", "w1'", "w2'")

# root of the E vector in slot p, as (m1, m2) with alpha = m1*a1 + m2*a2
E_ROOTS = ((0, 1), (1, 1), (3, 2), (2, 1), (3, 1), (1, 0))
F_ROOTS = tuple(E_ROOTS[5 - q] for q in range(6))

E1, E2 = 5, 0          # slots of the simple E vectors
F1, F2 = 0, 5          # slots of the simple F vectors

N_E, N_T = 6, 4
ZERO6 = (0,) * 6
ZERO4 = (0,) * 4
UNIT_MONO = (0,) * 16


def unit6(p, n=1):
    v = [0] * 6
    v[p] = n
    return tuple(v)


def e_mono(c):
    return tuple(c) + ZERO4 + ZERO6


def f_mono(d):
    return ZERO6 + ZERO4 + tuple(d)


def t_mono(b):
    return ZERO6 + tuple(b) + ZERO6


def _conj_exps():
    table = []
    for k in range(4):
        row = []
        for m1, m2 in E_ROOTS:
            if k < 2:
                i = k + 1
                # w_i E w_i^-1 = prod_j <w_j', w_i>^{m_j}
                a = m1 * PAIRING_EXPS[(1, i)][0] + m2 * PAIRING_EXPS[(2, i)][0]
                b = m1 * PAIRING_EXPS[(1, i)][1] + m2 * PAIRING_EXPS[(2, i)][1]
            else:
                i = k - 1
                # w_i' E w_i'^-1 = prod_j <w_i', w_j>^{-m_j}
                a = -(m1 * PAIRING_EXPS[(i, 1)][0] + m2 * PAIRING_EXPS[(i, 2)][0])
                b = -(m1 * PAIRING_EXPS[(i, 1)][1] + m2 * PAIRING_EXPS[(i, 2)][1])
            row.append((a, b))
        table.append(tuple(row))
    return tuple(table)


# CONJ[k][p] = (a, b): torus letter k times E slot p gives r^a s^b (E_p) (letter k)
CONJ = _conj_exps()


def torus_past_e(t, c):
    """Exponents (a, b) with  T * E^c = r^a s^b E^c * T."""
    a = b = 0
    for k in range(4):
        tk = t[k]
        if tk:
            row = CONJ[k]
            for p in range(6):
                n = c[p]
                if n:
                    x, y = row[p]
                    a += tk * n * x
                    b += tk * n * y
    return a, b


def f_past_torus(d, t):
    """Exponents (a, b) with  F^d * T = r^a s^b T * F^d."""
    a = b = 0
    for k in range(4):
        tk = t[k]
        if tk:
            row = CONJ[k]
            for q in range(6):
                n = d[q]
                if n:
                    x, y = row[5 - q]
                    a += tk * n * x
                    b += tk * n * y
    return a, b


def weight(c):
    """Root weight (m1, m2) of an E exponent block."""
    return (sum(n * E_ROOTS[p][0] for p, n in enumerate(c)),
            sum(n * E_ROOTS[p][1] for p, n in enumerate(c)))


def weight_f(d):
    return weight(tuple(reversed(d)))
