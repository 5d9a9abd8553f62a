"""Brute-force normal forms in the free algebra modulo the Serre relations.

Works over Q(r, s) on word polynomials {tuple of letters 1/2: RatFunc}.  The
two-sided ideal generated by the quantum Serre relations is homogeneous in the
bidegree (#1, #2), so its degree-bounded Groebner basis under deglex (2 > 1)
is the reduced row echelon form of each bidegree component of the ideal.  We
build those echelon forms on demand (rows u*g*v for every relator g and words
u, v) and reduce against them; a word polynomial lies in the ideal iff it
reduces to 0, and the reduced form is canonical.

This is deliberately independent of the PBW rewriting tables.
"""

from itertools import combinations

from ..coeff.ratfunc import RatFunc, ONE
from ..errors import DegreeBoundExceeded, InvalidArgs
from . import roots as RT
from .rules import E_DEFS, F_DEFS

r = RatFunc.monomial(1, 0)
s = RatFunc.monomial(0, 1)

DEFAULT_BOUND = 12


def serre_relators(side="E"):
    """The two Serre relators on letters 1, 2 (e's, or f's with r, s swapped)."""
    g1 = {(2, 2, 1): ONE, (2, 1, 2): -(r**-3 + s**-3), (1, 2, 2): (r * s)**-3}
    g2 = {(1, 1, 1, 1, 2): ONE,
          (1, 1, 1, 2, 1): -(r + s) * (r**2 + s**2),
          (1, 1, 2, 1, 1): r * s * (r**2 + s**2) * (r**2 + r * s + s**2),
          (1, 2, 1, 1, 1): -(r * s)**3 * (r + s) * (r**2 + s**2),
          (2, 1, 1, 1, 1): (r * s)**6}
    if side == "E":
        return [g1, g2]
    # tau reverses words and swaps r, s
    return [{w[::-1]: c.swap() for w, c in g.items()} for g in (g1, g2)]


# -- word polynomials --

def wadd(a, b, k=None):
    out = dict(a)
    for w, c in b.items():
        if k is not None:
            c = c * k
        v = out.get(w)
        v = c if v is None else v + c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def wmul(a, b):
    out = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            v = out.get(w)
            out[w] = c1 * c2 if v is None else v + c1 * c2
    return {w: c for w, c in out.items() if c}


def wscale(a, k):
    if not k:
        return {}
    return {w: c * k for w, c in a.items()}


def _bracket(x, y, c):
    return wadd(wmul(x, y), wmul(y, x), -c)


def _letter_words():
    E = {RT.E1: {(1,): ONE}, RT.E2: {(2,): ONE}}
    for p in (1, 3, 4, 2):     # E12, E112, E1112, E11212 in dependency order
        x, y, c = E_DEFS[p]
        E[p] = _bracket(E[x], E[y], c)
    F = {RT.F1: {(1,): ONE}, RT.F2: {(2,): ONE}}
    for q in (4, 2, 1, 3):     # F12, F112, F1112, F11212
        u, v, c = F_DEFS[q]
        F[q] = _bracket(F[u], F[v], c)
    return E, F


E_WORDS, F_WORDS = _letter_words()


def expand_block(c, side="E"):
    table = E_WORDS if side == "E" else F_WORDS
    out = {(): ONE}
    for p in range(6):
        for _ in range(c[p]):
            out = wmul(out, table[p])
    return out


def expand_to_generators(x, side=None):
    """Generator-word expansion of a generic-mode element with one nonempty block.

    ``x`` is an Element (or a dict of 16-tuples).  Torus letters are not allowed.
    """
    terms = x.terms if hasattr(x, "terms") else x
    out = {}
    for m, c in terms.items():
        e, t, f = m[:6], m[6:10], m[10:]
        if any(t):
            raise InvalidArgs("torus letters have no generator-word expansion")
        if any(e) and any(f):
            raise InvalidArgs("mixed E/F monomials are not supported by the oracle")
        sd = side or ("F" if any(f) else "E")
        w = expand_block(f if sd == "F" else e, sd)
        out = wadd(out, w, c)
    return out


# -- the reduction system --

def _words(n1, n2):
    n = n1 + n2
    for pos in combinations(range(n), n2):
        w = [1] * n
        for p in pos:
            w[p] = 2
        yield tuple(w)


class SerreOracle:
    def __init__(self, side="E", bound=DEFAULT_BOUND):
        self.side = side
        self.bound = bound
        self.relators = serre_relators(side)
        self._ech = {}

    def _check(self, n):
        if n > self.bound:
            raise DegreeBoundExceeded(f"degree {n} exceeds the oracle bound {self.bound}")

    def echelon(self, n1, n2):
        """Reduced echelon rows {lead word: row} for the ideal in bidegree (n1, n2)."""
        key = (n1, n2)
        hit = self._ech.get(key)
        if hit is not None:
            return hit
        self._check(n1 + n2)
        piv = {}
        for g in self.relators:
            w0 = next(iter(g))
            a, b = w0.count(1), w0.count(2)
            if n1 < a or n2 < b:
                continue
            for uv in _words(n1 - a, n2 - b):
                for k in range(len(uv) + 1):
                    u, v = uv[:k], uv[k:]
                    row = {u + w + v: c for w, c in g.items()}
                    row = self._reduce_with(row, piv)
                    if not row:
                        continue
                    lead = max(row)
                    inv = row[lead].inv()
                    row = {w: c * inv for w, c in row.items()}
                    # keep the echelon fully reduced
                    for pw, prow in piv.items():
                        c = prow.get(lead)
                        if c:
                            piv[pw] = wadd(prow, row, -c)
                    piv[lead] = row
        self._ech[key] = piv
        return piv

    @staticmethod
    def _reduce_with(p, piv):
        p = dict(p)
        for w in sorted((w for w in p if w in piv), reverse=True):
            c = p.get(w)
            if c:
                p = wadd(p, piv[w], -c)
        # rows are fully reduced, so one pass leaves no pivot words
        return p

    def normal_form(self, p):
        parts = {}
        for w, c in p.items():
            parts.setdefault((w.count(1), w.count(2)), {})[w] = c
        out = {}
        for (n1, n2), q in sorted(parts.items()):
            self._check(n1 + n2)
            out.update(self._reduce_with(q, self.echelon(n1, n2)))
        return {w: c for w, c in out.items() if c}

    def in_ideal(self, p):
        return not self.normal_form(p)

    def rank(self, polys):
        """Rank over Q(r, s) of a list of word polynomials, after reduction."""
        rows = {}
        for p in polys:
            q = self.normal_form(p)
            q = self._reduce_with(q, rows)
            if not q:
                continue
            lead = max(q)
            inv = q[lead].inv()
            q = {w: c * inv for w, c in q.items()}
            for pw, prow in rows.items():
                c = prow.get(lead)
                if c:
                    rows[pw] = wadd(prow, q, -c)
            rows[lead] = q
        return len(rows)


_ORACLES = {}


def oracle_for(side="E", bound=DEFAULT_BOUND):
    key = (side, bound)
    if key not in _ORACLES:
        _ORACLES[key] = SerreOracle(side, bound)
    return _ORACLES[key]


def oracle_normal_form(p, side="E", bound=DEFAULT_BOUND):
    return oracle_for(side, bound).normal_form(p)
