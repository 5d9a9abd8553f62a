"""Skew dual pairing of the Borel parts, the double D(b) and ribbon preconditions.

Convention: for a, b in b' and x, y in b,

    <a b, x> = sum <a, x1> <b, x2>,      <a, x y> = sum <a1, y> <a2, x>.

Two normalizations of <f_i, e_i> are supported: "prop" gives 1/(s_i - r_i),
"double" gives 1 (the form used when b* is identified with b'^coop).
The dual b* is never materialized; w_j' stands for the character gamma_j and
f_j for eta_j.
"""

from math import gcd

from .coeff.quantities import PAIRING_EXPS
from .coeff.ratfunc import RatFunc
from .errors import InvalidArgs
from .hopf import Tensor, hopf_of
from .pbw import roots as RT
from .pbw.algebra import Element
from .pbw.oracle import expand_block
from .pbw.rules import SIMPLE_DIFF

NORMS = ("prop", "double")


def _acc(out, k, c):
    v = out.get(k)
    out[k] = c if v is None else v + c


def is_b_monomial(m):
    return not any(m[8:])


def is_bp_monomial(m):
    return not any(m[:8])


class Pairing:
    """Evaluates <b'-element, b-element> over one algebra."""

    def __init__(self, alg, norm="prop"):
        if norm not in NORMS:
            raise InvalidArgs(f"norm must be one of {NORMS}, got {norm!r}")
        self.alg = alg
        self.norm = norm
        self.hopf = hopf_of(alg)
        lift = alg.mode.lift
        if norm == "prop":
            self.fe = {1: lift(-SIMPLE_DIFF[1]).inv(), 2: lift(-SIMPLE_DIFF[2]).inv()}
        else:
            self.fe = {1: alg.one, 2: alg.one}
        self._words = {}
        self._cache = {}

    def _f_words(self, d):
        hit = self._words.get(d)
        if hit is None:
            lift = self.alg.mode.lift
            hit = [(w, lift(c)) for w, c in expand_block(d, "F").items()]
            self._words[d] = hit
        return hit

    def torus_value(self, bp, b):
        """prod <w_i', w_j>^{bp_i b_j} for torus exponents bp (of w') and b (of w)."""
        a = c = 0
        for i in (1, 2):
            for j in (1, 2):
                n = bp[i - 1] * b[j - 1]
                if n:
                    x, y = PAIRING_EXPS[(i, j)]
                    a += n * x
                    c += n * y
        return self.alg.mode.mono(a, c)

    def _word_value(self, word, m):
        """<f_{w0} f_{w1} ..., m> for a b-monomial m."""
        if not word:
            return self.alg.one if not any(m[:6]) else self.alg.zero
        key = (word, m)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        # weight filter
        w1, w2 = RT.weight(m[:6])
        if w1 != word.count(1) or w2 != word.count(2):
            self._cache[key] = self.alg.zero
            return self.alg.zero
        i = word[0]
        slot = RT.E1 if i == 1 else RT.E2
        total = self.alg.zero
        for (m1, m2), c in self.hopf.delta_monomial(m).terms.items():
            e = m1[:6]
            if e[slot] == 1 and sum(e) == 1:
                v = self._word_value(word[1:], m2)
                if v:
                    total = total + c * self.fe[i] * v
        self._cache[key] = total
        return total

    def pair_monomials(self, bp, b):
        if not is_bp_monomial(bp) or not is_b_monomial(b):
            raise InvalidArgs("pairing needs a b' monomial on the left and a b monomial on the right")
        d, tp = bp[10:], bp[8:10]
        total = self.alg.zero
        if not any(d):
            if any(b[:6]):
                return total
            return self.torus_value(tp, b[6:8])
        # <g w, x> = sum <g, x1> <w, x2>
        for (m1, m2), c in self.hopf.delta_monomial(b).terms.items():
            if any(m1[:6]):
                continue
            g = self.torus_value(tp, m1[6:8])
            for word, cw in self._f_words(d):
                v = self._word_value(word, m2)
                if v:
                    total = total + c * g * cw * v
        return total

    def pair(self, f, x):
        total = self.alg.zero
        for m1, c1 in f.terms.items():
            for m2, c2 in x.terms.items():
                v = self.pair_monomials(m1, m2)
                if v:
                    total = total + c1 * c2 * v
        return total


def pair(f, x, norm="prop"):
    return Pairing(f.alg, norm).pair(f, x)


# -- the Drinfel'd double D(b), realized on b (x) b' --

def delta2(h, m):
    """(Delta (x) id) Delta of a monomial as {(m1, m2, m3): c}."""
    out = {}
    for (a, b), c in h.delta_monomial(m).terms.items():
        for (a1, a2), c1 in h.delta_monomial(a).terms.items():
            _acc(out, (a1, a2, b), c * c1)
    return {k: c for k, c in out.items() if c}


class Double:
    """D(b) with elements a (x) beta, a in b and beta in b' standing for phi(beta) in b*.

    (a (x) 1)(1 (x) beta) = a (x) beta and
    (1 (x) beta)(a (x) 1) = sum (beta1 | S^-1 a1) (beta3 | a3)  a2 (x) beta2.
    """

    def __init__(self, alg, norm="double"):
        self.alg = alg
        self.pairing = Pairing(alg, norm)
        self.hopf = self.pairing.hopf
        self.norm = norm
        self._cross = {}

    def element(self, terms):
        return DoubleElement(self, {k: c for k, c in terms.items() if c})

    def unit(self):
        return self.element({(RT.UNIT_MONO, RT.UNIT_MONO): self.alg.one})

    def from_b(self, x):
        one = RT.UNIT_MONO
        for m in x.terms:
            if not is_b_monomial(m):
                raise InvalidArgs("not an element of b")
        return self.element({(m, one): c for m, c in x.terms.items()})

    def from_bp(self, x):
        one = RT.UNIT_MONO
        for m in x.terms:
            if not is_bp_monomial(m):
                raise InvalidArgs("not an element of b'")
        return self.element({(one, m): c for m, c in x.terms.items()})

    def cross(self, beta, a):
        """(1 (x) beta)(a (x) 1) for monomials beta in b', a in b, as {(b, b'): c}."""
        key = (beta, a)
        hit = self._cross.get(key)
        if hit is not None:
            return hit
        alg, h, P = self.alg, self.hopf, self.pairing
        out = {}
        da = delta2(h, a)
        db = delta2(h, beta)
        sinv = {}
        for (a1, a2, a3), ca in da.items():
            if a1 not in sinv:
                sinv[a1] = h.antipode_inv(Element(alg, {a1: alg.one}))
            for (b1, b2, b3), cb in db.items():
                v3 = P.pair_monomials(b3, a3)
                if not v3:
                    continue
                v1 = P.pair(Element(alg, {b1: alg.one}), sinv[a1])
                if not v1:
                    continue
                _acc(out, (a2, b2), ca * cb * v1 * v3)
        out = {k: c for k, c in out.items() if c}
        self._cross[key] = out
        return out

    def multiply(self, u, v):
        alg = self.alg
        out = {}
        for (a, beta), c1 in u.terms.items():
            for (a2, beta2), c2 in v.terms.items():
                for (x, y), c3 in self.cross(beta, a2).items():
                    left = alg.mul_mono(a, x)
                    right = alg.mul_mono(y, beta2)
                    c = c1 * c2 * c3
                    for m1, k1 in left.items():
                        for m2, k2 in right.items():
                            _acc(out, (m1, m2), c * k1 * k2)
        return self.element(out)

    def psi(self, u):
        """The algebra map D(b) -> u: e_i -> e_i, w_i -> w_i, gamma_i -> w_i', eta_i -> c_i f_i.

        c_i = s_i - r_i for the "double" normalization and 1 for "prop".
        """
        alg = self.alg
        lift = alg.mode.lift
        out = alg.element({})
        for (a, beta), c in u.terms.items():
            k = c
            if self.norm == "double":
                n1, n2 = RT.weight_f(beta[10:])
                k = k * lift(-SIMPLE_DIFF[1]) ** n1 * lift(-SIMPLE_DIFF[2]) ** n2
            out = out + Element(alg, {a: alg.one}) * Element(alg, {beta: k})
        return out


class DoubleElement:
    __slots__ = ("D", "terms")

    def __init__(self, D, terms):
        self.D = D
        self.terms = terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return self.D.element(out)

    def __neg__(self):
        return self.D.element({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, DoubleElement):
            return self.D.multiply(self, other)
        c = self.D.alg.mode.coerce(other)
        return self.D.element({k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, DoubleElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        t = Tensor(self.D.alg, self.terms)
        return str(t)


def double_generators(D):
    """Named generators of D(b): e_i, w_i^{+-1} from b; eta_i, gamma_i^{+-1} from b'."""
    g = D.alg.gen
    out = {}
    for i in (1, 2):
        out[f"e{i}"] = D.from_b(g(f"e{i}"))
        out[f"w{i}"] = D.from_b(g(f"w{i}"))
        out[f"w{i}^-1"] = D.from_b(g(f"w{i}") ** -1)
        out[f"eta{i}"] = D.from_bp(g(f"f{i}"))
        out[f"gamma{i}"] = D.from_bp(g(f"w{i}'"))
        out[f"gamma{i}^-1"] = D.from_bp(g(f"w{i}'") ** -1)
    return out


def psi_relation_report(D):
    """Check psi(u v) = psi(u) psi(v) on all ordered pairs of double generators.

    Cross pairs (b' part times b part) exercise the double's defining
    multiplication; the remaining pairs are plain products in b or b'.
    """
    gens = double_generators(D)
    rep = []
    for n1, u in gens.items():
        for n2, v in gens.items():
            lhs = D.psi(u * v)
            rhs = D.psi(u) * D.psi(v)
            rep.append((f"psi({n1} {n2})", lhs == rhs, lhs, rhs))
    return rep


def double_relation_report(D):
    """The defining relations of u evaluated inside D(b) with e_i, w_i from b and f_i, w_i' from b'.

    f_i is eta_i / (s_i - r_i) for the "double" normalization and eta_i for
    "prop"; w_i' is gamma_i.  Returns [(label, value)] with value a DoubleElement.
    """
    from .hopf import defining_relations
    alg = D.alg
    lift = alg.mode.lift
    gens = double_generators(D)
    G = {}
    for i in (1, 2):
        G[f"e{i}"] = gens[f"e{i}"]
        G[f"w{i}"] = gens[f"w{i}"]
        G[f"w{i}^-1"] = gens[f"w{i}^-1"]
        G[f"w{i}'"] = gens[f"gamma{i}"]
        G[f"w{i}'^-1"] = gens[f"gamma{i}^-1"]
        c = lift(-SIMPLE_DIFF[i]).inv() if D.norm == "double" else alg.one
        G[f"f{i}"] = gens[f"eta{i}"] * c
    return defining_relations(G, lift, D)


def commutator_cross_report(D):
    """psi(e_i eta_j) - psi(eta_j e_i) against (s_i - r_i) delta_ij (w_i - w_i')/(r_i - s_i)."""
    alg = D.alg
    gens = double_generators(D)
    lift = alg.mode.lift
    rep = []
    for i in (1, 2):
        for j in (1, 2):
            ei, etaj = gens[f"e{i}"], gens[f"eta{j}"]
            lhs = D.psi(ei * etaj) - D.psi(etaj * ei)
            c = lift(-SIMPLE_DIFF[j]) if D.norm == "double" else alg.one
            if i == j:
                rhs = (alg.gen(f"w{i}") - alg.gen(f"w{i}'")) * (c / lift(SIMPLE_DIFF[i]))
            else:
                rhs = alg.element({})
            rep.append((f"[e{i}, eta{j}]", lhs == rhs, lhs, rhs))
    return rep


def serre_eta_report(alg, norm="double"):
    """The f-Serre relators, kept as free word polynomials, pair to 0 with every b-monomial of their weight.

    This is the statement that eta_1, eta_2 in b* satisfy the Serre relations;
    the words are never reduced in the algebra.  Returns (label, ok, value)
    per (relator, monomial) and the largest single-word value seen, so that
    a vacuous pass would be visible.
    """
    from .pbw.oracle import serre_relators
    P = Pairing(alg, norm)
    lift = alg.mode.lift
    rep = []
    for k, rel in enumerate(serre_relators("F")):
        word = next(iter(rel))
        n1, n2 = word.count(1), word.count(2)
        for c in _blocks((n1, n2), None):
            m = c + (0,) * 10
            total = alg.zero
            nonzero = False
            for w, cw in rel.items():
                v = P._word_value(w, m)
                if v:
                    nonzero = True
                    total = total + lift(cw) * v
            label = f"serre{k + 1} vs {_block_name(c)}"
            rep.append((label, not total and nonzero, total))
    return rep


def _block_name(c):
    parts = [f"{RT.E_NAMES[p]}^{n}" if n > 1 else RT.E_NAMES[p] for p, n in enumerate(c) if n]
    return " ".join(parts) or "1"


def antipode_invariance_report(alg, pairs, norm="double"):
    """<S(a), S(x)> = <a, x> for the given (b' element, b element) pairs."""
    from .hopf import antipode
    P = Pairing(alg, norm)
    rep = []
    for a, x in pairs:
        lhs, rhs = P.pair(antipode(a), antipode(x)), P.pair(a, x)
        rep.append((f"<S({a}), S({x})>", lhs == rhs, lhs, rhs))
    return rep


def nondegeneracy_check(ell, y, z):
    """gcd(3 (y^2 + z^2 + y z), ell) == 1."""
    return gcd(3 * (y * y + z * z + y * z), ell) == 1


# -- characters of b and the ribbon criterion --

class Character:
    """Algebra map to K, zero on root vectors, fixed by its values on two torus letters.

    side "b" reads w1, w2; side "bp" reads w1', w2' (a character of b').
    """

    def __init__(self, alg, v1, v2, side="b"):
        self.alg = alg
        self.v = (v1, v2)
        self.side = side

    @classmethod
    def from_pairing(cls, alg, k1, k2):
        """The character (w1'^k1 w2'^k2 | .), i.e. w_j -> <w1', w_j>^k1 <w2', w_j>^k2."""
        vals = []
        for j in (1, 2):
            a = k1 * PAIRING_EXPS[(1, j)][0] + k2 * PAIRING_EXPS[(2, j)][0]
            b = k1 * PAIRING_EXPS[(1, j)][1] + k2 * PAIRING_EXPS[(2, j)][1]
            vals.append(alg.mode.mono(a, b))
        return cls(alg, *vals)

    @classmethod
    def from_pairing_bp(cls, alg, k1, k2):
        """The character (. | w1^k1 w2^k2) of b', i.e. w_j' -> <w_j', w1>^k1 <w_j', w2>^k2."""
        vals = []
        for j in (1, 2):
            a = k1 * PAIRING_EXPS[(j, 1)][0] + k2 * PAIRING_EXPS[(j, 2)][0]
            b = k1 * PAIRING_EXPS[(j, 1)][1] + k2 * PAIRING_EXPS[(j, 2)][1]
            vals.append(alg.mode.mono(a, b))
        return cls(alg, *vals, side="bp")

    def on_monomial(self, m):
        if any(m[:6]) or any(m[10:]):
            return self.alg.zero
        if self.side == "b":
            if any(m[8:10]):
                return self.alg.zero
            e1, e2 = m[6], m[7]
        else:
            if any(m[6:8]):
                return self.alg.zero
            e1, e2 = m[8], m[9]
        return self.v[0] ** e1 * self.v[1] ** e2

    def __call__(self, x):
        total = self.alg.zero
        for m, c in x.terms.items():
            v = self.on_monomial(m)
            if v:
                total = total + c * v
        return total

    def inverse(self):
        return Character(self.alg, self.v[0].inv(), self.v[1].inv(), self.side)

    def __mul__(self, other):
        return Character(self.alg, self.v[0] * other.v[0], self.v[1] * other.v[1], self.side)

    def __eq__(self, other):
        return self.side == other.side and self.v == other.v


def hit_both(x, left, right):
    """left -> x <- right = sum right(x1) x2 left(x3)."""
    alg = x.alg
    h = hopf_of(alg)
    out = {}
    for m, c in x.terms.items():
        for (a1, a2, a3), k in delta2(h, m).items():
            v = right.on_monomial(a1)
            if not v:
                continue
            w = left.on_monomial(a3)
            if not w:
                continue
            _acc(out, a2, c * k * v * w)
    return Element(alg, {m: c for m, c in out.items() if c})


def ribbon_precheck(alg):
    """Ribbon preconditions for D(b): returns a list of (label, ok, lhs, rhs).

    h = w_rho^-1 = w1^-5 w2^-3, g = w1^-10 w2^-6, delta = (w1'^5 w2'^3 | .),
    gamma = (w1'^10 w2'^6 | .).  The conjugation identity
    S^2(a) = h (delta -> a <- delta^-1) h^-1 is checked on w1, w2 and every E
    root vector of b.  The same criterion for b* = b'^coop (antipode S^-1,
    coproduct legs flipped, h* = w1'^-5 w2'^-3, delta* = (. | w1^5 w2^3)) is
    checked on w1', w2' and every F root vector.
    """
    from .hopf import antipode, antipode_inv
    g = alg.gen
    h = g("w1") ** -5 * g("w2") ** -3
    hinv = g("w1") ** 5 * g("w2") ** 3
    dist_g = g("w1") ** -10 * g("w2") ** -6
    delta = Character.from_pairing(alg, 5, 3)
    gamma = Character.from_pairing(alg, 10, 6)
    rep = [("h^2 = g", h * h == dist_g, h * h, dist_g),
           ("delta^2 = gamma", delta * delta == gamma, (delta * delta).v, gamma.v)]
    hp = g("w1'") ** -5 * g("w2'") ** -3
    hpinv = g("w1'") ** 5 * g("w2'") ** 3
    deltap = Character.from_pairing_bp(alg, 5, 3)
    dinv, dpinv = delta.inverse(), deltap.inverse()
    for name, a in ([("w1", g("w1")), ("w2", g("w2"))]
                    + [(n, alg.E_vec(p)) for p, n in enumerate(RT.E_NAMES)]):
        lhs = antipode(antipode(a))
        rhs = h * hit_both(a, delta, dinv) * hinv
        rep.append((f"S^2({name})", lhs == rhs, lhs, rhs))
    for name, a in ([("w1'", g("w1'")), ("w2'", g("w2'"))]
                    + [(n, alg.F_vec(q)) for q, n in enumerate(RT.F_NAMES)]):
        lhs = antipode_inv(antipode_inv(a))
        # in the coopposite coalgebra the outer legs trade places
        rhs = hp * hit_both(a, dpinv, deltap) * hpinv
        rep.append((f"S^2({name}) in b'^coop", lhs == rhs, lhs, rhs))
    return rep


# -- dual bases (R-matrix material), opt-in only --

def dual_basis_block(alg, weight, norm="double"):
    """For one weight (n1, n2): b-basis monomials of that weight and the b' elements dual to them.

    Returns a list of (b monomial, b' Element) with <beta_j, x_i> = delta_ij.
    Torus parts range over all of (Z/ell)^2, so alg must be restricted.
    """
    if not alg.restricted:
        raise InvalidArgs("dual bases need the restricted algebra")
    ell = alg.ell
    P = Pairing(alg, norm)
    blocks_e = [c for c in _blocks(weight, ell)]
    xs = [c + (a, b) + (0,) * 8 for c in blocks_e for a in range(ell) for b in range(ell)]
    ys = [(0,) * 8 + (a, b) + tuple(c[5 - q] for q in range(6))
          for c in blocks_e for a in range(ell) for b in range(ell)]
    n = len(xs)
    M = [[P.pair_monomials(y, x) for x in xs] for y in ys]
    # beta_j = sum_k C[j][k] y_k with C M = I
    inv = _invert(M, alg)
    out = []
    for j in range(n):
        terms = {}
        for k in range(n):
            c = inv[j][k]
            if c:
                terms[ys[k]] = c
        out.append((xs[j], Element(alg, terms)))
    return out


def _blocks(weight, ell):
    n1, n2 = weight
    out = []

    def rec(p, c, a, b):
        if p == 6:
            if a == n1 and b == n2:
                out.append(tuple(c))
            return
        m1, m2 = RT.E_ROOTS[p]
        k = 0
        while (ell is None or k < ell) and a + k * m1 <= n1 and b + k * m2 <= n2:
            rec(p + 1, c + [k], a + k * m1, b + k * m2)
            k += 1
    rec(0, [], 0, 0)
    return out


def _invert(M, alg):
    """Inverse of a square matrix over the coefficient field; row j of the result gives beta_j."""
    n = len(M)
    A = [list(row) + [alg.one if i == j else alg.zero for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            raise InvalidArgs("pairing matrix is singular on this weight space")
        A[col], A[piv] = A[piv], A[col]
        inv = A[col][col].inv()
        A[col] = [v * inv for v in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [v - f * w for v, w in zip(A[r], A[col])]
    return [row[n:] for row in A]


def r_matrix(alg, enable=False, norm="double"):
    """R = sum x_i (x) beta_i over a PBW basis of b and its dual basis in b'.

    Materializing all ell^8 terms is expensive, so this requires enable=True.
    Returns an iterator of (x, beta) pairs, weight space by weight space.
    """
    if not enable:
        raise InvalidArgs("R-matrix materialization is opt-in; pass enable=True")
    if not alg.restricted:
        raise InvalidArgs("dual bases need the restricted algebra")
    weights = sorted({RT.weight(c) for c in _all_blocks(alg.ell)})
    return (pair for w in weights for pair in dual_basis_block(alg, w, norm))


def _all_blocks(ell):
    from itertools import product
    return product(range(ell), repeat=6)
