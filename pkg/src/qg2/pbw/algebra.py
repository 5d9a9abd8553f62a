"""PBW normal form and multiplication.

``Algebra`` fixes a coefficient mode and whether we work in the restricted
quotient.  Elements are sparse dicts {16-tuple monomial: coefficient}, wrapped
in :class:`Element` for operator syntax.

Multiplication of two normal monomials (E1 T1 F1)(E2 T2 F2) moves F1 past E2
(``fe_product``), then commutes torus letters past root vectors (pure scalars)
and straightens the E and F blocks with one ordered-word engine per side.
"""

import sys

from ..coeff.modes import GENERIC, RootOfUnity
from ..errors import InvalidArgs, ModeMismatch
from . import roots as RT
from .rules import E_RULES, F_RULES, E_DEFS, F_DEFS, SIMPLE_DIFF

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


def _acc(out, m, c):
    v = out.get(m)
    out[m] = c if v is None else v + c


def _prune(d):
    return {m: c for m, c in d.items() if c}


class OrderedEngine:
    """Straightening of words in six ordered letters, given pairwise rules."""

    def __init__(self, rules, one, bound=None, fast=None):
        self.rules = rules
        self.one = one
        self.bound = bound
        # optional shortcut: fast(x, k, a) -> {6-tuple: coeff} for E_x * E_k^a, or None
        self.fast = fast
        self._letter = {}
        self._mono = {}
        self.rewrites = 0

    def letter_times(self, x, m):
        """Normal form of (letter x) * (normal word m)."""
        key = (x, m)
        hit = self._letter.get(key)
        if hit is not None:
            return hit
        k = 0
        while k < 6 and not m[k]:
            k += 1
        if k == 6 or x <= k:
            n = m[x] + 1
            if self.bound is not None and n >= self.bound:
                out = {}
            else:
                out = {m[:x] + (n,) + m[x + 1:]: self.one}
        else:
            out = None
            if self.fast is not None and m[k] > 1 and not any(m[k + 1:]):
                out = self.fast(x, k, m[k])
            if out is not None:
                self._letter[key] = out
                return out
            self.rewrites += 1
            rest = m[:k] + (m[k] - 1,) + m[k + 1:]
            out = {}
            for mono, c in self.rules[(x, k)]:
                for mm, cc in self.mono_times(mono, rest).items():
                    _acc(out, mm, c * cc)
            out = _prune(out)
        self._letter[key] = out
        return out

    def mono_times(self, a, m):
        """Normal form of (normal word a) * (normal word m)."""
        if not any(a):
            return {m: self.one}
        if not any(m):
            if self.bound is not None and max(a) >= self.bound:
                return {}
            return {a: self.one}
        key = (a, m)
        hit = self._mono.get(key)
        if hit is not None:
            return hit
        x = 5
        while not a[x]:
            x -= 1
        # a is already sorted; if its last letter does not exceed m's first, just add
        k = 0
        while not m[k]:
            k += 1
        if x <= k:
            n = tuple(p + q for p, q in zip(a, m))
            if self.bound is not None and max(n) >= self.bound:
                out = {}
            else:
                out = {n: self.one}
        else:
            head = a[:x] + (a[x] - 1,) + a[x + 1:]
            out = {}
            for mm, c in self.letter_times(x, m).items():
                for m2, c2 in self.mono_times(head, mm).items():
                    _acc(out, m2, c * c2)
            out = _prune(out)
        self._mono[key] = out
        return out

    def clear(self):
        self._letter.clear()
        self._mono.clear()


class Algebra:
    """U_{r,s}(G2) over a coefficient mode, optionally restricted to u_{r,s}(G2)."""

    def __init__(self, mode=GENERIC, restricted=False, fast_paths=False):
        if restricted and not isinstance(mode, RootOfUnity):
            raise InvalidArgs("the restricted quotient needs a root-of-unity mode")
        self.mode = mode
        self.restricted = restricted
        self.ell = mode.ell if restricted else None
        self.zero = mode.zero
        self.one = mode.one
        lift = mode.lift
        e_rules = {k: [(m, lift(c)) for m, c in v] for k, v in E_RULES.items()}
        f_rules = {k: [(m, lift(c)) for m, c in v] for k, v in F_RULES.items()}
        self.fast_paths = fast_paths
        self.E = OrderedEngine(e_rules, self.one, self.ell, self._fast if fast_paths else None)
        self.F = OrderedEngine(f_rules, self.one, self.ell)
        self.e_defs = {p: (x, y, lift(c)) for p, (x, y, c) in E_DEFS.items()}
        self.f_defs = {q: (u, v, lift(c)) for q, (u, v, c) in F_DEFS.items()}
        self._fe = {}
        self._fq = {}
        self._comm = {}
        self._base_comm = {}
        self._mul = {}

    def _fast(self, x, k, a):
        from .power import closed_form_terms
        terms = closed_form_terms(x, k, a)
        if terms is None:
            return None
        out = {}
        lift = self.mode.lift
        for m, c in terms:
            if self.ell is not None and max(m) >= self.ell:
                continue
            _acc(out, m, lift(c))
        return _prune(out)

    # -- identity --

    def key(self):
        return (self.mode.key(), self.restricted)

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Algebra({self.mode!r}, restricted={self.restricted})"

    # -- monomial helpers --

    def norm_torus(self, t):
        if self.ell is not None:
            ell = self.ell
            return tuple(b % ell for b in t)
        return tuple(t)

    def mono(self, a, b):
        return self.mode.mono(a, b)

    def valid(self, m):
        if any(v < 0 for v in m[:6]) or any(v < 0 for v in m[10:]):
            return False
        if self.ell is not None:
            return all(0 <= v < self.ell for v in m)
        return True

    def canon(self, m):
        """Reduce a monomial for this algebra; None if it vanishes."""
        m = tuple(m)
        if self.ell is not None:
            ell = self.ell
            if max(m[:6]) >= ell or max(m[10:]) >= ell:
                return None
            m = m[:6] + tuple(b % ell for b in m[6:10]) + m[10:]
        return m

    # -- core products --

    def mul_mono(self, m1, m2):
        key = (m1, m2)
        hit = self._mul.get(key)
        if hit is not None:
            return hit
        e1, t1, f1 = m1[:6], m1[6:10], m1[10:]
        e2, t2, f2 = m2[:6], m2[6:10], m2[10:]
        out = {}
        Emul, Fmul, mono = self.E.mono_times, self.F.mono_times, self.mode.mono
        for mid, c in self.fe_product(f1, e2).items():
            ep, tp, fp = mid[:6], mid[6:10], mid[10:]
            a1, b1 = RT.torus_past_e(t1, ep)
            a2, b2 = RT.f_past_torus(fp, t2)
            if a1 or b1 or a2 or b2:
                c = c * mono(a1 + a2, b1 + b2)
            t = self.norm_torus(tuple(x + y + z for x, y, z in zip(t1, tp, t2)))
            ee = Emul(e1, ep)
            ff = Fmul(fp, f2)
            for em, ec in ee.items():
                cc = c * ec
                for fm, fc in ff.items():
                    _acc(out, em + t + fm, cc * fc)
        out = _prune(out)
        self._mul[key] = out
        return out

    def mul_dicts(self, A, B):
        out = {}
        for m1, c1 in A.items():
            for m2, c2 in B.items():
                for m, c in self.mul_mono(m1, m2).items():
                    _acc(out, m, c1 * c2 * c)
        return _prune(out)

    def fe_product(self, f, e):
        """Normal form of F^f * E^e as a dict of 16-tuples."""
        if not any(f) or not any(e):
            return {e + RT.ZERO4 + f: self.one}
        key = (f, e)
        hit = self._fe.get(key)
        if hit is not None:
            return hit
        q = 5
        while not f[q]:
            q -= 1
        rest = f[:q] + (f[q] - 1,) + f[q + 1:]
        first = self.fq_times_e(q, e)
        if not any(rest):
            self._fe[key] = first
            return first
        out = {}
        mono = self.mode.mono
        for m, c in first.items():
            ep, tp, fp = m[:6], m[6:10], m[10:]
            for m2, c2 in self.fe_product(rest, ep).items():
                e2, t2, f2 = m2[:6], m2[6:10], m2[10:]
                a, b = RT.f_past_torus(f2, tp)
                cc = c * c2
                if a or b:
                    cc = cc * mono(a, b)
                t = self.norm_torus(tuple(x + y for x, y in zip(t2, tp)))
                for fm, fc in self.F.mono_times(f2, fp).items():
                    _acc(out, e2 + t + fm, cc * fc)
        out = _prune(out)
        self._fe[key] = out
        return out

    def fq_times_e(self, q, e):
        """Normal form of F_q * E^e."""
        key = (q, e)
        hit = self._fq.get(key)
        if hit is not None:
            return hit
        if q in (RT.F1, RT.F2):
            j = 1 if q == RT.F1 else 2
            out = {e + RT.ZERO4 + RT.unit6(q): self.one}
            for m, c in self.comm_ef(e, j).items():
                _acc(out, m, -c)
            out = _prune(out)
        else:
            u, v, c = self.f_defs[q]
            U, V = {RT.f_mono(RT.unit6(u)): self.one}, {RT.f_mono(RT.unit6(v)): self.one}
            X = {RT.e_mono(e): self.one}
            out = self.mul_dicts(U, self.mul_dicts(V, X))
            for m, cc in self.mul_dicts(V, self.mul_dicts(U, X)).items():
                _acc(out, m, -c * cc)
            out = _prune(out)
        self._fq[key] = out
        return out

    def comm_ef(self, e, j):
        """[E^e, f_j] = E^e f_j - f_j E^e; only E and torus letters occur."""
        key = (e, j)
        hit = self._comm.get(key)
        if hit is not None:
            return hit
        p = 0
        while not e[p]:
            p += 1
        rest = e[:p] + (e[p] - 1,) + e[p + 1:]
        base = self.base_comm(p, j)
        if not any(rest):
            out = base
        else:
            Ep = {RT.e_mono(RT.unit6(p)): self.one}
            out = self.mul_dicts(Ep, self.comm_ef(rest, j))
            for m, c in self.mul_dicts(base, {RT.e_mono(rest): self.one}).items():
                _acc(out, m, c)
            out = _prune(out)
        self._comm[key] = out
        return out

    def base_comm(self, p, j):
        """[E_p, f_j] for a single root vector."""
        key = (p, j)
        hit = self._base_comm.get(key)
        if hit is not None:
            return hit
        if p in (RT.E1, RT.E2):
            i = 1 if p == RT.E1 else 2
            if i != j:
                out = {}
            else:
                d = self.mode.lift(SIMPLE_DIFF[i])
                inv = self.one / d
                tw = [0, 0, 0, 0]
                tw[i - 1] = 1
                tp = [0, 0, 0, 0]
                tp[i + 1] = 1
                out = {}
                _acc(out, RT.t_mono(self.norm_torus(tw)), inv)
                _acc(out, RT.t_mono(self.norm_torus(tp)), -inv)
                out = _prune(out)
        else:
            x, y, c = self.e_defs[p]
            X = {RT.e_mono(RT.unit6(x)): self.one}
            Y = {RT.e_mono(RT.unit6(y)): self.one}
            cX, cY = self.base_comm(x, j), self.base_comm(y, j)
            out = {}
            # [XY - cYX, f] = X[Y,f] + [X,f]Y - c(Y[X,f] + [Y,f]X)
            for A, B, k in ((X, cY, self.one), (cX, Y, self.one), (Y, cX, -c), (cY, X, -c)):
                if A and B:
                    for m, cc in self.mul_dicts(A, B).items():
                        _acc(out, m, k * cc)
            out = _prune(out)
        self._base_comm[key] = out
        return out

    def clear_caches(self):
        self.E.clear()
        self.F.clear()
        for d in (self._fe, self._fq, self._comm, self._base_comm, self._mul):
            d.clear()

    # -- element construction --

    def element(self, terms=None):
        return Element(self, terms or {})

    def scalar(self, c):
        c = self.mode.coerce(c)
        if not c:
            return Element(self, {})
        return Element(self, {RT.UNIT_MONO: c})

    def unit(self):
        return Element(self, {RT.UNIT_MONO: self.one})

    def monomial(self, m, c=None):
        m = self.canon(m)
        if m is None:
            return Element(self, {})
        return Element(self, {m: self.one if c is None else self.mode.coerce(c)})

    def E_vec(self, p, n=1):
        return self.monomial(RT.e_mono(RT.unit6(p, n)))

    def F_vec(self, q, n=1):
        return self.monomial(RT.f_mono(RT.unit6(q, n)))

    def torus(self, b1=0, b2=0, b1p=0, b2p=0):
        return self.monomial(RT.t_mono((b1, b2, b1p, b2p)))

    def gen(self, name):
        """Generator or root vector by name (e1, E12, w1', F2, ...)."""
        spec = NAMES.get(name)
        if spec is None:
            from ..errors import UnknownSymbol
            raise UnknownSymbol(f"unknown symbol {name!r}")
        block, slot = spec
        if block == "E":
            return self.E_vec(slot)
        if block == "F":
            return self.F_vec(slot)
        t = [0, 0, 0, 0]
        t[slot] = 1
        return self.torus(*t)

    def root_vectors(self, side="E"):
        if side == "E":
            return [self.E_vec(p) for p in range(6)]
        return [self.F_vec(q) for q in range(6)]

    def generators(self):
        """The eight generators e1, e2, f1, f2, w1, w2, w1', w2'."""
        return [self.gen(n) for n in ("e1", "e2", "f1", "f2", "w1", "w2", "w1'", "w2'")]


NAMES = {}
for _p, _n in enumerate(RT.E_NAMES):
    NAMES[_n] = ("E", _p)
for _q, _n in enumerate(RT.F_NAMES):
    NAMES[_n] = ("F", _q)
for _k, _n in enumerate(RT.T_NAMES):
    NAMES[_n] = ("T", _k)
NAMES["e1"] = ("E", RT.E1)
NAMES["e2"] = ("E", RT.E2)
NAMES["f1"] = ("F", RT.F1)
NAMES["f2"] = ("F", RT.F2)


class Element:
    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms

    def _same(self, other):
        if other.alg is not self.alg and other.alg != self.alg:
            raise ModeMismatch("elements belong to different algebras")

    def _wrap(self, x):
        if isinstance(x, Element):
            self._same(x)
            return x
        return self.alg.scalar(x)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        other = self._wrap(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return Element(self.alg, _prune(out))

    __radd__ = __add__

    def __neg__(self):
        return Element(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if isinstance(other, Element):
            self._same(other)
            return Element(self.alg, self.alg.mul_dicts(self.terms, other.terms))
        c = self.alg.mode.coerce(other)
        if not c:
            return Element(self.alg, {})
        return Element(self.alg, {m: v * c for m, v in self.terms.items()})

    def __rmul__(self, other):
        c = self.alg.mode.coerce(other)
        if not c:
            return Element(self.alg, {})
        return Element(self.alg, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) == 1:
                (m, c), = self.terms.items()
                if not any(m[:6]) and not any(m[10:]):
                    t = tuple(-b for b in m[6:10])
                    return self.alg.monomial(m[:6] + t + m[10:], self.alg.one / c) ** (-n)
            raise InvalidArgs("negative powers only exist for torus monomials")
        out = self.alg.unit()
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.terms == other.terms
        try:
            return self.terms == self.alg.scalar(other).terms
        except Exception:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coeff(self, m):
        return self.terms.get(tuple(m), self.alg.zero)

    def items(self):
        return sorted(self.terms.items())

    def __repr__(self):
        from .render import render_element
        return f"Element({render_element(self)!r})"

    def __str__(self):
        from .render import render_element
        return render_element(self)
