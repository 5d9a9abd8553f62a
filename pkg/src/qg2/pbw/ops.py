"""Structural maps on elements: tau, restriction, pair straightening, torus weights."""

from ..coeff.modes import RootOfUnity
from ..errors import InvalidArgs
from . import roots as RT
from .algebra import Algebra, Element

_ALGEBRAS = {}


def get_algebra(mode, restricted=False, fast_paths=False):
    """Shared Algebra instance per (mode, restricted, fast_paths), so caches are reused."""
    key = (mode.key(), restricted, fast_paths)
    alg = _ALGEBRAS.get(key)
    if alg is None:
        alg = _ALGEBRAS[key] = Algebra(mode, restricted, fast_paths)
    return alg


def tau_monomial(m):
    """tau of a normal monomial is again normal: E block <- reversed F block, w <-> w'."""
    e, t, f = m[:6], m[6:10], m[10:]
    return tuple(f[5 - p] for p in range(6)) + (t[2], t[3], t[0], t[1]) + tuple(e[5 - q] for q in range(6))


def tau(x):
    """The anti-automorphism e_i <-> f_i, w_i <-> w_i', r <-> s (generic mode only)."""
    if not x.alg.mode.generic:
        raise InvalidArgs("tau swaps r and s, which needs the generic mode")
    return Element(x.alg, {tau_monomial(m): c.swap() for m, c in x.terms.items()})


def restrict(x, ell=None):
    """Image of x in the restricted quotient u_{r,s}(G2)."""
    mode = x.alg.mode
    if not isinstance(mode, RootOfUnity):
        raise InvalidArgs("restriction needs a root-of-unity mode")
    if ell is not None and ell != mode.ell:
        raise InvalidArgs(f"ell={ell} does not match the mode's ell={mode.ell}")
    target = get_algebra(mode, restricted=True)
    out = {}
    for m, c in x.terms.items():
        mm = target.canon(m)
        if mm is None:
            continue
        v = out.get(mm)
        out[mm] = c if v is None else v + c
    return Element(target, {m: c for m, c in out.items() if c})


def restrict_tensor(t):
    """Restrict both legs of a tensor (see hopf.Tensor)."""
    from ..hopf import Tensor
    mode = t.alg.mode
    if not isinstance(mode, RootOfUnity):
        raise InvalidArgs("restriction needs a root-of-unity mode")
    target = get_algebra(mode, restricted=True)
    out = {}
    for (a, b), c in t.terms.items():
        aa, bb = target.canon(a), target.canon(b)
        if aa is None or bb is None:
            continue
        v = out.get((aa, bb))
        out[(aa, bb)] = c if v is None else v + c
    return Tensor(target, {k: c for k, c in out.items() if c})


def straighten_pair(alg, x, y):
    """Normal form of the product of two root vectors of one side.

    ``x`` and ``y`` are (side, slot) pairs, e.g. ("E", 4).
    """
    (sx, px), (sy, py) = x, y
    if sx != sy:
        raise InvalidArgs("straighten_pair needs two root vectors of the same side")
    if sx == "E":
        return alg.E_vec(px) * alg.E_vec(py)
    return alg.F_vec(px) * alg.F_vec(py)


_TORUS = {"w1": 0, "w2": 1, "w1'": 2, "w2'": 3}


def weight_conjugation(alg, t, v):
    """Scalar c with t v t^-1 = c v for a torus letter t and a root vector v = (side, slot)."""
    k = _TORUS[t] if isinstance(t, str) else t
    side, p = v
    if side == "E":
        a, b = RT.CONJ[k][p]
    else:
        a, b = RT.CONJ[k][5 - p]
        a, b = -a, -b
    return alg.mode.mono(a, b)
