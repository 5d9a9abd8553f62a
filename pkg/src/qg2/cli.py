"""Command-line front end: expression parser, arithmetic commands and verification suites.

Grammar (whitespace insensitive; juxtaposition multiplies):

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/')? factor)*
    factor := atom ('^' ['-'] int)?
    atom   := number | ident | ident '(' expr ')' | '(' expr ')'
            | '[' expr ',' expr ']' '_' '{' expr '}'

Identifiers are generators (e1 e2 f1 f2 w1 w2 w1' w2'), root vectors (E12,
E112, E1112, E11212, F12, ...), the scalars r, s (and theta in the root mode),
and the function tau(...).  Division is only by scalars.
"""

import argparse
import json
import re
import sys

from .coeff.modes import GENERIC, RootOfUnity
from .errors import ExprSyntaxError, InvalidArgs, QG2Error, UnknownSymbol
from .pbw.algebra import NAMES, Element
from .pbw.ops import get_algebra, tau
from .pbw.render import element_json, render_element

ALIASES = {
    "omega1": "w1", "omega2": "w2", "omega1'": "w1'", "omega2'": "w2'",
    "ω1": "w1", "ω2": "w2", "ω1'": "w1'", "ω2'": "w2'",
}
FUNCTIONS = ("tau",)

# -- AST --


class Scalar:
    def __init__(self, text):
        self.text = text


class Gen:
    def __init__(self, name):
        self.name = name


class RootVec(Gen):
    pass


class Pow:
    def __init__(self, base, n):
        self.base, self.n = base, n


class Mul:
    def __init__(self, a, b):
        self.a, self.b = a, b


class Div(Mul):
    pass


class Add:
    def __init__(self, a, b, sign=1):
        self.a, self.b, self.sign = a, b, sign


class Neg:
    def __init__(self, a):
        self.a = a


class QBracket:
    def __init__(self, a, b, c):
        self.a, self.b, self.c = a, b, c


class Tau:
    def __init__(self, a):
        self.a = a


# -- lexer --

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-zω][A-Za-z0-9_ω]*'?)
  | (?P<op>[-+*/^(),\[\]_{}])
""", re.VERBOSE)


def tokenize(text):
    toks = []
    pos = 0
    line, col = 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        val = m.group()
        if kind != "ws":
            toks.append((kind, val, line, col))
        for ch in val:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
    toks.append(("end", "", line, col))
    return toks


class Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ExprSyntaxError(msg, tok[2], tok[3])

    def expect(self, val):
        t = self.next()
        if t[1] != val:
            raise self.error(f"expected {val!r}, found {t[1] or 'end of input'!r}", t)
        return t

    def parse(self):
        e = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return e

    def expr(self):
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.next()[1] == "-" else 1
        e = self.term()
        if sign < 0:
            e = Neg(e)
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            e = Add(e, self.term(), 1 if op == "+" else -1)
        return e

    def _starts_atom(self, t):
        return t[0] in ("num", "ident") or (t[0] == "op" and t[1] in ("(", "["))

    def term(self):
        e = self.factor()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in ("*", "/"):
                self.next()
                f = self.factor()
                e = Mul(e, f) if t[1] == "*" else Div(e, f)
            elif self._starts_atom(t):
                e = Mul(e, self.factor())
            else:
                return e

    def factor(self):
        a = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.next()
            neg = False
            if self.peek()[1] == "-":
                self.next()
                neg = True
            t = self.next()
            if t[0] != "num":
                raise self.error("exponent must be an integer", t)
            n = int(t[1])
            a = Pow(a, -n if neg else n)
        return a

    def atom(self):
        t = self.next()
        kind, val = t[0], t[1]
        if kind == "num":
            return Scalar(val)
        if kind == "ident":
            if val in FUNCTIONS:
                self.expect("(")
                e = self.expr()
                self.expect(")")
                return Tau(e)
            name = ALIASES.get(val, val)
            if name in ("r", "s", "theta"):
                return Scalar(name)
            if name in NAMES:
                cls = Gen if name in ("e1", "e2", "f1", "f2") or name.startswith("w") else RootVec
                return cls(name)
            raise UnknownSymbol(f"unknown symbol {val!r} at line {t[2]}, column {t[3]}")
        if val == "(":
            e = self.expr()
            self.expect(")")
            return e
        if val == "[":
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect("]")
            self.expect("_")
            self.expect("{")
            c = self.expr()
            self.expect("}")
            return QBracket(a, b, c)
        raise self.error(f"unexpected {val or 'end of input'!r}", t)


def parse(text):
    return Parser(text).parse()


def _scalar_value(x):
    """Coefficient of a scalar element, or None if x is not a scalar."""
    if not x.terms:
        return x.alg.zero
    if len(x.terms) == 1:
        (m, c), = x.terms.items()
        if not any(m):
            return c
    return None


def evaluate(e, alg):
    mode = alg.mode
    if isinstance(e, Scalar):
        if e.text == "r":
            return alg.scalar(mode.mono(1, 0))
        if e.text == "s":
            return alg.scalar(mode.mono(0, 1))
        if e.text == "theta":
            if not isinstance(mode, RootOfUnity):
                raise UnknownSymbol("theta only exists in the root-of-unity mode")
            return alg.scalar(mode.theta())
        return alg.scalar(mode.const(int(e.text)))
    if isinstance(e, Gen):
        return alg.gen(e.name)
    if isinstance(e, Pow):
        return evaluate(e.base, alg) ** e.n
    if isinstance(e, Div):
        num, den = evaluate(e.a, alg), evaluate(e.b, alg)
        c = _scalar_value(den)
        if c is None:
            raise InvalidArgs("division is only defined by scalars")
        if not c:
            from .errors import DivisionByZero
            raise DivisionByZero("division by zero")
        return num * c.inv()
    if isinstance(e, Mul):
        return evaluate(e.a, alg) * evaluate(e.b, alg)
    if isinstance(e, Add):
        a, b = evaluate(e.a, alg), evaluate(e.b, alg)
        return a + b if e.sign > 0 else a - b
    if isinstance(e, Neg):
        return -evaluate(e.a, alg)
    if isinstance(e, QBracket):
        a, b, c = evaluate(e.a, alg), evaluate(e.b, alg), evaluate(e.c, alg)
        if _scalar_value(c) is None:
            raise InvalidArgs("the bracket subscript must be a scalar")
        return a * b - c * b * a
    if isinstance(e, Tau):
        return tau(evaluate(e.a, alg))
    raise InvalidArgs(f"cannot evaluate {e!r}")


def parse_element(text, alg):
    return evaluate(parse(text), alg)


# -- commands --

def _mode_from_args(args):
    if args.mode is None:
        return None
    if args.mode == "generic":
        return GENERIC
    return RootOfUnity(args.ell, args.y, args.z)


def _algebra(args):
    mode = _mode_from_args(args) or GENERIC
    restricted = isinstance(mode, RootOfUnity) and not args.unrestricted
    return get_algebra(mode, restricted=restricted, fast_paths=isinstance(mode, RootOfUnity))


def _emit(args, text, payload):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_normalize(args):
    alg = _algebra(args)
    x = parse_element(args.expr, alg)
    _emit(args, render_element(x), {"input": args.expr, "result": element_json(x), "text": render_element(x)})
    return 0


def cmd_delta(args):
    from .hopf import coproduct
    alg = _algebra(args)
    t = coproduct(parse_element(args.expr, alg))
    _emit(args, str(t), {"input": args.expr, "result": t.json(), "text": str(t)})
    return 0


def cmd_antipode(args):
    from .hopf import antipode, antipode_inv
    alg = _algebra(args)
    x = parse_element(args.expr, alg)
    y = antipode_inv(x) if args.inverse else antipode(x)
    _emit(args, render_element(y), {"input": args.expr, "result": element_json(y), "text": render_element(y)})
    return 0


def cmd_pair(args):
    from .pairing import Pairing
    alg = _algebra(args)
    a, x = parse_element(args.left, alg), parse_element(args.right, alg)
    v = Pairing(alg, args.norm).pair(a, x)
    _emit(args, v.render(), {"left": args.left, "right": args.right, "norm": args.norm, "value": v.render()})
    return 0


def cmd_dim(args):
    mode = _mode_from_args(args)
    if not isinstance(mode, RootOfUnity):
        raise InvalidArgs("dim needs --mode root (the generic algebra is infinite-dimensional)")
    from .suites import restricted_dimension
    n = restricted_dimension(mode.ell)
    _emit(args, str(n), {"ell": mode.ell, "dim": n})
    return 0


def cmd_verify(args):
    from .suites import SUITES, Context, run_suite
    if args.suite not in SUITES:
        raise InvalidArgs(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    mode = _mode_from_args(args)
    want = SUITES[args.suite][1]
    if mode is not None and (mode.generic != (want == "generic")):
        raise InvalidArgs(f"suite {args.suite} runs in --mode {want}")
    ctx = Context(mode, args.degree_bound, enable_rmatrix=args.enable_rmatrix)
    items = run_suite(args.suite, ctx)
    if args.suite_filter:
        pat = re.compile(args.suite_filter)
        items = [it for it in items if pat.search(it.id)]
    failed = sum(it.status == "fail" for it in items)
    passed = sum(it.status == "pass" for it in items)
    if args.json:
        print(json.dumps({"suite": args.suite, "items": [it.json() for it in items]}, sort_keys=True))
    else:
        for it in items:
            line = f"{it.status.upper():4} {it.id}"
            if it.detail:
                line += f": {it.detail}"
            print(line)
        print(f"{args.suite}: {passed}/{passed + failed} pass")
    return 1 if failed else 0


def build_parser():
    p = argparse.ArgumentParser(prog="qg2", description="Exact computation in U_{r,s}(G2) and u_{r,s}(G2).")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("generic", "root"), default=None,
                        help="coefficient field: Q(r,s) or Q(theta) with r=theta^y, s=theta^z "
                             "(default: generic; verify uses each suite's own mode)")
    common.add_argument("--ell", type=int, default=5, help="order of theta in root mode (default 5)")
    common.add_argument("--y", type=int, default=1, help="r = theta^y (default 1)")
    common.add_argument("--z", type=int, default=2, help="s = theta^z (default 2)")
    common.add_argument("--unrestricted", action="store_true",
                        help="in root mode, work in U at the root of unity instead of the quotient u")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="cmd", required=True)
    s = sub.add_parser("normalize", parents=[common], help="PBW normal form")
    s.add_argument("expr")
    s = sub.add_parser("delta", parents=[common], help="coproduct")
    s.add_argument("expr")
    s = sub.add_parser("antipode", parents=[common], help="antipode")
    s.add_argument("expr")
    s.add_argument("--inverse", action="store_true", help="apply S^-1 instead")
    s = sub.add_parser("pair", parents=[common], help="skew pairing <b' element, b element>")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--norm", choices=("prop", "double"), default="prop",
                   help="<f_i, e_i> = 1/(s_i - r_i) (prop, default) or 1 (double)")
    sub.add_parser("dim", parents=[common], help="dimension of the restricted quotient")
    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite")
    s.add_argument("--suite-filter", default=None, help="regex on item ids")
    s.add_argument("--degree-bound", type=int, default=None, help="oracle degree bound")
    s.add_argument("--enable-rmatrix", action="store_true", help="include dual-basis (R-matrix) checks")
    return p


COMMANDS = {
    "normalize": cmd_normalize, "delta": cmd_delta, "antipode": cmd_antipode,
    "pair": cmd_pair, "dim": cmd_dim, "verify": cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.cmd](args)
    except (ExprSyntaxError, UnknownSymbol, InvalidArgs) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except QG2Error as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except Exception as e:   # noqa: BLE001
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
