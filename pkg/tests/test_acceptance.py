"""One test per acceptance criterion.  Each prints a single PASS/FAIL line.

All comparisons are exact.  Runtime budgets are asserted alongside the
mathematical checks.
"""

import random
import time

from qg2.coeff.modes import GENERIC, RootOfUnity
from qg2.hopf import (IsoSpec, check_iso_family, coproduct_report, hopf_ideal_report,
                      skew_primitive_report)
from qg2.integrals import integrals_report
from qg2.pairing import (Double, double_relation_report, commutator_cross_report, nondegeneracy_check,
                         psi_relation_report, ribbon_precheck)
from qg2.pbw.ops import get_algebra
from qg2.pbw.table import STRAIGHTENING, pbw_rank_report, straightening_report
from qg2.suites import (POWER_GROUPS, Context, random_basis_monomial, restricted_dimension,
                        suite_basis, suite_centrality, suite_hopf_axioms, suite_powers)

ELL, Y, Z = 5, 1, 2


class Clock:
    def __enter__(self):
        self.t = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t


def report(capsys, n, title, ok, clock, budget, detail=""):
    within = clock.elapsed < budget
    status = "PASS" if ok and within else "FAIL"
    line = f"[{status}] criterion {n:2d}: {title} ({clock.elapsed:.2f}s, budget {budget:g}s)"
    if detail:
        line += f" {detail}"
    with capsys.disabled():
        print("\n" + line)
    assert ok, f"criterion {n} failed: {detail}"
    assert within, f"criterion {n} over budget: {clock.elapsed:.2f}s"


def failures(items):
    return [i.id for i in items if i.status == "fail"]


def test_01_straightening_table(capsys):
    alg = get_algebra(GENERIC)
    with Clock() as c:
        bad = []
        for label, (x, y), rhs in STRAIGHTENING:
            lhs = alg.E_vec(x) * alg.E_vec(y)
            printed = alg.element({})
            for block, k in rhs:
                printed = printed + alg.monomial(block + (0,) * 10, alg.mode.lift(k))
            if lhs != printed:
                bad.append(label)
    # the second, rewrite-table-free route (Serre ideal membership) runs outside the budget
    oracle_bad = [l for l, _, o in straightening_report(alg) if not o]
    ok = len(STRAIGHTENING) == 9 and not bad and not oracle_bad
    report(capsys, 1, "straightening table, 9 identities", ok, c, 1,
           f"engine failures={bad} oracle failures={oracle_bad}")


def test_02_power_formulas(capsys):
    ctx = Context()
    with Clock() as c:
        items = [i for group in POWER_GROUPS for i in suite_powers(group)(ctx)]
    asserted = [i for i in items if i.status in ("pass", "fail")]
    ok = len(asserted) >= 60 and not failures(items)
    report(capsys, 2, f"power formulas, {len(asserted)} equalities", ok, c, 30,
           f"failures={failures(items)}")


def test_03_serre_oracle_pairs(capsys):
    with Clock() as c:
        items = suite_basis(Context())
    pairs = [i for i in items if i.id.endswith("vs oracle")]
    ok = len(pairs) == 15 and all(i.status == "pass" for i in pairs)
    report(capsys, 3, "15 ordered E-pairs agree with the Serre oracle", ok, c, 300,
           f"statuses={[i.status for i in pairs if i.status != 'pass']}")


def test_04_pbw_independence(capsys):
    with Clock() as c:
        rep = pbw_rank_report(6)
    count = sum(n for _, n, _, _ in rep)
    ok = all(n == k for _, n, k, _ in rep)
    report(capsys, 4, f"PBW monomials of degree <= 6 independent ({count} monomials)", ok, c, 300,
           f"{[(w, n, k) for w, n, k, _ in rep if n != k]}")


def test_05_hopf_axioms(capsys):
    with Clock() as c:
        items = suite_hopf_axioms(Context(seed=0), n_pairs=100)
    n_mult = sum(i.id.startswith("Delta multiplicative") for i in items)
    ok = n_mult == 100 and len(items) == 16 * 4 + 100 and not failures(items)
    report(capsys, 5, "Hopf axioms on 8 generators + 8 composite root vectors, 100 random pairs",
           ok, c, 60, f"failures={failures(items)}")


def test_06_composite_coproducts(capsys):
    alg = get_algebra(GENERIC)
    with Clock() as c:
        rep = coproduct_report(alg)
    bad = {n: str(d) for n, (_, _, d) in rep.items() if d}
    ok = set(rep) == {"E12", "E112", "E1112", "E11212"} and not bad
    report(capsys, 6, "printed coproducts of E12, E112, E1112, E11212 (E11212 diff empty)",
           ok, c, 10, f"diffs={bad}")


def test_07_centrality(capsys):
    with Clock() as c:
        items = suite_centrality(Context(RootOfUnity(ELL, Y, Z)))
    comm = [i for i in items if i.id.startswith("[")]
    ok = len(comm) == 16 * 8 and not failures(comm)
    report(capsys, 7, f"l-th powers central, {len(comm)} commutators", ok, c, 600,
           f"failures={failures(comm)}")


def test_08_hopf_ideal(capsys):
    alg = get_algebra(RootOfUnity(ELL, Y, Z), fast_paths=True)
    with Clock() as c:
        rep = hopf_ideal_report(alg)
    bad = [l for l, d, s in rep if d or s]
    ok = len(rep) == 16 and not bad
    report(capsys, 8, "Delta and S preserve the ideal of l-th powers", ok, c, 300, f"failures={bad}")


def test_09_restricted_bookkeeping(capsys):
    alg = get_algebra(RootOfUnity(ELL, Y, Z), restricted=True)
    rng = random.Random(0)
    with Clock() as c:
        bad = 0
        for _ in range(100):
            p = alg.monomial(random_basis_monomial(ELL, rng)) * alg.monomial(random_basis_monomial(ELL, rng))
            bad += not all(alg.valid(m) for m in p.terms)
    ok = restricted_dimension(ELL) == ELL ** 16 and bad == 0
    report(capsys, 9, "basis count l^16 and closure on 100 random pairs", ok, c, 60,
           f"{bad} products left the basis")


def test_10_skew_primitives(capsys):
    alg = get_algebra(RootOfUnity(ELL, Y, Z), restricted=True)
    with Clock() as c:
        rep = skew_primitive_report(alg, 20, seed=0)
    pos = [r for r in rep if r[1]]
    neg = [r for r in rep if not r[1]]
    bad = [l for l, e, o in rep if e != o]
    ok = len(pos) == 18 and len(neg) == 20 and not bad
    report(capsys, 10, "listed skew-primitives verify, 20 random non-examples fail", ok, c, 10,
           f"failures={bad}")


def test_11_isomorphism_families(capsys):
    with Clock() as c:
        bad = []
        for family in (1, 2):
            for k in (0, 1):
                for label, good in check_iso_family(IsoSpec(family, k, 2, -3)):
                    if not good:
                        bad.append(f"family {family} zeta^{k}: {label}")
    report(capsys, 11, "both isomorphism families for zeta = 1 and a primitive cube root",
           not bad, c, 30, f"failures={bad}")


def test_12_double(capsys):
    alg = get_algebra(RootOfUnity(ELL, Y, Z), restricted=True)
    with Clock() as c:
        D = Double(alg, "double")
        rel = [l for l, v in double_relation_report(D) if v.terms]
        psi = [l for l, good, _, _ in psi_relation_report(D) if not good]
        comm = [l for l, good, _, _ in commutator_cross_report(D) if not good]
    ok = nondegeneracy_check(ELL, Y, Z) and not rel and not psi and not comm
    report(capsys, 12, "double: gcd check, relations of u on psi-images, cross products", ok, c, 120,
           f"relations={rel} psi={psi} cross={comm}")


def test_13_integrals(capsys):
    with Clock() as c:
        rep = integrals_report(ELL, Y, Z)
    bad = [l for l, good, _ in rep if not good]
    ok = len(rep) >= 30 and not bad
    report(capsys, 13, f"integrals and dual integrals ({len(rep)} checks)", ok, c, 600,
           f"failures={bad}")


def test_14_ribbon(capsys):
    alg = get_algebra(RootOfUnity(ELL, Y, Z), restricted=True)
    with Clock() as c:
        rep = ribbon_precheck(alg)
    labels = {l for l, _, _, _ in rep}
    need = {"h^2 = g", "delta^2 = gamma", "S^2(E1)", "S^2(E2)", "S^2(w1)", "S^2(w2)"}
    need |= {"S^2(F1) in b'^coop", "S^2(F2) in b'^coop"}
    bad = [l for l, good, _, _ in rep if not good]
    ok = need <= labels and not bad
    report(capsys, 14, "ribbon preconditions h^2 = g, delta^2 = gamma, S^2 conjugation", ok, c, 30,
           f"failures={bad}")
