"""Top-level acceptance checks, one verdict line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the PASS/FAIL lines
directly; without ``-s`` pytest still fails the run on any FAIL.
Everything here is exact rational or quadratic-integer arithmetic, so the
stated tolerance of every comparison is equality.
"""

import os
import time
from fractions import Fraction
from math import comb

from picardfuchs import (
    CATALOG,
    CHAINS,
    MobiusMap,
    SingularPoint,
    TetraForm,
    ThetaOperator,
    conifold_expand,
    eta_product,
    mobius,
    pullback_power,
    reproduce_reduction,
    riemann_symbol,
    verify_annihilation,
)
from picardfuchs.arith import Polynomial
from picardfuchs.catalog_data import TETRA_DEMO
from picardfuchs.frobenius import (
    PointType,
    annihilation_order,
    classify_point,
    local_basis,
)
from picardfuchs.guess import GuessConfig, guess_operator
from picardfuchs.optheta import local_operator
from picardfuchs.period import simplex_monomial_integral
from picardfuchs.qexp import lookup_form
from picardfuchs.transform import descend_power, translate_to_origin

README = os.path.join(os.path.dirname(__file__), os.pardir, "README.md")


def _verdict(n, ok, detail):
    print("criterion %d: %s  (%s)" % (n, "PASS" if ok else "FAIL", detail))
    assert ok, detail


def test_criterion_1_all_symbols_match_stored_tables():
    t0 = time.monotonic()
    bad = [
        aid
        for aid, rec in sorted(CATALOG.items())
        if not riemann_symbol(rec.operator).same_table(rec.symbol_table())
    ]
    elapsed = time.monotonic() - t0
    ok = not bad and elapsed < 60
    _verdict(1, ok, "25 exponent tables recomputed in %.1fs, mismatches: %s" % (elapsed, bad))


def test_criterion_2_singular_point_labels():
    failures = []

    def expect(aid, point_str, want, note=""):
        op = CATALOG[aid].operator
        sym = riemann_symbol(op)
        point = next(p for p in sym.points() if str(p) == point_str)
        got = classify_point(op, point)
        if got is not want:
            failures.append("%d@%s: %s != %s" % (aid, point_str, got, want))

    expect(33, "0", PointType.K)
    expect(33, "1", PointType.C)
    expect(33, "2", PointType.C)
    expect(33, "oo", PointType.K)
    expect(250, "-1/2", PointType.APPARENT)

    basis = local_basis(
        CATALOG[250].operator,
        next(p for p in riemann_symbol(CATALOG[250].operator).points() if str(p) == "-1/2"),
    )
    if tuple(basis.exponents()) != (0, 1, 3, 4):
        failures.append("250@-1/2 exponents %s" % (basis.exponents(),))

    # the finite-order point of 153: label A is the finite-order family
    # member whose exponents are not equally spaced
    expect(153, "-2", PointType.A)

    mum_hits = []
    for aid, rec in sorted(CATALOG.items()):
        sym = riemann_symbol(rec.operator)
        for point in sym.points():
            if classify_point(rec.operator, point) is PointType.MUM:
                mum_hits.append("%d@%s" % (aid, point))
    if mum_hits:
        failures.append("unexpected maximal unipotent points: %s" % mum_hits)

    _verdict(
        2,
        not failures,
        failures or "33=K,C,C,K; 250@-1/2 apparent (0,1,3,4); 153@-2 A; no maximal unipotent point",
    )


def test_criterion_3_transformations_and_chains():
    failures = []

    if mobius(CATALOG[33].operator, MobiusMap(-1, 0, 0, 1)) != CATALOG[70].operator:
        failures.append("negating 33 does not give 70")
    if CATALOG[266].operator != CATALOG[273].operator:
        failures.append("266 and 273 differ")

    roundtrips = 0
    for name in sorted(CHAINS):
        rep = reproduce_reduction(name)
        if not rep.ok:
            failures.append("chain %s broke: %s" % (name, rep.detail))
            continue
        prev = None
        for step in rep.steps:
            if step.description.startswith("descend") and prev is not None:
                n = int(step.description.rsplit("^", 1)[1])
                if descend_power(prev, n) != step.operator:
                    failures.append("%s: descent step mismatch" % name)
                if pullback_power(step.operator, n) != prev:
                    failures.append("%s: pullback does not restore the source" % name)
                roundtrips += 1
            prev = step.operator
    if roundtrips < 6:
        failures.append("only %d descent roundtrips exercised" % roundtrips)

    _verdict(
        3,
        not failures,
        failures or "33->70, 266=273, 11 chains replayed, %d descend/pullback roundtrips" % roundtrips,
    )


def test_criterion_4_fuchs_relation():
    from picardfuchs import fuchs_defect

    bad = []
    for aid, rec in sorted(CATALOG.items()):
        n = rec.operator.order
        if fuchs_defect(rec.operator) != -n * (n - 1):
            bad.append(aid)
    _verdict(4, not bad, bad or "sum of exponents minus the regular value is -n(n-1) on all 25")


def test_criterion_5_every_local_solution_is_annihilated():
    total = full = 0
    for aid, rec in sorted(CATALOG.items()):
        op = rec.operator
        for point in riemann_symbol(op).points():
            basis = local_basis(op, point)
            lop = local_operator(op, point)
            for sol in basis.solutions:
                total += 1
                if annihilation_order(op, point, sol) == sol.truncation - lop.r:
                    full += 1
    _verdict(
        5,
        total == full and total >= 400,
        "%d/%d local solutions annihilated through their full truncation" % (full, total),
    )


def test_criterion_6_operator_recovery():
    failures = []

    central = [Fraction(comb(2 * n, n)) ** 2 for n in range(30)]
    legendre = ThetaOperator.from_theta_polys(
        [Polynomial((0, 0, 1)), Polynomial((-4, -16, -16))]
    )
    got = guess_operator(central, GuessConfig(2, 1, 10))
    if got != legendre:
        failures.append("central binomial squares: %r" % got)

    recovered = 0
    for aid in (33, 247, 252):
        op = CATALOG[aid].operator
        need = 5 * (op.r + 1) + 15
        basis = local_basis(op, SingularPoint(0), N=need + 2)
        holo = [s for s in basis.solutions if s.alpha == 0 and s.is_log_free()][0]
        if guess_operator(holo.power_coeffs()[:need], GuessConfig(4, op.r, 10)) == op:
            recovered += 1
        else:
            failures.append("arrangement %d not recovered" % aid)

    _verdict(
        6,
        not failures and recovered >= 3,
        failures or "order-2 series and %d order-4 holomorphic solutions inverted" % recovered,
    )


def test_criterion_7_period_expansion():
    failures = []

    ps = conifold_expand(TetraForm.one(10))
    if ps.coeffs != (Fraction(1),) + (Fraction(0),) * 10:
        failures.append("constant form expansion is not 1")

    for a in range(11):
        for b in range(11 - a):
            for c in range(11 - a - b):
                lhs = simplex_monomial_integral(a + 1, b, c)
                rhs = simplex_monomial_integral(a, b, c) * Fraction(
                    2 * a + 1, 2 * (a + b + c + 2)
                )
                if lhs != rhs:
                    failures.append("recurrence fails at (%d,%d,%d)" % (a, b, c))

    t0 = time.monotonic()
    form = TetraForm.from_planes(TETRA_DEMO["planes"], truncation=40)
    series = conifold_expand(form)
    op = translate_to_origin(
        CATALOG[TETRA_DEMO["arrangement"]].operator, TETRA_DEMO["base_point"]
    )
    k = verify_annihilation(op, series)
    elapsed = time.monotonic() - t0
    if k != series.truncation + 1 - op.r:
        failures.append("demo series only annihilated through order %d" % k)
    if elapsed >= 300:
        failures.append("demo expansion took %.0fs" % elapsed)

    _verdict(
        7,
        not failures,
        failures
        or "constant form trivial, recurrence through degree 10, 40-term demo annihilated in %.1fs" % elapsed,
    )


def test_criterion_8_eta_coefficients():
    wanted = [
        ("f32", 5, -2),
        ("f32", 29, -10),
        ("16", 5, -6),
        ("8", 19, -34),
        ("6/1", 17, -126),
        ("8/1", 23, -56),
    ]
    bad = []
    for name, n, a in wanted:
        q = eta_product(lookup_form(name).eta, n + 1)
        if q.coefficient(n) != a:
            bad.append("%s a_%d = %s" % (name, n, q.coefficient(n)))
    _verdict(8, not bad, bad or "six spot coefficients across five eta products")


def test_criterion_9_readme_states_verification_scope():
    with open(README) as fh:
        text = fh.read()
    ok = "exact golden data" in text and "property-based" in text
    _verdict(9, ok, "README states the verification rests on exact golden data and property-based suites")
