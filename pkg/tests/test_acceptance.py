"""Acceptance criteria 1-15, each reported as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are repeated in the
terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""

import math
import time
from fractions import Fraction

import pytest

from zetaaudit.audit import AuditConfig, run_all, run_one
from zetaaudit.lfunctions import (
    beta_odd,
    l_value,
    l_value_euler,
    l_value_via_fe,
    selberg_chowla_half,
    selberg_chowla_series,
)
from zetaaudit.primeprod import ResidueProductSpec, residue_product
from zetaaudit.special import catalan_series, digamma
from zetaaudit.stieltjes import stieltjes_gamma, stieltjes_oracle, summatory
from zetaaudit.zeta import crit_strip_bounds, riemann_zeta

RESULTS: dict[int, str] = {}


def report(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def timed(f, *args):
    t = time.perf_counter()
    v = f(*args)
    return v, time.perf_counter() - t


def test_criterion_01_even_zeta_values():
    z2, t2 = timed(riemann_zeta, 2.0)
    z4, t4 = timed(riemann_zeta, 4.0)
    e2, e4 = abs(z2 - math.pi**2 / 6), abs(z4 - math.pi**4 / 90)
    report(1, e2 < 1e-12 and e4 < 1e-12 and t2 < 1e-3 and t4 < 1e-3,
           f"|zeta(2)-pi^2/6|={e2:.1e} |zeta(4)-pi^4/90|={e4:.1e} times {t2 * 1e3:.3f}/{t4 * 1e3:.3f} ms")


def test_criterion_02_gamma0_digamma():
    grid = [Fraction(j, 8) for j in range(1, 9)]
    worst = max(abs(stieltjes_gamma(0, a)[0] + digamma(float(a))) for a in grid)
    report(2, worst < 1e-10, f"max |gamma_0(a)+psi(a)| over a=1/8..1 = {worst:.1e}")


def test_criterion_03_integral_vs_oracle():
    t = time.perf_counter()
    worst = max(abs(stieltjes_gamma(k, 1)[0] - stieltjes_oracle(k, 1)) for k in range(9))
    dt = time.perf_counter() - t
    report(3, worst < 1e-8 and dt < 5, f"max |integral - oracle| for k<=8 = {worst:.1e} in {dt:.2f} s")


def test_criterion_04_first_summatory():
    r = summatory([(1, Fraction(1, 3)), (-1, Fraction(2, 3))], -1.0)
    e_closed, e30 = abs(r.closed_form - 1 / 3), abs(r.partial_sums[30] - 1 / 3)
    report(4, e_closed < 1e-12 and e30 < 1e-8, f"closed form err {e_closed:.1e}, S_30 err {e30:.1e}")


def test_criterion_05_catalan_three_routes():
    G = catalan_series()
    h = l_value(-4, 2.0)
    e = l_value_euler(-4, 2.0, 10**7)
    # functional equation in both directions: L(-1) from L(2), L(1.5) from L(-0.5), L(0.75) from L(0.25)
    trip = max(
        abs(l_value_via_fe(-4, 2.0).value - l_value(-4, -1.0).value),
        abs(l_value_via_fe(-4, -0.5).value - l_value(-4, 1.5).value),
        abs(l_value_via_fe(-4, 0.25).value - l_value(-4, 0.75).value),
    )
    ok = abs(h.value - G) < 1e-10 and abs(e.value - G) <= e.err_estimate and trip < 1e-9
    report(5, ok, f"|L(2)-G|={abs(h.value - G):.1e}, Euler err {abs(e.value - G):.1e} "
                  f"(bound {e.err_estimate:.1e}), FE round-trip {trip:.1e}")


def test_criterion_06_prop6():
    a, b = run_one("P6a"), run_one("P6b")
    terms = max(int(n.split(":")[1]) for r in (a, b) for n in r.notes if n.startswith("series terms used"))
    ok = a.max_pairwise_diff < 1e-9 and b.max_pairwise_diff < 1e-9 and terms <= 10
    report(6, ok, f"6(a) diff {a.max_pairwise_diff:.1e}, 6(b) diff {b.max_pairwise_diff:.1e}, {terms} terms")


def test_criterion_07_prop9():
    r = run_one("P9")
    S = 0.8228252496
    worst = max(abs(v - S) for _, v, _ in r.routes)
    s = run_one("P9-series")
    spread = s.max_pairwise_diff
    report(7, worst < 1e-9 and spread < 1e-9 and len(r.routes) >= 3,
           f"max route err vs 0.8228252496 = {worst:.1e}; J2 series spread over b = {spread:.1e}")


def test_criterion_08_prop10():
    t = time.perf_counter()
    diffs = [abs(l - r) for l, r in (selberg_chowla_half(11), selberg_chowla_half(19))]
    terms = max(selberg_chowla_series(p)[1] for p in (11, 19))
    dt = time.perf_counter() - t
    ok = max(diffs) < 1e-9 and terms <= 5 and dt < 2
    report(8, ok, f"|lhs-rhs| p=11: {diffs[0]:.1e}, p=19: {diffs[1]:.1e}; {terms} Bessel terms; {dt:.2f} s")


def test_criterion_09_prop11():
    b = crit_strip_bounds(0.5)
    q = crit_strip_bounds(0.25)
    lo, hi = -1.5 + 1 / (15 * math.sqrt(5)), -35 / 24
    e_lo = abs(b.lower_quad - 0.5 * (1 + 2 / (15 * math.sqrt(5))))
    e_hi = abs(b.upper_quad - 13 / 24)
    ok = lo < b.value < hi and e_lo < 1e-10 and e_hi < 1e-10 and q.holds
    ok = ok and abs(q.lower_quad - q.lower_integral) < 1e-10 and abs(q.upper_quad - q.upper_integral) < 1e-10
    ok = ok and run_one("P11-zeta14").status == "PASS"
    report(9, ok, f"zeta(1/2)={b.value:.12f} in ({lo:.10f}, {hi:.10f}); integral errs {e_lo:.1e}, {e_hi:.1e}; "
                  f"zeta(1/4) bracket holds={q.holds}")


def test_criterion_10_prop7_products():
    G = catalan_series()
    t = time.perf_counter()
    a = residue_product(ResidueProductSpec(4, {3: "minus"}, 2.0, 10**8))
    b = residue_product(ResidueProductSpec(4, {1: "plus"}, 2.0, 10**8))
    dt = time.perf_counter() - t
    bound_a = a.value * math.expm1(a.log_tail_bound)
    bound_b = b.value * math.expm1(b.log_tail_bound)
    ea, eb = abs(a.value - 8 * G / math.pi**2), abs(b.value - 12 * G / math.pi**2)
    ok = ea < bound_a + 1e-10 and eb < bound_b + 1e-10 and max(bound_a, bound_b) < 2e-9 and dt < 90
    report(10, ok, f"errs {ea:.1e}, {eb:.1e}; tail bounds {bound_a:.1e}, {bound_b:.1e}; sieve pass {dt:.1f} s")


def test_criterion_11_i_minus7():
    r = run_one("P2-I7")
    report(11, r.max_pairwise_diff < 1e-8 and r.status == "PASS",
           f"|I_-7 quadrature - L_-7(2) route| = {r.max_pairwise_diff:.1e}")


def test_criterion_12_prop3():
    lat = run_one("P3-lattice")
    main = run_one("P3")
    target = math.pi**2 / 6 * l_value(-23, 2.0).value
    routes = dict((n, v) for n, v, _ in main.routes)
    series = [v for n, v in routes.items() if "series" in n]
    dilog = [v for n, v in routes.items() if "bloch-wigner" in n]
    e_lat = max(abs(v - target) for n, v, _ in lat.routes)
    e_ser = min(abs(v - target) for v in series)
    ratio = dilog[0] / target if dilog else float("nan")
    ok = e_lat < 1e-6 and e_ser < 1e-9 and bool(dilog)
    report(12, ok, f"lattice err {e_lat:.1e}; sigma_-3 series err {e_ser:.1e}; dilogarithm/target ratio {ratio:.15f}")


def test_criterion_13_prop8():
    worst, factors = 0.0, []
    for k in range(5):
        scale = 4 ** (2 * k + 1)
        audited = run_one(f"P8(k={k})")
        raw = dict((n, v) for n, v, _ in audited.routes)["stieltjes sum"] * scale
        worst = max(worst, abs(raw - scale * beta_odd(k)))
        literal = run_one(f"P8(k={k})", mode="literal")
        factors.append(literal.ratio_diagnostic[1] if literal.ratio_diagnostic else "none")
    report(13, worst < 1e-8, f"max |summatory - 4^(2k+1) L_-4(2k+1)| = {worst:.1e}; literal factors {factors}")


def test_criterion_14_functional_equation():
    worst = 0.0
    for D in (-3, -4, 5, -7, 8, -8, 12):
        for s in (0.25, 0.75, 2.0, 3.0):
            worst = max(worst, abs(l_value(D, 1 - s).value - l_value_via_fe(D, s).value))
    report(14, worst < 1e-9, f"max FE residual {worst:.1e}")


def test_criterion_15_full_audit():
    t = time.perf_counter()
    first = run_all(AuditConfig(mode="both"))
    dt = time.perf_counter() - t
    second = run_all(AuditConfig(mode="both"))
    same = first.to_json() == second.to_json() and first.to_csv() == second.to_csv()
    fails = len(first.failures("audited"))
    s = first.summary
    report(15, dt < 300 and fails == 0 and same,
           f"{dt:.1f} s; audited FAIL={fails}; summary {s}; byte-identical={same}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
