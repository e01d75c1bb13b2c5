"""Identity audit harness.

Every check evaluates one identity by several independent routes and
compares them. In ``literal`` mode the routes use the displayed signs and
prefactors; in ``audited`` mode they use the normalization implied by the
Laurent expansion zeta(s, a) = 1/(s-1) + sum_n (-1)^n gamma_n(a) (s-1)^n / n!.
A disagreement that one constant rescaling (or the (-1)^k sign convention)
removes is reported as MISMATCH_CONST_FACTOR with the measured ratio.
"""

from __future__ import annotations

import csv
import io
import json
import math
import platform
import re
from dataclasses import asdict, dataclass, field
from fnmatch import fnmatchcase
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy as np

__all__ = [
    "MODES",
    "STATUSES",
    "CONVENTION",
    "AuditConfig",
    "CheckResult",
    "Report",
    "ratio_diagnose",
    "check_ids",
    "run_one",
    "run_all",
]

MODES = ("literal", "audited")
STATUSES = ("PASS", "FAIL", "MISMATCH_CONST_FACTOR")
CONVENTION = "(-1)^k-convention"
DEFAULT_TIMESTAMP = "1970-01-01T00:00:00Z"


@dataclass(frozen=True)
class AuditConfig:
    """Knobs shared by all checks. ``mode`` may also be ``both`` for run_all."""

    mode: str = "audited"
    sieve_limit: int = 10**7
    quad_target: float = 1e-13
    n_max: int = 60
    prop_filter: str = "*"
    theta7: float = 2.0 * math.atan(math.sqrt(7.0))
    p3_exponent: str = "sqrt23"
    epstein_radius: int = 2000
    timestamp: str = DEFAULT_TIMESTAMP

    def __post_init__(self):
        if self.mode not in MODES + ("both",):
            raise ValueError(f"mode must be literal, audited or both, got {self.mode!r}")
        if self.sieve_limit < 100:
            raise ValueError("sieve_limit must be at least 100")
        if not 0 < self.quad_target < 1e-6:
            raise ValueError("quad_target must lie in (0, 1e-6)")
        if not 10 <= self.n_max <= 64:
            raise ValueError("n_max must lie in 10..64")
        if self.p3_exponent not in ("sqrt23", "sqrt3"):
            raise ValueError("p3_exponent must be sqrt23 or sqrt3")
        if self.epstein_radius < 2:
            raise ValueError("epstein_radius must be at least 2")


@dataclass(frozen=True)
class CheckResult:
    id: str
    mode: str
    description: str
    location: str
    routes: tuple[tuple[str, float, float], ...]
    max_pairwise_diff: float
    tolerance: float
    status: str
    ratio_diagnostic: tuple[float, str] | None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")

    def to_dict(self) -> dict:
        ratio = None
        if self.ratio_diagnostic is not None:
            ratio = {"measured_ratio": _num(self.ratio_diagnostic[0]), "factor": self.ratio_diagnostic[1]}
        return {
            "id": self.id,
            "mode": self.mode,
            "description": self.description,
            "location": self.location,
            "routes": [{"name": n, "value": _num(v), "err": _num(e)} for n, v, e in self.routes],
            "max_pairwise_diff": _num(self.max_pairwise_diff),
            "tolerance": _num(self.tolerance),
            "status": self.status,
            "ratio_diagnostic": ratio,
            "notes": list(self.notes),
        }


def _num(x: float):
    x = float(x)
    return x if math.isfinite(x) else None


# ------------------------------------------------------ ratio diagnosis ----

@lru_cache(maxsize=32)
def _factor_table(modulus: int | None, max_power: int) -> tuple[tuple[float, str], ...]:
    entries: list[tuple[float, str]] = [(1.0, "1")]
    for j in range(1, 9):
        entries += [(2.0**j, f"2^{j}"), (2.0**-j, f"2^-{j}")]
    if modulus is not None and modulus > 2:
        for j in range(1, max_power + 1):
            entries += [(float(modulus) ** j, f"|D|^{j}"), (float(modulus) ** -j, f"|D|^-{j}")]
    rationals = sorted({Fraction(p, q) for p in range(1, 65) for q in range(1, 65)})
    for j in (1, -1, 2, -2, 3, -3, 4, -4):
        pj = math.pi**j
        for r in rationals:
            tag = f"pi^{j}" if r == 1 else f"pi^{j}*{r}"
            entries.append((pj * r.numerator / r.denominator, tag))
    table: list[tuple[float, str]] = []
    for v, tag in entries:
        for sign, prefix in ((1.0, ""), (-1.0, "-")):
            table.append((sign * v, prefix + tag))
    return tuple(table)


def ratio_diagnose(
    x: float, y: float, modulus: int | None = None, max_power: int = 10, rel: float = 1e-6
) -> str | None:
    """Name the simple factor f with x/y = f to relative ``rel``, if exactly one value fits.

    The dictionary holds +-1, +-2^j (|j| <= 8), +-|D|^j (|j| <= max_power) and
    +-pi^j p/q (1 <= |j| <= 4, 1 <= p, q <= 64). Entries with the same value
    count once, under the simplest name.
    """
    x, y = float(x), float(y)
    if not (math.isfinite(x) and math.isfinite(y)) or x == 0 or y == 0:
        return None
    r = x / y
    hits: list[tuple[float, str]] = []
    for v, tag in _factor_table(modulus, max_power):
        if abs(r - v) <= rel * abs(v):
            if not any(abs(v - h) <= 1e-12 * abs(h) for h, _ in hits):
                hits.append((v, tag))
    return hits[0][1] if len(hits) == 1 else None


# ------------------------------------------------------------- judging ----

@dataclass
class _Eval:
    """What a check builder returns before judging."""

    routes: list[tuple[str, float, float]]
    tolerance: float
    kind: str = "equal"  # or "bounds": routes are (lower, value, upper)
    base: float = 1e-9
    modulus: int | None = None
    alternates: dict[str, float] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)


def _spread(values: list[float]) -> float:
    return max(values) - min(values) if values else 0.0


def _judge(ev: _Eval) -> tuple[float, str, tuple[float, str] | None]:
    values = [v for _, v, _ in ev.routes]
    if ev.kind == "bounds":
        lo, v, hi = values
        violation = max(lo - v, v - hi)
        return max(0.0, violation), ("PASS" if violation < 0 else "FAIL"), None
    diff = _spread(values)
    tol = ev.tolerance
    # the route furthest from the others, and its ratio to their mean
    best = None
    # ties go to the later route: displayed forms are listed last
    for j in reversed(range(len(values))):
        rest = values[:j] + values[j + 1 :]
        if not rest:
            continue
        key = (_spread(rest), -abs(values[j] - math.fsum(rest) / len(rest)))
        if best is None or key < best[0]:
            best = (key, j, rest)
    if best is None:
        return diff, "PASS", None
    _, j, rest = best
    centre = math.fsum(rest) / len(rest)
    ratio = values[j] / centre if centre != 0 else math.inf
    if diff <= tol:
        return diff, "PASS", (ratio, "1")
    if _spread(rest) <= tol:
        name, v, e = ev.routes[j]

        def agrees(new_value, factor):
            routes = list(ev.routes)
            routes[j] = (name, new_value, e / abs(factor))
            return _spread([r[1] for r in routes]) <= _tol(routes, ev.base)

        alt = ev.alternates.get(name)
        if alt is not None and agrees(alt, 1.0):
            return diff, "MISMATCH_CONST_FACTOR", (ratio, CONVENTION)
        tag = ratio_diagnose(v, centre, ev.modulus)
        if tag is not None:
            exact = _factor_value(tag, ev.modulus)
            if exact is not None and agrees(v / exact, exact):
                return diff, "MISMATCH_CONST_FACTOR", (ratio, tag)
        return diff, "FAIL", (ratio, tag or "none")
    return diff, "FAIL", None


def _factor_value(tag: str, modulus: int | None) -> float | None:
    for v, t in _factor_table(modulus, 10):
        if t == tag:
            return v
    return None


# ------------------------------------------------------------- reports ----

@dataclass(frozen=True)
class Report:
    meta: dict
    checks: tuple[CheckResult, ...]

    @property
    def summary(self) -> dict:
        s = {"pass": 0, "fail": 0, "mismatch": 0}
        for c in self.checks:
            s[{"PASS": "pass", "FAIL": "fail"}.get(c.status, "mismatch")] += 1
        return s

    def failures(self, mode: str | None = None) -> list[CheckResult]:
        return [c for c in self.checks if c.status == "FAIL" and (mode is None or c.mode == mode)]

    def to_dict(self) -> dict:
        return {"meta": self.meta, "checks": [c.to_dict() for c in self.checks], "summary": self.summary}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "mode", "status", "route", "value", "err", "max_pairwise_diff",
                    "tolerance", "measured_ratio", "factor"])
        for c in self.checks:
            ratio, tag = c.ratio_diagnostic if c.ratio_diagnostic else ("", "")
            for name, v, e in c.routes:
                w.writerow([c.id, c.mode, c.status, name, repr(float(v)), repr(float(e)),
                            repr(float(c.max_pairwise_diff)), repr(float(c.tolerance)),
                            repr(float(ratio)) if ratio != "" else "", tag])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            head = f"{c.id:<18} {c.mode:<8} {c.status:<22} diff={c.max_pairwise_diff:.3e} tol={c.tolerance:.3e}"
            if c.ratio_diagnostic and c.status != "PASS":
                head += f" ratio={c.ratio_diagnostic[0]:.15g} ({c.ratio_diagnostic[1]})"
            lines.append(head)
            for name, v, e in c.routes:
                lines.append(f"    {name:<28} {v:.15g}  +- {e:.2e}")
            for n in c.notes:
                lines.append(f"    note: {n}")
        s = self.summary
        lines.append(f"summary: pass={s['pass']} fail={s['fail']} mismatch={s['mismatch']}")
        return "\n".join(lines) + "\n"


def _natural_key(s: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)]


# ------------------------------------------------------- route helpers ----

def _imports():
    # deferred so that importing the harness stays cheap
    from . import characters, lfunctions, numerics, primeprod, special, stieltjes, zeta

    return characters, lfunctions, numerics, primeprod, special, stieltjes, zeta


def _chi_terms(D: int) -> list[tuple[int, Fraction]]:
    from .characters import character_table

    t = character_table(D)
    return [(c, Fraction(m, t.modulus)) for m, c in t.support()]


def _terms(q: int, signs: dict[int, int]) -> list[tuple[int, Fraction]]:
    return [(c, Fraction(m, q)) for m, c in sorted(signs.items())]


@lru_cache(maxsize=256)
def _series_cached(terms: tuple, x: float, n_max: int) -> tuple[float, float, float]:
    from .stieltjes import SummatorySpec, summatory_eval

    res = summatory_eval(SummatorySpec(terms, x, n_max))
    s, e = res.partial_sums, res.partial_errors
    # the last increment stands in for the truncation error
    return s[-1], e[-1] + abs(s[-1] - s[-2]), res.closed_form


def _series(terms, x: float, cfg: AuditConfig) -> tuple[float, float, float]:
    """(Stieltjes partial sum S_N, its error bar, closed form) for sum (-x)^n/n! sum c gamma_n(a)."""
    return _series_cached(tuple((int(c), Fraction(a)) for c, a in terms), float(x), cfg.n_max)


@lru_cache(maxsize=64)
def _product_cached(modulus: int, pattern: tuple, s: float, limit: int) -> tuple[float, float]:
    from .primeprod import ResidueProductSpec, residue_product

    r = residue_product(ResidueProductSpec(modulus, dict(pattern), s, limit))
    return r.value, r.log_tail_bound


def _product(cfg: AuditConfig, modulus: int, pattern: dict[int, str], s: float, power: int = 1):
    """(value, error) of a residue-class prime product raised to ``power``."""
    v, lb = _product_cached(modulus, tuple(sorted(pattern.items())), float(s), cfg.sieve_limit)
    v = v**power
    return v, v * math.expm1(power * lb)


def _minus(*residues: int) -> dict[int, str]:
    return {r: "minus" for r in residues}


def _plus(*residues: int) -> dict[int, str]:
    return {r: "plus" for r in residues}


def _L(D: int, s: float) -> tuple[float, float]:
    from .lfunctions import l_value

    v = l_value(D, s)
    return v.value, v.err_estimate


def _zeta(s: float) -> float:
    from .zeta import riemann_zeta

    return riemann_zeta(s)


@lru_cache(maxsize=1)
def _catalan() -> float:
    from .special import catalan_series

    return catalan_series()


def _tol(routes, base: float = 1e-9) -> float:
    """base relative to the route scale (absolute below 1) plus the two largest error bars."""
    scale = max([1.0] + [abs(v) for _, v, _ in routes])
    errs = sorted((e for _, _, e in routes), reverse=True)
    return base * scale + math.fsum(errs[:2])


def _eq(routes, base: float = 1e-9, **kw) -> _Eval:
    routes = [(n, float(v), float(e)) for n, v, e in routes]
    return _Eval(routes, _tol(routes, base), base=base, **kw)


def _quad(f, a, b, cfg: AuditConfig) -> float:
    from .numerics import de_quadrature

    return float(de_quadrature(f, a, b, target_abs_err=cfg.quad_target).value)


# ------------------------------------------------------------- checks ----
# Builders take (config, literal) and return an _Eval.

def _e14a(cfg, literal):
    st, err, closed = _series(_terms(3, {1: 1, 2: -1}), -1.0, cfg)
    return _eq([("stieltjes partial sum", st, err), ("hurwitz closed form", closed, 1e-15),
                ("stated value 1/3", 1.0 / 3.0, 0.0)], modulus=3)


def _e14b(cfg, literal):
    G = _catalan()
    prod, perr = _product(cfg, 4, _minus(3), 2.0)
    pre = math.pi**2 / 8.0
    t = _terms(4, {1: 1, 3: -1})
    plus, plus_err, _ = _series(t, 1.0, cfg)
    routes = [("catalan series", G, 1e-16), ("prime product", pre * prod, pre * perr)]
    alternates = {}
    if literal:
        minus, minus_err, _ = _series(t, -1.0, cfg)
        routes.append(("stieltjes sum", minus / 16.0, minus_err / 16.0))
        alternates["stieltjes sum"] = plus / 16.0
    else:
        routes.append(("stieltjes sum", plus / 16.0, plus_err / 16.0))
    return _eq(routes, modulus=4, alternates=alternates)


def _gamma0_sum(D: int) -> tuple[float, float]:
    from .stieltjes import stieltjes_gamma

    k = abs(D)
    vals = [(c, stieltjes_gamma(0, float(a))) for c, a in _chi_terms(D)]
    return math.fsum(c * v for c, (v, _) in vals) / k, math.fsum(e for _, (_, e) in vals) / k


def _p1a(D):
    def build(cfg, literal):
        g, ge = _gamma0_sum(D)
        L, Le = _L(D, 1.0)
        return _eq([("stieltjes gamma_0 sum", g, ge), ("digamma sum", L, Le)], modulus=abs(D))

    return build


def _p1b(D):
    def build(cfg, literal):
        from .lfunctions import l_one_closed_form

        closed = l_one_closed_form(D, h=1 if D > 0 else None)
        g, ge = _gamma0_sum(D)
        return _eq([("class number formula", closed.value, closed.err_estimate),
                    ("stieltjes gamma_0 sum", g, ge)], modulus=abs(D))

    return build


def _i_minus7(cfg) -> float:
    r7 = math.sqrt(7.0)

    def f(t):
        tt = np.tan(t)
        return np.log(np.abs((tt + r7) / (tt - r7)))

    # logarithmic singularity at arctan sqrt 7 sits on a panel edge
    mid = math.atan(r7)
    total = _quad(f, math.pi / 3.0, mid, cfg) + _quad(f, mid, math.pi / 2.0, cfg)
    return 24.0 / (7.0 * r7) * total


_L2_CLOSED = {
    -4: ("catalan series", _catalan),
    5: ("4 pi^2 / (25 sqrt 5)", lambda: 4.0 * math.pi**2 / (25.0 * math.sqrt(5.0))),
    8: ("pi^2 / (8 sqrt 2)", lambda: math.pi**2 / (8.0 * math.sqrt(2.0))),
    12: ("pi^2 / (6 sqrt 3)", lambda: math.pi**2 / (6.0 * math.sqrt(3.0))),
}


def _p2(D):
    def build(cfg, literal):
        from .lfunctions import l_value_euler

        k = abs(D)
        st, err, closed = _series(_chi_terms(D), 1.0, cfg)
        L, Le = _L(D, 2.0)
        eu = l_value_euler(D, 2.0, cfg.sieve_limit)
        routes = [("stieltjes sum / k^2", st / k**2, err / k**2), ("hurwitz", L, Le),
                  ("euler product", eu.value, eu.err_estimate)]
        if D in _L2_CLOSED:
            name, fn = _L2_CLOSED[D]
            routes.append((name, fn(), 1e-15))
        if D == -7:
            routes.append(("integral I_-7", _i_minus7(cfg), 1e-13))
        return _eq(routes, modulus=k)

    return build


def _p2_i7(cfg, literal):
    L, Le = _L(-7, 2.0)
    return _eq([("integral I_-7", _i_minus7(cfg), 1e-13), ("hurwitz", L, Le)], modulus=7)


def _p2_clausen(cfg, literal):
    from .special import clausen2

    r7 = math.sqrt(7.0)
    st, err, closed = _series(_chi_terms(-7), 1.0, cfg)
    th = cfg.theta7
    cl = 4.0 * (3.0 * clausen2(th) - 3.0 * clausen2(2.0 * th) + clausen2(3.0 * th))
    ev = _eq([("stieltjes sum / sqrt 7", st / r7, err / r7), ("hurwitz closed form / sqrt 7", closed / r7, 1e-14),
              ("clausen combination", cl, 1e-13)], modulus=7)
    ev.notes.append(f"theta7 = {th!r}")
    return ev


# P3 checks: Q(sqrt -23) has the two reduced forms below.
_R23 = math.sqrt(23.0)
_Z23 = ((1 + 1j * _R23) / 2, 2 + 1j * _R23, (3 + 1j * _R23) / 2, (5 + 1j * _R23) / 2, 3 + 1j * _R23)
_Z23_COEF = (21, 7, 1, -3, 1)


def _forms():
    from .zeta import QuadForm

    return QuadForm(1, 1, 6), QuadForm(2, 1, 3)


@lru_cache(maxsize=8)
def _epstein(A: int, B: int, C: int, radius: int) -> tuple[float, float]:
    from .zeta import QuadForm, epstein_partial_zeta

    return epstein_partial_zeta(QuadForm(A, B, C), 2.0, radius)


def _sigma3_tail(exponent: float) -> float:
    from .numerics import divisor_sigma

    terms = []
    for n in range(1, 200):
        t = float(divisor_sigma(-3, n)) * (1.0 + math.pi * n * _R23) * math.exp(-math.pi * n * exponent)
        terms.append(t)
        if t < 1e-20:
            break
    return math.fsum(terms)


def _p3_displayed(exponent: float) -> float:
    """The statement's sigma_{-3} expression, with a choice of exponent."""
    return 1.5 * _zeta(4.0) + 40.0 * math.pi / 23**1.5 * (0.5 * _zeta(3.0) + _sigma3_tail(exponent))


def _p3_per_form(exponent_name: str) -> tuple[float, float]:
    from .zeta import epstein_exponential_series

    f0, f1 = _forms()
    ex = None if exponent_name == "sqrt23" else math.sqrt(3.0)
    return epstein_exponential_series(f0, exponent=ex), epstein_exponential_series(f1, exponent=ex)


def _p3(cfg, literal):
    from .special import bloch_wigner

    L, Le = _L(-23, 2.0)
    z2 = _zeta(2.0)
    target = z2 * L
    bw = 4.0 * math.pi**2 / 3.0 / 23**1.5 * math.fsum(c * bloch_wigner(z) for c, z in zip(_Z23_COEF, _Z23))
    st, err, _ = _series(_chi_terms(-23), 1.0, cfg)
    st, err = st / 23**2, err / 23**2
    notes = []
    for name in ("sqrt23", "sqrt3"):
        a, b = _p3_per_form(name)
        notes.append(f"per-form series with exponent {name}: {a + 2 * b!r} (diff {a + 2 * b - target:.3e})")
    for name, ex in (("sqrt3", math.sqrt(3.0)), ("sqrt23", _R23)):
        v = _p3_displayed(ex)
        notes.append(f"displayed series with exponent {name}: {v!r} (ratio {v / target!r})")
    routes = [("zeta(2) L_-23(2)", target, z2 * Le), ("bloch-wigner volume", bw, 1e-13)]
    if literal:
        routes += [("displayed sigma_-3 series", _p3_displayed(math.sqrt(3.0)), 1e-14),
                   ("stieltjes sum / 23^2", st, err)]
    else:
        a, b = _p3_per_form(cfg.p3_exponent)
        routes += [(f"per-form sigma_-3 series ({cfg.p3_exponent})", a + 2 * b, 1e-14),
                   ("zeta(2) stieltjes sum / 23^2", z2 * st, z2 * err)]
    return _eq(routes, modulus=23, notes=notes)


def _p3_lattice(cfg, literal):
    L, Le = _L(-23, 2.0)
    z2 = _zeta(2.0)
    (v0, t0), (v1, t1) = (_epstein(f.A, f.B, f.C, cfg.epstein_radius) for f in _forms())
    routes = [("epstein lattice sum", v0 + 2 * v1, t0 + 2 * t1), ("zeta(2) L_-23(2)", z2 * L, z2 * Le)]
    return _eq(routes, base=1e-6, modulus=23)


def _p3_partial(index: int):
    def build(cfg, literal):
        f = _forms()[index]
        v, tail = _epstein(f.A, f.B, f.C, cfg.epstein_radius)
        if literal:
            bracket = 0.5 * _zeta(3.0) + _sigma3_tail(math.sqrt(3.0))
            head = _zeta(4.0) if index == 0 else _zeta(4.0) / 4.0
            series = head + (8.0 if index == 0 else 16.0) * math.pi / 23**1.5 + bracket
            name = "displayed partial zeta value"
        else:
            series = _p3_per_form(cfg.p3_exponent)[index]
            name = f"per-form sigma_-3 series ({cfg.p3_exponent})"
        return _eq([("epstein lattice sum", v, tail), (name, series, 1e-14)], base=1e-6, modulus=23)

    return build


_L3_CLOSED = {
    -3: 4.0 * math.pi**3 / (81.0 * math.sqrt(3.0)),
    -4: math.pi**3 / 32.0,
    -7: 32.0 * math.pi**3 / (343.0 * math.sqrt(7.0)),
    -8: 3.0 * math.pi**3 / (64.0 * math.sqrt(2.0)),
}


def _p4(D):
    def build(cfg, literal):
        k = abs(D)
        st, err, _ = _series(_chi_terms(D), 2.0, cfg)
        L, Le = _L(D, 3.0)
        return _eq([("closed form", _L3_CLOSED[D], 1e-15), ("stieltjes sum / k^3", st / k**3, err / k**3),
                    ("hurwitz", L, Le)], modulus=k)

    return build


def _p4_remark(q):
    def build(cfg, literal):
        st, err, closed = _series(_chi_terms(-q), 2.0, cfg)
        pre = q**-2.5
        stated = 4.0 * math.pi**3 / 81.0 if q == 3 else 32.0 * math.pi**3 / 343.0
        return _eq([("stated value", stated, 1e-15), ("stieltjes sum", pre * st, pre * err),
                    ("hurwitz closed form", pre * closed, 1e-14)], modulus=q)

    return build


def _c1(cfg, literal):
    s3, e3, _ = _series(_chi_terms(-3), 2.0, cfg)
    s7, e7, _ = _series(_chi_terms(-7), 2.0, cfg)
    a3 = 81.0 / (4.0 * 3**2.5)
    a7 = 343.0 / (32.0 * 7**2.5)
    return _eq([("pi^3", math.pi**3, 0.0), ("modulus 3 sum", a3 * s3, a3 * e3),
                ("modulus 7 sum", a7 * s7, a7 * e7)])


def _p4_integral(cfg, literal):
    st, err, closed = _series(_terms(3, {1: 1, 2: -1}), 2.0, cfg)

    def complex_form(y):
        w = (3.0 * y + 2j) ** -3 - (3.0 * y + 1j) ** -3
        return (w / np.expm1(2.0 * np.pi * y)).real

    if literal:
        coef, c2 = 456.0, 3.0

        def real_form(y):
            a = (3 * y**2 - 4) / (c2 * y**2 + 4) ** 3 - (3 * y**2 - 1) / (c2 * y**2 + 1) ** 3
            return a * y / np.expm1(2.0 * np.pi * y)
    else:
        coef = 486.0

        def real_form(y):
            a = (3 * y**2 - 4) / (9 * y**2 + 4) ** 3 - (3 * y**2 - 1) / (9 * y**2 + 1) ** 3
            return a * y / np.expm1(2.0 * np.pi * y)

    base = 243.0 / 16.0
    cform = base + 54.0 * _quad(complex_form, 0.0, 10.0, cfg)
    rform = base + coef * _quad(real_form, 0.0, 10.0, cfg)
    return _eq([("stieltjes sum", st, err), ("hurwitz closed form", closed, 1e-13),
                ("complex integral form", cform, 1e-12), (f"real integral form ({coef:g})", rform, 1e-12)],
               modulus=3)


def _tetragamma_integral(s: float, literal: bool, cfg) -> float:
    if literal:
        def f(t):
            return 8.0 * (t * t - s * s) / (t * t + s * s) ** 3 * t / np.expm1(2.0 * np.pi * t)
    else:
        def f(t):
            return 4.0 * t * (t * t - 3.0 * s * s) / (t * t + s * s) ** 3 / np.expm1(2.0 * np.pi * t)
    return -1.0 / s**2 - 1.0 / s**3 + _quad(f, 0.0, 10.0, cfg)


def _p4_tetragamma(cfg, literal):
    from .special import polygamma

    a, b = 2.0 / 3.0, 1.0 / 3.0
    direct = polygamma(2, a) - polygamma(2, b)
    rep = _tetragamma_integral(a, literal, cfg) - _tetragamma_integral(b, literal, cfg)
    return _eq([("polygamma", direct, 1e-12), ("8 pi^3 / 3^(3/2)", 8.0 * math.pi**3 / 3**1.5, 1e-15),
                ("integral representation", rep, 1e-11)], modulus=3)


def _p5(cfg, literal):
    from .special import polygamma

    st, err, _ = _series(_terms(4, {1: 1, 3: -1}), 3.0, cfg)
    L, Le = _L(-4, 4.0)
    closed = polygamma(3, 0.25) / 768.0 - math.pi**4 / 96.0
    return _eq([("stieltjes sum / 4^4", st / 256.0, err / 256.0), ("hurwitz", L, Le),
                ("tetragamma' closed form", closed, 1e-13)], modulus=4)


def _p5_reflection(cfg, literal):
    from .special import polygamma

    z = 0.25
    a, b = polygamma(3, 1.0 - z), polygamma(3, z)
    trig = 2.0 * math.pi**4 * (2.0 + math.cos(2.0 * math.pi * z)) / math.sin(math.pi * z) ** 4
    if literal:
        routes = [("psi'''(1-z) - psi'''(z)", a - b, 1e-10), ("-2 pi^4 (2 + cos 2 pi z) csc^4", -trig, 1e-12)]
    else:
        routes = [("psi'''(1-z) + psi'''(z)", a + b, 1e-10), ("2 pi^4 (2 + cos 2 pi z) csc^4", trig, 1e-12)]
    ev = _eq(routes, modulus=4)
    ev.notes.append("z = 1/4")
    return ev


def _until_small(term: Callable[[int], float], limit: int = 10) -> tuple[float, int]:
    """Sum term(1), term(2), ... stopping once a term drops below 1e-16."""
    out = []
    for n in range(1, limit + 1):
        t = term(n)
        out.append(t)
        if abs(t) < 1e-16:
            break
    return math.fsum(out), len(out)


def _gamma1_diff(a: float, b: float) -> tuple[float, float]:
    from .stieltjes import stieltjes_gamma

    (va, ea), (vb, eb) = stieltjes_gamma(1, a), stieltjes_gamma(1, b)
    return va - vb, ea + eb


def _sierpinski_closed() -> float:
    from .special import EULER_GAMMA, log_gamma

    return math.log(2.0 * math.pi) + 2.0 * EULER_GAMMA + 2.0 * (log_gamma(0.75) - log_gamma(0.25))


def _p6a(cfg, literal):
    from .special import EULER_GAMMA

    d, e = _gamma1_diff(0.75, 0.25)
    tail, n = _until_small(lambda l: 1.0 / (l * math.expm1(2.0 * math.pi * l)))
    series = math.pi**2 / 3.0 + math.pi * EULER_GAMMA + 4.0 * math.pi * tail
    closed = math.pi * (_sierpinski_closed() - EULER_GAMMA + math.log(4.0))
    ev = _eq([("stieltjes gamma_1 difference", d, e), ("kronecker limit series", series, 1e-14),
              ("log-gamma closed form", closed, 1e-14)], modulus=4)
    ev.notes.append(f"series terms used: {n}")
    return ev


def _p6b(cfg, literal):
    from .special import EULER_GAMMA, log_gamma

    d, e = _gamma1_diff(2.0 / 3.0, 1.0 / 3.0)
    r3 = math.sqrt(3.0)
    tail, n = _until_small(lambda l: (-1) ** l / l / ((-1) ** l - math.exp(r3 * math.pi * l)))
    series = math.pi / r3 * (math.pi / (2.0 * r3) + EULER_GAMMA - 4.0 * tail)
    g3 = math.log(2.0 * math.pi) + 2.0 * EULER_GAMMA + 3.0 * (log_gamma(2.0 / 3.0) - log_gamma(1.0 / 3.0))
    closed = math.pi / r3 * (g3 - EULER_GAMMA + math.log(3.0))
    ev = _eq([("stieltjes gamma_1 difference", d, e), ("kronecker limit series", series, 1e-14),
              ("log-gamma closed form", closed, 1e-14)], modulus=3)
    ev.notes.append(f"series terms used: {n}")
    return ev


def _l_over(D: int, s: float, scale: float) -> tuple[str, float, float]:
    L, Le = _L(D, s)
    return ("hurwitz L-value", scale * L, abs(scale) * Le)


def _p7a1(cfg, literal):
    prod, perr = _product(cfg, 3, _plus(1), 2.0)
    st, err, closed = _series(_terms(3, {1: 1, 2: -1}), 1.0, cfg)
    pre = 3.0 / (2.0 * math.pi**2)
    return _eq([("prime product", prod, perr), ("stieltjes sum", pre * st, pre * err),
                ("hurwitz closed form", pre * closed, 1e-14),
                _l_over(-3, 2.0, 27.0 / (2.0 * math.pi**2))], modulus=3)


def _p7a2(cfg, literal):
    prod, perr = _product(cfg, 3, _minus(2), 2.0)
    st, err, closed = _series(_terms(3, {1: 1, 2: -1}), 1.0, cfg)
    pre = 1.0 / 9.0 if literal else 1.0 / (9.0 * math.pi**2)
    lhs = 4.0 / 27.0
    return _eq([("stieltjes sum", pre * st, pre * err), ("hurwitz closed form", pre * closed, 1e-14),
                ("prime product", lhs * prod, lhs * perr)], modulus=3)


def _p7b1(cfg, literal):
    prod, perr = _product(cfg, 4, _plus(1), 2.0)
    return _eq([("12 G / pi^2", 12.0 * _catalan() / math.pi**2, 1e-15),
                _l_over(-4, 2.0, 12.0 / math.pi**2), ("prime product", prod, perr)], modulus=4)


def _p7b2(cfg, literal):
    prod, perr = _product(cfg, 4, _plus(1), 2.0)
    t = _terms(4, {1: 1, 3: -1})
    plus, plus_err, _ = _series(t, 1.0, cfg)
    routes = [("12 G / pi^2", 12.0 * _catalan() / math.pi**2, 1e-15), ("prime product", prod, perr)]
    alternates = {}
    if literal:
        pre = 4.0 / (3.0 * math.pi**2)
        minus, minus_err, _ = _series(t, -1.0, cfg)
        routes.append(("stieltjes sum", pre * minus, pre * minus_err))
        alternates["stieltjes sum"] = pre * plus
    else:
        pre = 3.0 / (4.0 * math.pi**2)
        routes.append(("stieltjes sum", pre * plus, pre * plus_err))
    return _eq(routes, modulus=4, alternates=alternates)


def _p7b3(cfg, literal):
    prod, perr = _product(cfg, 4, _plus(3), 2.0)
    return _eq([("pi^2 / (8 G)", math.pi**2 / (8.0 * _catalan()), 1e-15), ("prime product", prod, perr)],
               modulus=4)


_CHI5 = {1: 1, 2: -1, 3: -1, 4: 1}


def _p7c1(cfg, literal):
    from .primeprod import euler_product_ratio

    prod, perr = _product(cfg, 5, _minus(2, 3), 2.0)
    return _eq([("1 / sqrt 5", 1.0 / math.sqrt(5.0), 1e-16), ("prime product", prod, perr),
                ("L_5(2) / (zeta(2) (1 - 5^-2))", euler_product_ratio(5, 2.0), 1e-14)], modulus=5)


def _p7c2(cfg, literal):
    prod, perr = _product(cfg, 5, _minus(2, 3), 2.0)
    st, err, closed = _series(_terms(5, _CHI5), 1.0, cfg)
    pre = 1.0 if literal else 1.0 / (4.0 * math.pi**2)
    return _eq([("prime product", prod, perr), ("stieltjes sum", pre * st, pre * err),
                ("hurwitz closed form", pre * closed, 1e-14)], modulus=5)


def _p7c3(cfg, literal):
    prod, perr = _product(cfg, 5, _minus(2, 3), 3.0)
    z3 = (124.0 / 125.0) * _zeta(3.0)
    if literal:
        return _eq([("(124/125) zeta(3)", z3, 1e-15), ("prime product", prod, perr)], modulus=5)
    return _eq([("(124/125) zeta(3) x prime product", z3 * prod, z3 * perr), _l_over(5, 3.0, 1.0)], modulus=5)


def _p7c4(cfg, literal):
    prod, perr = _product(cfg, 5, _minus(2, 3), 3.0)
    st, err, closed = _series(_terms(5, _CHI5), 2.0, cfg)
    z3 = 1.0 if literal else (124.0 / 125.0) * _zeta(3.0)
    name = "prime product" if literal else "(124/125) zeta(3) x prime product"
    return _eq([("stieltjes sum / 125", st / 125.0, err / 125.0), ("hurwitz closed form / 125", closed / 125.0, 1e-14),
                (name, z3 * prod, z3 * perr)], modulus=5)


def _p7c5(cfg, literal):
    from .special import polygamma

    st, err, closed = _series(_terms(5, _CHI5), 2.0, cfg)
    combo = math.fsum([polygamma(2, 0.4), -polygamma(2, 0.2), polygamma(2, 0.6), -polygamma(2, 0.8)])
    pre = 1.0 / 125.0 if literal else 1.0 / 250.0
    return _eq([("stieltjes sum / 125", st / 125.0, err / 125.0), ("hurwitz closed form / 125", closed / 125.0, 1e-14),
                ("psi'' combination", pre * combo, pre * 1e-11)], modulus=5)


def _p7d1(cfg, literal):
    prod, perr = _product(cfg, 8, _minus(5, 7), 3.0)
    st, err, closed = _series(_terms(8, {1: 1, 3: 1, 5: -1, 7: -1}), 2.0, cfg)
    pre = 7.0 / 8.0 * _zeta(3.0)
    return _eq([("3 pi^3 / (64 sqrt 2)", 3.0 * math.pi**3 / (64.0 * math.sqrt(2.0)), 1e-15),
                ("(7/8) zeta(3) x prime product", pre * prod, pre * perr),
                ("stieltjes sum / 8^3", st / 512.0, err / 512.0), ("hurwitz closed form / 8^3", closed / 512.0, 1e-14),
                _l_over(-8, 3.0, 1.0)], modulus=8)


def _p7d2(cfg, literal):
    prod, perr = _product(cfg, 8, _minus(3, 5), 2.0)
    st, err, closed = _series(_terms(8, {1: 1, 3: -1, 5: -1, 7: 1}), 1.0, cfg)
    pre = 6.0 * _zeta(2.0)
    return _eq([("pi^2 / sqrt 2", math.pi**2 / math.sqrt(2.0), 1e-15),
                ("6 zeta(2) x prime product", pre * prod, pre * perr),
                ("stieltjes sum / 8", st / 8.0, err / 8.0), ("hurwitz closed form / 8", closed / 8.0, 1e-14),
                _l_over(8, 2.0, 8.0)], modulus=8)


def _p7e1(cfg, literal):
    sq, sqerr = _product(cfg, 8, _minus(7), 2.0, power=2)
    st, err, closed = _series(_terms(8, {1: 1, 3: 1, 5: -1, 7: -1}), 1.0, cfg)
    pre = 1.0 if literal else 1.0 / 64.0
    rhs = 45.0 / 32.0 * _zeta(4.0) / (math.sqrt(2.0) * _catalan())
    return _eq([("stieltjes sum", pre * st, pre * err), ("hurwitz closed form", pre * closed, 1e-14),
                ("squared prime product", rhs * sq, rhs * sqerr)], modulus=8)


def _p7e2(cfg, literal):
    sq, sqerr = _product(cfg, 8, _minus(7), 3.0, power=2)
    st, err, closed = _series(_terms(8, {1: 1, 3: -1, 5: -1, 7: 1}), 2.0, cfg)
    c = 3.0 * math.pi**6 / (1792.0 * math.sqrt(2.0) * _zeta(3.0))
    if literal:
        routes = [("stieltjes sum", st, err), ("hurwitz closed form", closed, 1e-12),
                  ("squared prime product", c * sq, c * sqerr)]
    else:
        v = c / sq
        routes = [("stieltjes sum / 8^3", st / 512.0, err / 512.0), ("hurwitz closed form / 8^3", closed / 512.0, 1e-14),
                  ("reciprocal squared prime product", v, v * sqerr / sq), _l_over(8, 3.0, 1.0)]
    return _eq(routes, modulus=8)


def _p8(k):
    def build(cfg, literal):
        from .lfunctions import beta_odd

        st, err, closed = _series(_terms(4, {1: 1, 3: -1}), 2.0 * k, cfg)
        pre = 1.0 if literal else 4.0 ** -(2 * k + 1)
        routes = [("euler-number closed form", beta_odd(k), 1e-15 * beta_odd(k)),
                  ("stieltjes sum", pre * st, pre * err), ("hurwitz closed form", pre * closed, pre * 1e-14 * abs(closed))]
        if not literal:
            routes.append(_l_over(-4, 2.0 * k + 1.0, 1.0))
        return _eq(routes, modulus=4)

    return build


def _j2_quadrature(cfg) -> float:
    def f(u):
        # ln u / cosh u without overflow
        e = np.exp(-u)
        return np.log(u) * 2.0 * e / (1.0 + e * e)

    return 0.5 * _quad(f, 0.0, math.inf, cfg)


def _j2_series(b: float, literal: bool, cfg) -> tuple[float, int]:
    from .special import euler_number

    lb = math.log(b)
    terms = []
    fact = Fraction(1)
    for k in range(1, 200):
        fact *= (2 * k) * (2 * k + 1)
        c = float(Fraction(euler_number(2 * k)) / fact) * b ** (2 * k + 1)
        bracket = lb - (b if literal else 1.0) / (2 * k + 1)
        terms.append(c * bracket)
        if abs(c) < 1e-18:
            break

    def tail(u):
        e = np.exp(-u)
        return np.log(u) * 2.0 * e / (1.0 + e * e)

    head = 0.5 * math.fsum(terms) + 0.5 * b * (lb - 1.0)
    return head + 0.5 * _quad(tail, b, math.inf, cfg), len(terms)


def _p9(cfg, literal):
    from .lfunctions import euler_kronecker
    from .special import EULER_GAMMA

    d, e = _gamma1_diff(0.75, 0.25)
    j2 = _j2_quadrature(cfg)
    return _eq([("log-gamma closed form", _sierpinski_closed(), 1e-15),
                ("gamma_1 difference", EULER_GAMMA - math.log(4.0) + d / math.pi, e / math.pi),
                ("euler-kronecker via L'(1)", euler_kronecker(-4), 1e-12),
                ("2 gamma + (4/pi) J_2", 2.0 * EULER_GAMMA + 4.0 / math.pi * j2, 1e-13),
                ("stated 0.8228252496", 0.8228252496, 5e-11)], modulus=4)


def _p9_series(cfg, literal):
    routes = [("J_2 quadrature", _j2_quadrature(cfg), 1e-14)]
    notes = []
    for b in (0.3, 0.7, 1.0, 1.4):
        v, n = _j2_series(b, literal, cfg)
        routes.append((f"euler-number series b={b:g}", v, 1e-14))
        notes.append(f"b={b:g}: {n} series terms")
    return _eq(routes, notes=notes)


def _p10(p):
    def build(cfg, literal):
        from .lfunctions import selberg_chowla_half, selberg_chowla_series
        from .zeta import zeta_crit_strip

        with _quiet():
            lhs, rhs = selberg_chowla_half(p, divisor_power=1 if literal else 0)
        _, n = selberg_chowla_series(p, 1 if literal else 0)
        z = zeta_crit_strip(0.5)
        st, err, closed = _series(_chi_terms(-p), -0.5, cfg)
        r = math.sqrt(p)
        ev = _eq([("zeta(1/2) L_-p(1/2)", lhs, 1e-13), ("bessel series", rhs, 1e-14),
                  ("stieltjes sum", z * st / r, abs(z) * err / r)], modulus=p)
        ev.notes.append(f"bessel terms used: {n}; divisor function sigma_{1 if literal else 0}")
        return ev

    return build


class _quiet:
    def __enter__(self):
        import warnings

        self._cm = warnings.catch_warnings()
        self._cm.__enter__()
        warnings.simplefilter("ignore")

    def __exit__(self, *exc):
        return self._cm.__exit__(*exc)


def _p10_zeta_half(cfg, literal):
    from .zeta import hurwitz_zeta, zeta_crit_strip

    st, err, _ = _series([(1, Fraction(1))], -0.5, cfg)
    z = zeta_crit_strip(0.5)
    ev = _eq([("integral representation", z, 1e-13), ("euler-maclaurin", hurwitz_zeta(0.5, 1.0), 1e-13),
              ("-2 + stieltjes sum", -2.0 + st, err)])
    ev.notes.append(f"stated approximation -1.46035 differs by {z + 1.46035:.2e}")
    return ev


def _p10_madelung(cfg, literal):
    from .lfunctions import madelung_m2, madelung_m2_stieltjes
    from .zeta import hurwitz_zeta

    L, Le = _L(-4, 0.5)
    em = 4.0 * (math.sqrt(2.0) - 1.0) * hurwitz_zeta(0.5, 1.0) * L
    return _eq([("integral zeta(1/2) x hurwitz L", madelung_m2(), 1e-12),
                ("euler-maclaurin zeta(1/2) x hurwitz L", em, 1e-12),
                ("stieltjes sum", madelung_m2_stieltjes(cfg.n_max), 1e-10)], modulus=4)


def _bounds(lo, v, hi, name):
    return _Eval([("lower bound", lo, 0.0), (name, v, 1e-13), ("upper bound", hi, 0.0)], 0.0, kind="bounds")


def _p11(cfg, literal):
    from .zeta import zeta_crit_strip

    return _bounds(-1.5 + 1.0 / (15.0 * math.sqrt(5.0)), zeta_crit_strip(0.5), -35.0 / 24.0, "zeta(1/2)")


def _p11_lower(cfg, literal):
    from .zeta import crit_strip_bounds

    b = crit_strip_bounds(0.5)
    return _eq([("stated 1/2 (1 + 2/(15 sqrt 5))", 0.5 * (1.0 + 2.0 / (15.0 * math.sqrt(5.0))), 1e-16),
                ("beta-integral evaluation", b.lower_integral, 1e-15), ("quadrature", b.lower_quad, 1e-13)])


def _p11_upper(cfg, literal):
    from .zeta import crit_strip_bounds

    b = crit_strip_bounds(0.5)
    routes = [("stated 13/24", 13.0 / 24.0, 1e-16)]
    if literal:
        def f(t):
            return t**-0.5 * (1.0 / (1.0 + t) + 1.0 / (6.0 * (1.0 + t) ** 2))

        routes.append(("quadrature of displayed integrand", _quad(f, 0.0, math.inf, cfg) / math.pi, 1e-13))
    else:
        routes += [("beta-integral evaluation", b.upper_integral, 1e-15), ("quadrature", b.upper_quad, 1e-13)]
    return _eq(routes)


def _p11_zeta14(cfg, literal):
    from .zeta import crit_strip_bounds, zeta_crit_strip

    lo = -5.0 / 6.0 + 1.0 / (math.sqrt(2.0) * 30.0 * 5**0.25)
    ev = _bounds(lo, zeta_crit_strip(0.25), -13.0 / 16.0, "zeta(1/4)")
    b = crit_strip_bounds(0.25)
    ev.notes.append(f"bounds from the two-sided digamma estimates: ({b.lower!r}, {b.upper!r})")
    return ev


def _p11_zeta14_series(cfg, literal):
    from .zeta import hurwitz_zeta, zeta_crit_strip

    st, err, _ = _series([(1, Fraction(1))], -0.75, cfg)
    return _eq([("integral representation", zeta_crit_strip(0.25), 1e-13),
                ("euler-maclaurin", hurwitz_zeta(0.25, 1.0), 1e-13), ("-4/3 + stieltjes sum", -4.0 / 3.0 + st, err)])


def _p11_reflection(cfg, literal):
    from .zeta import hurwitz_zeta, zeta_crit_strip

    c = math.sqrt(2.0 + math.sqrt(2.0)) * math.gamma(0.25) / (2.0 * math.pi) ** 0.25
    return _eq([("zeta(3/4) integral representation", zeta_crit_strip(0.75), 1e-13),
                ("zeta(3/4) euler-maclaurin", hurwitz_zeta(0.75, 1.0), 1e-13),
                ("reflection from zeta(1/4)", c * zeta_crit_strip(0.25), 1e-12)])


def _p11_zetaprime(cfg, literal):
    from .lfunctions import zeta_prime_half_routes
    from .zeta import hurwitz_zeta_ds

    w, s, q = zeta_prime_half_routes(cfg.n_max - 1)
    return _eq([("log-weighted integral / pi", w, 1e-12), ("stieltjes sum", s, 1e-10),
                ("complex-log integral", q, 1e-12), ("-4 - zeta'(1/2)", -4.0 - hurwitz_zeta_ds(0.5, 1.0), 1e-12)])


# ------------------------------------------------------------ registry ----

@dataclass(frozen=True)
class _Check:
    id: str
    description: str
    location: str
    build: Callable


def _catalog() -> list[_Check]:
    c = []

    def add(i, d, loc, b):
        c.append(_Check(i, d, loc, b))

    add("E14a", "sum_k [gamma_k(1/3) - gamma_k(2/3)]/k! = 1/3", "Introduction, first summatory example", _e14a)
    add("E14b", "G = (pi^2/8) prod_{p=3 mod 4} (p^2-1)/(p^2+1) = (1/16) sum_k [gamma_k(1/4) - gamma_k(3/4)]/k!",
        "Introduction, Catalan example", _e14b)
    for D in (-3, -4, -7, -8, -11, -23, 5, 8, 12):
        add(f"P1a(D={D})", f"L_{D}(1) as a character sum of gamma_0 values", "Proposition 1(a)", _p1a(D))
        add(f"P1b(D={D})", f"L_{D}(1) from the class number formula", "Proposition 1(b)", _p1b(D))
    for D in (-3, -4, -7, -8, 5, 8, 12):
        add(f"P2(D={D})", f"L_{D}(2) as |D|^-2 sum_n (-1)^n/n! sum chi gamma_n", "Proposition 2", _p2(D))
    add("P2-I7", "L_-7(2) equals the integral I_-7", "Proposition 2, integral for L_-7(2)", _p2_i7)
    add("P2-clausen", "Stieltjes sum for L_-7(2) against a Clausen combination at theta7",
        "Proposition 2, remark after the proof", _p2_clausen)
    add("P3", "Dedekind zeta of Q(sqrt -23) at 2: sigma_-3 series, dilogarithm volume, Stieltjes sum",
        "Proposition 3", _p3)
    add("P3-lattice", "zeta_0(2) + 2 zeta_1(2) by direct lattice sums", "Proposition 3, proof", _p3_lattice)
    add("P3-partial0", "zeta_0(2) for the form (1,1,6)", "Proposition 3, proof", _p3_partial(0))
    add("P3-partial1", "zeta_1(2) for the form (2,1,3)", "Proposition 3, proof", _p3_partial(1))
    for D in (-3, -4, -7, -8):
        add(f"P4(D={D})", f"L_{D}(3) as |D|^-3 sum_n (-2)^n/n! sum chi gamma_n", "Proposition 4", _p4(D))
    add("P4-remark3", "4 pi^3/81 = 3^(-5/2) sum_n (-2)^n/n! [gamma_n(1/3) - gamma_n(2/3)]",
        "Proposition 4, remark", _p4_remark(3))
    add("P4-remark7", "32 pi^3/343 = 7^(-5/2) sum_n (-2)^n/n! sum chi_-7 gamma_n", "Proposition 4, remark",
        _p4_remark(7))
    add("C1", "two Stieltjes-sum expressions for pi^3", "Corollary 1", _c1)
    add("P4-integral", "sum_k (-2)^k/k! [gamma_k(1/3) - gamma_k(2/3)] from the integral representation",
        "Proposition 4, integral representation example", _p4_integral)
    add("P4-tetragamma", "psi''(2/3) - psi''(1/3) from an integral representation of psi''",
        "Proposition 4, tetragamma representation", _p4_tetragamma)
    add("P5", "4^-4 sum_n (-3)^n/n! [gamma_n(1/4) - gamma_n(3/4)] = psi'''(1/4)/768 - pi^4/96",
        "Proposition 5", _p5)
    add("P5-reflection", "reflection formula for psi'''", "Proposition 5, proof", _p5_reflection)
    add("P6a", "gamma_1(3/4) - gamma_1(1/4) by a Kronecker limit series", "Proposition 6(a)", _p6a)
    add("P6b", "gamma_1(2/3) - gamma_1(1/3) by a Kronecker limit series", "Proposition 6(b)", _p6b)
    add("P7a-1", "prod_{p=1 mod 3} (p^2+1)/(p^2-1) = (3/(2 pi^2)) x Stieltjes sum", "Proposition 7(a)", _p7a1)
    add("P7a-2", "(4/27) prod_{p=2 mod 3} (p^2-1)/(p^2+1) = (1/9) x Stieltjes sum", "Proposition 7(a)", _p7a2)
    add("P7b-1", "prod_{p=1 mod 4} (p^2+1)/(p^2-1) = 12 G/pi^2", "Proposition 7(b)", _p7b1)
    add("P7b-2", "12 G/pi^2 = (4/(3 pi^2)) sum_k [gamma_k(1/4) - gamma_k(3/4)]/k!", "Proposition 7(b)", _p7b2)
    add("P7b-3", "prod_{p=3 mod 4} (p^2+1)/(p^2-1) = pi^2/(8 G)", "Proposition 7(b), proof", _p7b3)
    add("P7c-1", "1/sqrt 5 = prod_{p=2,3 mod 5} (p^2-1)/(p^2+1)", "Proposition 7(c)", _p7c1)
    add("P7c-2", "prod_{p=2,3 mod 5} (p^2-1)/(p^2+1) = Stieltjes sum at x=1", "Proposition 7(c)", _p7c2)
    add("P7c-3", "(124/125) zeta(3) = prod_{p=2,3 mod 5} (p^3-1)/(p^3+1)", "Proposition 7(c)", _p7c3)
    add("P7c-4", "prod_{p=2,3 mod 5} (p^3-1)/(p^3+1) = (1/125) x Stieltjes sum at x=2", "Proposition 7(c)", _p7c4)
    add("P7c-5", "(1/125) x Stieltjes sum at x=2 = (1/125) psi'' combination", "Proposition 7(c)", _p7c5)
    add("P7d-1", "3 pi^3/(64 sqrt 2) = (7/8) zeta(3) prod_{p=5,7 mod 8} = 8^-3 x Stieltjes sum",
        "Proposition 7(d)", _p7d1)
    add("P7d-2", "pi^2/sqrt 2 = 6 zeta(2) prod_{p=3,5 mod 8} = (1/8) x Stieltjes sum", "Proposition 7(d)", _p7d2)
    add("P7e-1", "chi_-8 Stieltjes sum at x=1 against a squared product over p=7 mod 8", "Proposition 7(e)", _p7e1)
    add("P7e-2", "chi_8 Stieltjes sum at x=2 against a squared product over p=7 mod 8", "Proposition 7(e)", _p7e2)
    for k in range(5):
        add(f"P8(k={k})", f"L_-4({2 * k + 1}) from Euler numbers against the Stieltjes sum at x={2 * k}",
            "Proposition 8", _p8(k))
    add("P9", "Sierpinski's constant by five routes", "Proposition 9", _p9)
    add("P9-series", "Euler-number series for J_2 is independent of b", "Proposition 9, series for J_2", _p9_series)
    for p in (11, 19, 43, 67):
        add(f"P10(p={p})", f"zeta(1/2) L_-{p}(1/2) by a Bessel series and a Stieltjes sum", "Proposition 10",
            _p10(p))
    add("P10-zeta-half", "zeta(1/2) = -2 + sum_n gamma_n/(2^n n!)", "Proposition 10, remarks", _p10_zeta_half)
    add("P10-madelung", "Madelung constant M_2 by three routes", "Proposition 10, remarks", _p10_madelung)
    add("P11", "-3/2 + 1/(15 sqrt 5) < zeta(1/2) < -35/24", "Proposition 11", _p11)
    add("P11-lower", "lower bracketing integral equals (1/2)(1 + 2/(15 sqrt 5))", "Proposition 11, proof", _p11_lower)
    add("P11-upper", "upper bracketing integral equals 13/24", "Proposition 11, proof", _p11_upper)
    add("P11-zeta14", "-5/6 + 1/(30 sqrt 2 5^(1/4)) < zeta(1/4) < -13/16", "Proposition 11, remarks", _p11_zeta14)
    add("P11-zeta14-series", "zeta(1/4) = -4/3 + sum_n (3/4)^n gamma_n/n!", "Proposition 11, remarks",
        _p11_zeta14_series)
    add("P11-reflection", "zeta(3/4) from zeta(1/4) by the functional equation", "Proposition 11, remarks",
        _p11_reflection)
    add("P11-zetaprime", "three expressions for -4 - zeta'(1/2)", "Proposition 11, remarks", _p11_zetaprime)
    return c


_CATALOG = {chk.id: chk for chk in _catalog()}


def check_ids(pattern: str = "*") -> list[str]:
    """Known check ids matching a glob, in report order."""
    return sorted((i for i in _CATALOG if fnmatchcase(i, pattern)), key=_natural_key)


def check_locations() -> dict[str, str]:
    return {i: c.location for i, c in _CATALOG.items()}


def run_one(check_id: str, config: AuditConfig | None = None, mode: str | None = None) -> CheckResult:
    """Evaluate one check in ``mode`` (default: the config's mode, which must not be ``both``)."""
    config = config or AuditConfig()
    mode = mode or config.mode
    if mode not in MODES:
        raise ValueError(f"run_one needs mode literal or audited, got {mode!r}")
    try:
        chk = _CATALOG[check_id]
    except KeyError:
        raise KeyError(f"unknown check id {check_id!r}") from None
    literal = mode == "literal"
    try:
        ev = chk.build(config, literal)
    except Exception as exc:  # a broken route is a failed check, not a crashed suite
        return CheckResult(check_id, mode, chk.description, chk.location, (), math.inf, 0.0, "FAIL", None,
                           (f"error: {type(exc).__name__}: {exc}",))
    diff, status, ratio = _judge(ev)
    return CheckResult(
        id=check_id,
        mode=mode,
        description=chk.description,
        location=chk.location,
        routes=tuple(ev.routes),
        max_pairwise_diff=diff,
        tolerance=ev.tolerance,
        status=status,
        ratio_diagnostic=ratio,
        notes=tuple(ev.notes),
    )


def _versions() -> dict:
    from . import __version__

    return {"zetaaudit": __version__, "python": platform.python_version(), "numpy": np.__version__}


def run_all(config: AuditConfig | None = None) -> Report:
    """Every check matching the config's filter, in id order (literal before audited for ``both``)."""
    config = config or AuditConfig()
    modes = MODES if config.mode == "both" else (config.mode,)
    results = [run_one(i, config, m) for i in check_ids(config.prop_filter) for m in modes]
    cfg = asdict(config)
    meta = {"mode": config.mode, "config": cfg, "timestamp": config.timestamp, "versions": _versions()}
    return Report(meta, tuple(results))
