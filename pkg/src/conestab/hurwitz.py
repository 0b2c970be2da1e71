"""Hurwitz-stability deciders and degree-gated sufficient criteria.

Four complete deciders (leading-minor test, four alternating-chain
variants, interlacing of the compressed even/odd parts, and recursive
degree reduction) are cross-checked against a companion-matrix root
oracle.  The sufficient criteria (strict weighted Newton inequalities for
d <= 4, the quintic cross inequality, and the alpha-ratio tests) report
"holds"/"fails" about their own hypotheses only; a failed criterion says
nothing about stability.

Polynomials are normalized to a positive leading coefficient before any
test (negating all coefficients leaves the root set unchanged).  With a
positive leading coefficient, strictly positive coefficients are necessary
for stability, so a nonpositive coefficient refutes outright.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NonConvergence, WrongDegree, ZeroPolynomial
from .numerics import (DEFAULT_TOL, SquareMatrix, Tolerance, all_roots,
                       exact_div, leading_minors)
from .sequences import quintic_cross_inequality
from .unipoly import UniPoly, hb_parts
from .verdict import (FAILS, HOLDS, UNKNOWN, InequalityLedger, Verdict,
                      combine_verdicts)


def hurwitz_matrix(p: UniPoly) -> SquareMatrix:
    """The d x d matrix with entry (i, j) = a_{2j-i} (1-based indices),
    missing coefficients read as zero."""
    if p.is_zero or p.degree < 1:
        raise ZeroPolynomial("Hurwitz matrix needs degree >= 1")
    d = p.degree
    return SquareMatrix.from_rows(
        [[p.coeff(2 * (j + 1) - (i + 1)) for j in range(d)] for i in range(d)])


def _positive_leading(p: UniPoly) -> UniPoly:
    if p.is_zero:
        raise ZeroPolynomial("stability is undefined for the zero polynomial")
    lead = p.leading
    return p.scale(-1) if lead < 0 else p


def _minor_scales(H: SquareMatrix) -> list:
    """Hadamard bounds of the leading blocks; |Delta_k| never exceeds them,
    so Delta_k / scale_k is a margin in [-1, 1]."""
    A = H.to_numpy()
    scales = []
    for k in range(1, H.n + 1):
        prod = 1.0
        for i in range(k):
            prod *= float(np.linalg.norm(A[i, :k]))
        scales.append(max(prod, 1.0))
    return scales


def _minor_data(p: UniPoly):
    H = hurwitz_matrix(p)
    return H, leading_minors(H), _minor_scales(H)


def _require_positive_coeffs(led: InequalityLedger, p: UniPoly) -> bool:
    ok = True
    for k, a in enumerate(p.coeffs):
        ok = led.require(a, 0, witness=("coefficient", k), strict=True) and ok
    return ok


def routh_hurwitz_stable(p: UniPoly, tol: Tolerance = DEFAULT_TOL,
                         minor_data=None) -> Verdict:
    """Stability via positive coefficients plus positive leading principal
    minors Delta_1..Delta_{d-1}; exact when the coefficients are rational."""
    p = _positive_leading(p)
    led = InequalityLedger(tol)
    if not _require_positive_coeffs(led, p):
        return led.verdict()
    _, minors, scales = minor_data if minor_data is not None else _minor_data(p)
    for k in range(p.degree - 1):
        if not led.require(minors[k], 0, witness=("minor", k + 1),
                           strict=True, scale=scales[k]):
            break
    return led.verdict()


def lienard_chipart_stable(p: UniPoly, variant: int = 1,
                           tol: Tolerance = DEFAULT_TOL,
                           minor_data=None) -> Verdict:
    """Alternating-chain refinement of the minor test.

    With a_0 > 0, each variant needs only every other coefficient from the
    top (variants 1-2: a_d, a_{d-2}, ...; variants 3-4: a_d, a_{d-1},
    a_{d-3}, ...) plus every other leading minor (odd indices for variants
    1 and 3, even for 2 and 4).
    """
    if variant not in (1, 2, 3, 4):
        raise ValueError("variant must be 1..4")
    p = _positive_leading(p)
    d = p.degree
    if d < 1:
        raise ZeroPolynomial("stability needs degree >= 1")
    led = InequalityLedger(tol)
    led.require(p.coeff(0), 0, witness=("coefficient", 0), strict=True)
    if variant in (1, 2):
        idxs = range(d, -1, -2)
    else:
        idxs = [d] + list(range(d - 1, -1, -2))
    for k in idxs:
        led.require(p.coeff(k), 0, witness=("coefficient", k), strict=True)
    if led.has_violation:
        return led.verdict()
    _, minors, scales = minor_data if minor_data is not None else _minor_data(p)
    start = 1 if variant in (1, 3) else 2
    for k in range(start, d + 1, 2):
        if not led.require(minors[k - 1], 0, witness=("minor", k),
                           strict=True, scale=scales[k - 1]):
            break
    return led.verdict()


def _real_positive_roots(q: UniPoly, tol: Tolerance):
    """Roots of q, required to be real and positive.

    Returns (values, verdict_status, witness).  A conjugate pair with a
    small imaginary part is two same-part roots with nothing between them,
    which already rules out strict alternation, so any imaginary part
    beyond the tolerance is a definite failure rather than an unknown.
    """
    if q.is_zero:
        return [], "fails", ("zero-part",)
    if q.degree == 0:
        return [], "ok", None
    vals = []
    for r in all_roots(q.coeffs, tol):
        scale = max(1.0, abs(r))
        thr = tol.threshold(scale)
        if abs(r.imag) > thr:
            return [], "fails", ("complex-root", r)
        x = r.real
        if x < -thr:
            return [], "fails", ("nonpositive-root", x)
        if x <= thr:
            return [], "unknown", ("near-zero-root", x)
        vals.append(x)
    return sorted(vals), "ok", None


def hermite_biehler_stable(p: UniPoly, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Stability via interlacing of the compressed even/odd parts.

    Convention (fixed empirically against the root oracle): with all
    coefficients positive, p is stable iff both compressed parts have
    simple real positive roots and the merged sequence
    {0} u roots(odd-part) and roots(even-part) strictly alternates
    starting from the odd side's root at 0.
    """
    p = _positive_leading(p)
    if p.degree < 1:
        raise ZeroPolynomial("stability needs degree >= 1")
    led = InequalityLedger(tol)
    if not _require_positive_coeffs(led, p):
        return led.verdict()
    if led.indeterminate is not None:
        return led.verdict()
    if p.degree <= 2:
        # positive coefficients are already equivalent to stability
        return led.verdict()
    f_e, f_o = hb_parts(p)
    try:
        roots_e, st_e, w_e = _real_positive_roots(f_e, tol)
        roots_o, st_o, w_o = _real_positive_roots(f_o, tol)
    except NonConvergence as e:
        return Verdict(UNKNOWN, note=f"root solver did not converge: {e}")
    for st, w in ((st_e, w_e), (st_o, w_o)):
        if st == "fails":
            return Verdict(FAILS, witness=w, note="non-interlacing roots")
        if st == "unknown":
            return Verdict(UNKNOWN, witness=w)
    events = [(0.0, "o")] + [(v, "o") for v in roots_o] + [(v, "e") for v in roots_e]
    events.sort()
    margin = None
    for (v1, s1), (v2, s2) in zip(events, events[1:]):
        gap = v2 - v1
        scale = max(1.0, v1, v2)
        thr = tol.threshold(scale)
        if s1 == s2:
            # nothing of the other part sits between them: alternation is
            # violated whether or not the pair is resolved
            return Verdict(FAILS, witness=("alternation", v1, v2),
                           note="same-part roots are adjacent")
        if gap <= thr:
            # a shared even/odd root means a root on the imaginary axis;
            # too close to call in floating point
            return Verdict(UNKNOWN, witness=("near-coincident", v1, v2))
        m = gap / scale
        margin = m if margin is None else min(margin, m)
    return Verdict(HOLDS, margin=margin)


def degree_reduction_step(p: UniPoly) -> UniPoly:
    """One stability-preserving degree reduction: with mu = a_d/a_{d-1},
    coefficients at positions k with d-k even become a_k - mu*a_{k-1}, the
    rest pass through, and the degree drops by one."""
    if p.is_zero or p.degree < 3:
        raise WrongDegree("reduction step needs degree >= 3")
    coeffs = p.coeffs
    d = p.degree
    if coeffs[d - 1] == 0:
        raise ZeroPolynomial("reduction needs a nonzero subleading coefficient")
    mu = exact_div(coeffs[d], coeffs[d - 1])
    nxt = []
    for k in range(d):
        if (d - k) % 2 == 0:
            prev = coeffs[k - 1] if k >= 1 else 0
            nxt.append(coeffs[k] - mu * prev)
        else:
            nxt.append(coeffs[k])
    return UniPoly(tuple(nxt))


def degree_reduction_stable(p: UniPoly, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Stability by recursive degree reduction.

    Each step has the same stability verdict as its predecessor as long as
    the coefficients stay positive; recursion bottoms out at d <= 2, where
    positivity of the coefficients decides.  Any nonpositive intermediate
    coefficient refutes (the reduced polynomial has a positive leading
    coefficient, so a nonpositive coefficient already rules stability out).
    """
    p = _positive_leading(p)
    if p.degree < 1:
        raise ZeroPolynomial("stability needs degree >= 1")
    led = InequalityLedger(tol)
    current = p
    rounds = 0
    while True:
        for k, a in enumerate(current.coeffs):
            led.require(a, 0, witness=("round", rounds, "coefficient", k),
                        strict=True)
        if led.has_violation or led.indeterminate is not None:
            return led.verdict()
        if current.degree <= 2:
            return led.verdict()
        current = degree_reduction_step(current)
        rounds += 1


def root_oracle_verdict(p: UniPoly, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Ground truth: all companion-matrix roots in the open left half-plane."""
    p = _positive_leading(p)
    if p.degree < 1:
        raise ZeroPolynomial("stability needs degree >= 1")
    roots = all_roots(p.coeffs, tol)
    worst = max(roots, key=lambda r: r.real)
    scale = max(1.0, max(abs(r) for r in roots))
    thr = tol.threshold(scale)
    margin = -worst.real / scale
    if worst.real < -thr:
        return Verdict(HOLDS, margin=margin)
    if worst.real > thr:
        return Verdict(FAILS, margin=margin, witness=("root", worst))
    return Verdict(UNKNOWN, margin=margin, witness=("root", worst))


def clc_d_le_4_criterion(p: UniPoly, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Sufficient stability test for 1 <= d <= 4: positive coefficients and
    strict k*a_k^2 > (k+1)*a_{k-1}*a_{k+1} for 1 <= k <= d-1.

    Failing this hypothesis says nothing about stability.
    """
    if p.is_zero or not 1 <= p.degree <= 4:
        raise WrongDegree("criterion applies to degrees 1..4")
    led = InequalityLedger(tol)
    _require_positive_coeffs(led, p)
    a = p.coeffs
    for k in range(1, p.degree):
        led.require(k * a[k] * a[k], (k + 1) * a[k - 1] * a[k + 1],
                    witness=("weighted-newton", k), strict=True)
    return led.verdict()


def quintic_criterion(p: UniPoly, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Sufficient stability test for d = 5: positive coefficients, strict
    weighted Newton inequalities for k = 1..4, and the strict cross
    inequality (a1 a4 - a0 a5)^2 < (a1 a2 - a0 a3)(a3 a4 - a2 a5)."""
    if p.is_zero or p.degree != 5:
        raise WrongDegree("criterion applies to degree 5 only")
    led = InequalityLedger(tol)
    _require_positive_coeffs(led, p)
    a = p.coeffs
    for k in range(1, 5):
        led.require(k * a[k] * a[k], (k + 1) * a[k - 1] * a[k + 1],
                    witness=("weighted-newton", k), strict=True)
    return combine_verdicts([led.verdict(), quintic_cross_inequality(p, tol)])


@functools.lru_cache(maxsize=None)
def _alpha_bracket() -> tuple:
    """Rational bisection bracket [lo, hi] of the positive root of
    t^3 - t^2 - 2t - 1, with hi - lo <= 1e-14."""
    def cubic(t):
        return t * t * t - t * t - 2 * t - 1

    lo, hi = Fraction(2), Fraction(3)
    width = Fraction(1, 10 ** 14)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if cubic(mid) > 0:
            hi = mid
        else:
            lo = mid
    return lo, hi


def alpha_constant() -> float:
    """The unique positive root of t^3 - t^2 - 2t - 1 (about 2.1479),
    computed by bisection on [2, 3] to residual below 1e-12."""
    lo, hi = _alpha_bracket()
    return float((lo + hi) / 2)


def alpha_criterion(p: UniPoly, mode: str = "product",
                    tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Sufficient stability test via the alpha-ratio inequalities.

    product mode: a_k a_{k+1} >= alpha * a_{k-1} a_{k+2} for 1 <= k <= d-1
    (out-of-range coefficients are zero, so the top comparison is vacuous);
    square mode: a_k^2 >= sqrt(alpha) * a_{k-1} a_{k+1}.

    On rational inputs the comparison uses the rational upper bisection
    bracket of alpha, so a "holds" verdict is exact and conservative.
    """
    if mode not in ("product", "square"):
        raise ValueError("mode must be 'product' or 'square'")
    if p.is_zero or p.degree < 1:
        raise ZeroPolynomial("criterion needs degree >= 1")
    led = InequalityLedger(tol)
    if not _require_positive_coeffs(led, p):
        return led.verdict()
    a = p.coeffs
    d = p.degree
    if p.is_exact:
        _, alpha_hi = _alpha_bracket()
        for k in range(1, d):
            if mode == "product":
                led.require(a[k] * a[k + 1],
                            alpha_hi * a[k - 1] * p.coeff(k + 2),
                            witness=("alpha-product", k))
            else:
                led.require(a[k] ** 4,
                            alpha_hi * (a[k - 1] * a[k + 1]) ** 2,
                            witness=("alpha-square", k))
        return led.verdict()
    alpha = alpha_constant()
    sqrt_alpha = math.sqrt(alpha)
    for k in range(1, d):
        if mode == "product":
            led.require(a[k] * a[k + 1], alpha * a[k - 1] * p.coeff(k + 2),
                        witness=("alpha-product", k))
        else:
            led.require(a[k] * a[k], sqrt_alpha * a[k - 1] * a[k + 1],
                        witness=("alpha-square", k))
    return led.verdict()


@dataclass(frozen=True)
class StabilityReport:
    """Every decider and criterion verdict for one polynomial, plus the
    minor chain and a consistency flag across the deciders."""

    poly: UniPoly
    minors: list
    minor_margins: list
    routh_hurwitz: Verdict
    lienard_chipart: dict
    hermite_biehler: Verdict
    degree_reduction: Verdict
    root_oracle: Verdict
    clc_d_le_4: Verdict | None
    quintic: Verdict | None
    alpha_product: Verdict | None
    alpha_square: Verdict | None
    consistent: bool

    @property
    def deciders(self) -> list:
        return [self.routh_hurwitz, *self.lienard_chipart.values(),
                self.hermite_biehler, self.degree_reduction, self.root_oracle]


def stability_report(p: UniPoly, tol: Tolerance = DEFAULT_TOL) -> StabilityReport:
    p_norm = _positive_leading(p)
    md = _minor_data(p_norm)
    _, minors, scales = md
    margins = [float(m) / s for m, s in zip(minors, scales)]
    rh = routh_hurwitz_stable(p_norm, tol, minor_data=md)
    lc = {v: lienard_chipart_stable(p_norm, v, tol, minor_data=md)
          for v in (1, 2, 3, 4)}
    hb = hermite_biehler_stable(p_norm, tol)
    dr = degree_reduction_stable(p_norm, tol)
    oracle = root_oracle_verdict(p_norm, tol)

    def gated(fn, *args):
        try:
            return fn(p, *args, tol)
        except (WrongDegree, ZeroPolynomial):
            return None

    d = p_norm.degree
    report = StabilityReport(
        poly=p,
        minors=minors,
        minor_margins=margins,
        routh_hurwitz=rh,
        lienard_chipart=lc,
        hermite_biehler=hb,
        degree_reduction=dr,
        root_oracle=oracle,
        clc_d_le_4=gated(clc_d_le_4_criterion) if d <= 4 else None,
        quintic=gated(quintic_criterion) if d == 5 else None,
        alpha_product=gated(alpha_criterion, "product"),
        alpha_square=gated(alpha_criterion, "square"),
        consistent=_consistent([rh, *lc.values(), hb, dr, oracle]),
    )
    return report


def _consistent(verdicts) -> bool:
    statuses = {v.status for v in verdicts if v.status != UNKNOWN}
    return len(statuses) <= 1
