"""Coefficient-sequence predicates.

Log-concavity, ultra-log-concavity, the weighted univariate condition
``i*a_i^2 >= (i+1)*a_{i-1}*a_{i+1}`` (equivalent to log-concavity of the
factorial-weighted sequence {k! a_k}), and the derived Newton-type
inequality chains.  Inequalities are quantified only over indices where
every referenced entry exists, so length-1 and length-2 sequences hold
vacuously.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import Inapplicable, WrongDegree
from .numerics import DEFAULT_TOL, Tolerance
from .unipoly import UniPoly
from .verdict import FAILS, HOLDS, InequalityLedger, Verdict


def is_log_concave(seq, strict: bool = False, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """All entries positive and a_k^2 >= a_{k-1} a_{k+1} for interior k
    (strict: >)."""
    seq = list(seq)
    if not seq:
        raise ValueError("empty sequence")
    led = InequalityLedger(tol, strict=strict)
    for k, a in enumerate(seq):
        led.require(a, 0, witness=("entry", k), strict=True)
    for k in range(1, len(seq) - 1):
        led.require(seq[k] * seq[k], seq[k - 1] * seq[k + 1],
                    witness=("log-concavity", k))
    return led.verdict()


def is_ultra_log_concave(seq, strict: bool = False,
                         tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Binomial-normalized log-concavity of c_0..c_n: entries nonnegative and
    (c_k / C(n,k))^2 >= (c_{k-1}/C(n,k-1)) (c_{k+1}/C(n,k+1)).

    The ratio inequality is checked cross-multiplied, which keeps rational
    inputs exact.
    """
    seq = list(seq)
    if not seq:
        raise ValueError("empty sequence")
    n = len(seq) - 1
    led = InequalityLedger(tol, strict=strict)
    for k, c in enumerate(seq):
        led.require(c, 0, witness=("entry", k), strict=False)
    for k in range(1, n):
        lhs = seq[k] * seq[k] * math.comb(n, k - 1) * math.comb(n, k + 1)
        rhs = seq[k - 1] * seq[k + 1] * math.comb(n, k) ** 2
        led.require(lhs, rhs, witness=("ultra-log-concavity", k))
    return led.verdict()


def is_univariate_clc(p: UniPoly, strict: bool = False,
                      tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Complete log-concavity of p on t >= 0: all coefficients positive and
    i*a_i^2 >= (i+1)*a_{i-1}*a_{i+1} for 1 <= i <= d-1 (strict: >).

    The zero polynomial holds by convention in the non-strict sense only.
    """
    if p.is_zero:
        if strict:
            return Verdict(FAILS, witness=("zero-polynomial",),
                           note="zero polynomial is not strictly log-concave")
        return Verdict(HOLDS, note="zero polynomial convention")
    d = p.degree
    led = InequalityLedger(tol, strict=strict)
    for k, a in enumerate(p.coeffs):
        led.require(a, 0, witness=("coefficient", k), strict=True)
    for i in range(1, d):
        led.require(i * p.coeffs[i] * p.coeffs[i],
                    (i + 1) * p.coeffs[i - 1] * p.coeffs[i + 1],
                    witness=("weighted-newton", i))
    return led.verdict()


def quintic_cross_inequality(p: UniPoly, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """The strict degree-5 determinant inequality
    (a1 a4 - a0 a5)^2 < (a1 a2 - a0 a3)(a3 a4 - a2 a5)."""
    if p.is_zero or p.degree != 5:
        raise WrongDegree("cross inequality is defined for degree 5 only")
    a = p.coeffs
    led = InequalityLedger(tol, strict=True)
    lhs = (a[1] * a[2] - a[0] * a[3]) * (a[3] * a[4] - a[2] * a[5])
    rhs = (a[1] * a[4] - a[0] * a[5]) ** 2
    led.require(lhs, rhs, witness=("quintic-cross",))
    return led.verdict()


@dataclass(frozen=True)
class NewtonChainReport:
    """Outcome of the derived inequality families, one verdict each."""

    hypothesis: Verdict
    families: dict

    @property
    def all_hold(self) -> bool:
        return all(v.is_holds for v in self.families.values())


def newton_chain_report(seq, tol: Tolerance = DEFAULT_TOL) -> NewtonChainReport:
    """Evaluate the inequality families implied by the strengthened Newton
    hypothesis a_k^2 >= ((k+1)/k) a_{k-1} a_{k+1} on a positive sequence.

    Raises Inapplicable (with the witness index) when the hypothesis does
    not hold, since the derived chains are meaningless without it.
    """
    a = list(seq)
    d = len(a) - 1
    hyp = InequalityLedger(tol)
    for k, v in enumerate(a):
        hyp.require(v, 0, witness=("entry", k), strict=True)
    for k in range(1, d):
        hyp.require(k * a[k] * a[k], (k + 1) * a[k - 1] * a[k + 1],
                    witness=("hypothesis", k))
    hv = hyp.verdict()
    if not hv.is_holds:
        raise Inapplicable("Newton hypothesis does not hold", witness=hv.witness)

    families = {}

    led = InequalityLedger(tol)
    for k in range(1, d - 1):
        led.require(k * a[k] * a[k + 1], (k + 2) * a[k - 1] * a[k + 2],
                    witness=("neighbor-product", k))
    families["neighbor_product"] = led.verdict()

    led = InequalityLedger(tol)
    for k in range(2, d - 1):
        led.require(k * (k - 1) * a[k] * a[k],
                    (k + 2) * (k + 1) * a[k - 2] * a[k + 2],
                    witness=("square-gap-two", k))
    families["square_gap_two"] = led.verdict()

    led = InequalityLedger(tol)
    for k in range(1, d - 2):
        led.require(k * a[k] * a[k + 2], (k + 3) * a[k - 1] * a[k + 3],
                    witness=("product-gap-two", k))
    families["product_gap_two"] = led.verdict()

    led = InequalityLedger(tol)
    for k in range(1, d):
        led.require(k * a[k] * a[d - 1], d * a[k - 1] * a[d],
                    witness=("top-anchor", k))
    families["top_anchor"] = led.verdict()

    led = InequalityLedger(tol)
    for k in range(0, d + 1):
        for i in range(k + 1, d + 1):
            for j in range(i + 1, d + 1):
                ell = i + j - k
                if j < ell <= d:
                    led.require(i * a[i] * a[j], ell * a[k] * a[ell],
                                witness=("rectangle", (k, i, j, ell)))
    families["rectangle"] = led.verdict()

    # ratio chains are strict consequences even of the non-strict hypothesis
    led = InequalityLedger(tol, strict=True)
    for m in range(0, d - 2):
        led.require(a[m + 1] * a[m + 2], a[m] * a[m + 3],
                    witness=("ratio-step-two", m))
    families["ratio_chain_step_two"] = led.verdict()

    led = InequalityLedger(tol, strict=True)
    for m in range(0, d - 2, 2):
        led.require(a[m + 1] * a[m + 2], a[m] * a[m + 3],
                    witness=("ratio-alternating", m))
    families["ratio_chain_alternating"] = led.verdict()

    return NewtonChainReport(hypothesis=hv, families=families)
