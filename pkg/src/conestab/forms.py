"""Multivariate homogeneous polynomials and the cone certification ladder.

Forms are sparse maps from exponent vectors to coefficients.  The checks
here implement the refutation side of the cone-positivity hierarchy:

* quadratic forms get an exact verdict over polyhedral cones (one positive
  eigenvalue plus nonnegative pairing on extreme rays) and a sampled one
  over second-order cones;
* higher-degree checks reduce through sampled interior directional
  derivatives or line restrictions, so their non-refuted verdicts are
  "holds-sampled" -- sampling can refute but never certify.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .cones import (SECOND_ORDER, Cone, extreme_ray_reps, interior_contains,
                    matrix_k_irreducible, matrix_k_nonnegative,
                    perron_frobenius_check, sample_cone, sample_interior)
from .errors import (DimensionMismatch, Inapplicable, InternalMismatch,
                     ParseError)
from .numerics import (DEFAULT_TOL, SquareMatrix, Tolerance, all_exact,
                       exact_div, scalar_from_json, scalar_to_json, sym_eigs)
from .sequences import is_log_concave
from .unipoly import UniPoly
from .verdict import (FAILS, HOLDS, HOLDS_SAMPLED, UNKNOWN, InequalityLedger,
                      Verdict)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class MultiForm:
    """Homogeneous polynomial of degree d in n variables, stored sparsely as
    exponent-vector -> coefficient (zero coefficients dropped)."""

    n: int
    d: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for exp, c in self.terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.n:
                raise DimensionMismatch(
                    f"exponent vector {exp} has length {len(exp)}, expected {self.n}")
            if any(e < 0 for e in exp):
                raise ValueError("negative exponent")
            if sum(exp) != self.d:
                raise ValueError(
                    f"exponent vector {exp} sums to {sum(exp)}, not degree {self.d}")
            if c == 0:
                continue
            cleaned[exp] = cleaned.get(exp, 0) + c
        object.__setattr__(self, "terms", cleaned)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_exact(self) -> bool:
        return all_exact(self.terms.values())

    def eval(self, x):
        if len(x) != self.n:
            raise DimensionMismatch("point dimension mismatch")
        total = 0
        for exp, c in self.terms.items():
            v = c
            for xi, e in zip(x, exp):
                if e:
                    v = v * xi ** e
            total = total + v
        return total

    def dir_derivative(self, v) -> "MultiForm":
        """Directional derivative sum_i v_i d/dx_i; degree drops by one."""
        if len(v) != self.n:
            raise DimensionMismatch("direction dimension mismatch")
        if self.d < 1:
            raise ValueError("cannot differentiate a degree-0 form")
        out = {}
        for exp, c in self.terms.items():
            for i, e in enumerate(exp):
                if e == 0 or v[i] == 0:
                    continue
                new = list(exp)
                new[i] -= 1
                key = tuple(new)
                out[key] = out.get(key, 0) + e * v[i] * c
        return MultiForm(self.n, self.d - 1, out)

    def hessian_at(self, a) -> SquareMatrix:
        """Matrix of second partials evaluated at a; symmetric."""
        if len(a) != self.n:
            raise DimensionMismatch("point dimension mismatch")
        if self.d < 2:
            raise ValueError("Hessian needs degree >= 2")
        n = self.n
        H = [[0] * n for _ in range(n)]
        for exp, c in self.terms.items():
            for i in range(n):
                if exp[i] == 0:
                    continue
                for j in range(i, n):
                    coef = exp[i] * (exp[j] - (1 if i == j else 0))
                    if coef == 0:
                        continue
                    new = list(exp)
                    new[i] -= 1
                    new[j] -= 1
                    v = coef * c
                    for ak, e in zip(a, new):
                        if e:
                            v = v * ak ** e
                    H[i][j] = H[i][j] + v
                    if i != j:
                        H[j][i] = H[j][i] + v
        return SquareMatrix.from_rows(H)

    def __add__(self, other: "MultiForm") -> "MultiForm":
        if other.n != self.n or other.d != self.d:
            raise DimensionMismatch("cannot add forms of different shape")
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return MultiForm(self.n, self.d, out)

    def scale(self, c) -> "MultiForm":
        return MultiForm(self.n, self.d, {e: c * v for e, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, MultiForm) and self.n == other.n
                and self.d == other.d and self.terms == other.terms)


def quadratic_matrix(f: MultiForm) -> SquareMatrix:
    """Symmetric matrix Q with f(x) = x^T Q x, for a degree-2 form."""
    if f.d != 2:
        raise ValueError("quadratic_matrix needs a degree-2 form")
    n = f.n
    Q = [[0] * n for _ in range(n)]
    for exp, c in f.terms.items():
        idx = [i for i, e in enumerate(exp) if e]
        if len(idx) == 1:
            Q[idx[0]][idx[0]] = c
        else:
            i, j = idx
            half = exact_div(c, 2)
            Q[i][j] = half
            Q[j][i] = half
    return SquareMatrix.from_rows(Q)


def restrict_line(f: MultiForm, x, v) -> UniPoly:
    """The univariate restriction t -> f(x + t v), computed two independent
    ways (binomial substitution-expansion, and iterated directional
    derivatives giving a_k = D_v^k f(x) / k!) and cross-checked -- exactly
    in rational mode.
    """
    if len(x) != f.n or len(v) != f.n:
        raise DimensionMismatch("restriction point/direction dimension mismatch")
    subst = _restrict_by_substitution(f, x, v)
    deriv = _restrict_by_derivatives(f, x, v)
    exact = f.is_exact and all_exact(x) and all_exact(v)
    if exact:
        if subst.coeffs != deriv.coeffs:
            raise InternalMismatch(
                f"restriction methods disagree: {subst.coeffs} vs {deriv.coeffs}")
    else:
        for k in range(max(len(subst.coeffs), len(deriv.coeffs))):
            a, b = subst.coeff(k), deriv.coeff(k)
            scale = max(abs(a), abs(b), 1.0)
            if abs(a - b) > 1e-6 * scale:
                raise InternalMismatch(
                    f"restriction methods disagree at t^{k}: {a} vs {b}")
    return subst


def _restrict_by_substitution(f: MultiForm, x, v) -> UniPoly:
    coeffs = [0] * (f.d + 1)
    for exp, c in f.terms.items():
        poly = [c]
        for xi, vi, e in zip(x, v, exp):
            if e == 0:
                continue
            factor = [math.comb(e, j) * xi ** (e - j) * vi ** j
                      for j in range(e + 1)]
            poly = _conv(poly, factor)
        for k, val in enumerate(poly):
            coeffs[k] = coeffs[k] + val
    return UniPoly(tuple(coeffs))


def _conv(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _restrict_by_derivatives(f: MultiForm, x, v) -> UniPoly:
    coeffs = []
    g = f
    for k in range(f.d + 1):
        coeffs.append(exact_div(g.eval(x), math.factorial(k)))
        if k < f.d:
            g = g.dir_derivative(v)
    return UniPoly(tuple(coeffs))


@dataclass(frozen=True)
class FormReport:
    """Outcome of one form-level check, with whatever diagnostics the check
    accumulated (eigenvalues, per-branch tallies, sampled witnesses)."""

    check: str
    verdict: Verdict
    details: dict = field(default_factory=dict)


def _eig_positive_count(Q: SquareMatrix, tol: Tolerance):
    vals, _ = sym_eigs(Q, tol)
    scale = max((abs(v) for v in vals), default=1.0)
    thr = tol.threshold(max(scale, 1.0))
    pos = sum(1 for v in vals if v > thr)
    band = sum(1 for v in vals if abs(v) <= thr)
    return vals, pos, band, thr


def quadratic_lorentzian_check(Q: SquareMatrix, K: Cone,
                               tol: Tolerance = DEFAULT_TOL,
                               trials: int = 200, seed=0) -> FormReport:
    """Is x^T Q x a cone-Lorentzian quadratic?

    Needs exactly one positive eigenvalue plus nonnegative pairing
    y^T Q x on extreme-ray pairs (exact, polyhedral/orthant) or positive
    values on sampled interior points (second-order).  On self-dual cones
    the report additionally carries the K-nonnegativity of Q and the
    nonsingular-irreducible / singular-nonnegative dichotomy.
    """
    Q = Q.symmetrized()
    if Q.n != K.n:
        raise DimensionMismatch("matrix/cone dimension mismatch")
    vals, pos, band, thr = _eig_positive_count(Q, tol)
    details = {"eigenvalues": vals}
    if pos > 1:
        return FormReport("quadratic-lorentzian",
                          Verdict(FAILS, witness=("positive-eigenvalues", pos),
                                  note="more than one positive eigenvalue"),
                          details)
    if pos == 0:
        status = UNKNOWN if band else FAILS
        return FormReport("quadratic-lorentzian",
                          Verdict(status, witness=("positive-eigenvalues", 0)),
                          details)
    sampled = False
    if K.kind == SECOND_ORDER:
        sampled = True
        led = InequalityLedger(tol)
        for t in range(trials):
            x = sample_interior(K, [seed, t])
            val = _dot(x, Q.mul_vec(x))
            led.require(val, 0, witness=("interior-point", x), strict=True,
                        scale=sum(abs(c) for c in x) ** 2)
        pairing = led.verdict()
    else:
        led = InequalityLedger(tol)
        reps = extreme_ray_reps(K)
        for gx in reps:
            qx = Q.mul_vec(gx)
            for gy in reps:
                led.require(_dot(gy, qx), 0, witness=("ray-pair", gx, gy))
        pairing = led.verdict()
    details["pairing"] = pairing
    if K.is_self_dual:
        details["k_nonnegative"] = matrix_k_nonnegative(Q, K, tol,
                                                        trials=trials, seed=seed)
        singular = band > 0
        details["singular"] = singular
        if singular:
            details["dichotomy"] = details["k_nonnegative"]
            details["dichotomy_branch"] = "singular-nonnegative"
        else:
            try:
                details["dichotomy"] = matrix_k_irreducible(
                    Q, K, tol, trials=trials, seed=seed)
            except Inapplicable as e:
                details["dichotomy"] = Verdict(FAILS, witness=e.witness,
                                               note="not K-nonnegative")
            details["dichotomy_branch"] = "nonsingular-irreducible"
    if pairing.is_fails:
        verdict = Verdict(FAILS, margin=pairing.margin, witness=pairing.witness)
    elif pairing.is_unknown:
        verdict = Verdict(UNKNOWN, margin=pairing.margin, witness=pairing.witness)
    elif band:
        # a tolerance-band eigenvalue keeps "exactly one positive" honest
        verdict = Verdict(HOLDS_SAMPLED if sampled else HOLDS,
                          margin=pairing.margin,
                          note="eigenvalue(s) inside the zero band treated as zero")
    else:
        verdict = Verdict(HOLDS_SAMPLED if sampled else HOLDS,
                          margin=pairing.margin)
    return FormReport("quadratic-lorentzian", verdict, details)


def _nonnegative_on_cone(f: MultiForm, K: Cone, tol: Tolerance,
                         trials: int, seed) -> FormReport:
    """Degree <= 1 degenerate case: Lorentzian iff nonnegative on K."""
    led = InequalityLedger(tol)
    sampled = K.kind == SECOND_ORDER
    if sampled:
        for t in range(trials):
            x = sample_cone(K, [seed, t])
            led.require(f.eval(x), 0, witness=("point", x),
                        scale=max(1.0, sum(abs(c) for c in x)) ** max(f.d, 1))
    else:
        for g in extreme_ray_reps(K):
            led.require(f.eval(g), 0, witness=("ray", g))
    base = led.verdict()
    if base.status == HOLDS and sampled:
        base = Verdict(HOLDS_SAMPLED, margin=base.margin, witness=base.witness)
    return FormReport("lorentzian-sampled", base,
                      {"degenerate_degree": f.d})


def lorentzian_sample_check(f: MultiForm, K: Cone, trials: int = 200, seed=0,
                            tol: Tolerance = DEFAULT_TOL) -> FormReport:
    """Sampled refutation of the Lorentzian property: reduce f to a
    quadratic along tuples of interior directions and run the quadratic
    check; the first refuted tuple is the witness."""
    if f.n != K.n:
        raise DimensionMismatch("form/cone dimension mismatch")
    if f.d <= 1:
        return _nonnegative_on_cone(f, K, tol, trials, seed)
    if f.d == 2:
        inner = quadratic_lorentzian_check(quadratic_matrix(f), K, tol,
                                           trials=trials, seed=seed)
        return FormReport("lorentzian-sampled", inner.verdict, inner.details)
    unknowns = 0
    rounds = max(1, trials)
    for t in range(rounds):
        dirs = tuple(sample_interior(K, [seed, t, j]) for j in range(f.d - 2))
        q = f
        for a in dirs:
            q = q.dir_derivative(a)
        inner = quadratic_lorentzian_check(quadratic_matrix(q), K, tol,
                                           trials=max(8, trials // 10),
                                           seed=[seed, t, 1])
        if inner.verdict.is_fails:
            return FormReport(
                "lorentzian-sampled",
                Verdict(FAILS, witness={"directions": dirs,
                                        "inner": inner.verdict.witness}),
                {"trials_run": t + 1, "inner_details": inner.details})
        if inner.verdict.is_unknown:
            unknowns += 1
    if unknowns:
        return FormReport("lorentzian-sampled",
                          Verdict(UNKNOWN,
                                  note=f"{unknowns}/{rounds} reductions indeterminate"),
                          {"trials_run": rounds})
    return FormReport("lorentzian-sampled",
                      Verdict(HOLDS_SAMPLED,
                              note="refutation sampled, none found"),
                      {"trials_run": rounds})


def clc_necessary_check(f: MultiForm, K: Cone, trials: int = 200, seed=0,
                        tol: Tolerance = DEFAULT_TOL,
                        strict: bool = False) -> FormReport:
    """Necessary conditions along sampled lines: the restriction
    t -> f(x + t v) must have positive coefficients and a log-concave
    factorial-weighted coefficient sequence {k! a_k} = {D_v^k f(x)}.

    Non-strict mode samples interior (x, v); strict mode also draws
    boundary points and rays and uses strict inequalities.  Boundary
    coverage is necessarily incomplete; the report says so.
    """
    if f.n != K.n:
        raise DimensionMismatch("form/cone dimension mismatch")
    unknowns = 0
    boundary_flagged = []
    for t in range(trials):
        if strict:
            x = sample_cone(K, [seed, t, 0])
            v = sample_cone(K, [seed, t, 1])
            if not any(v):
                continue
        else:
            x = sample_interior(K, [seed, t, 0])
            v = sample_interior(K, [seed, t, 1])
        p = restrict_line(f, x, v)
        weighted = [math.factorial(k) * p.coeff(k) for k in range(f.d + 1)]
        verdict = is_log_concave(weighted, strict=strict, tol=tol)
        if verdict.is_fails:
            on_boundary = strict and not (interior_contains(K, x, tol)
                                          and interior_contains(K, v, tol))
            if on_boundary:
                boundary_flagged.append((x, v, verdict.witness))
                continue
            return FormReport(
                "clc-necessary",
                Verdict(FAILS, margin=verdict.margin,
                        witness={"x": x, "v": v, "inner": verdict.witness}),
                {"trials_run": t + 1})
        if verdict.is_unknown:
            unknowns += 1
    details = {"trials_run": trials,
               "note": "boundary coverage is sampled and incomplete"}
    if boundary_flagged:
        details["boundary_violations"] = boundary_flagged[:5]
        details["boundary_note"] = (
            "strict inequalities failed on boundary samples; the strict "
            "property on faces where derivatives vanish is not resolved here")
    if unknowns:
        return FormReport("clc-necessary",
                          Verdict(UNKNOWN,
                                  note=f"{unknowns}/{trials} lines indeterminate"),
                          details)
    return FormReport("clc-necessary",
                      Verdict(HOLDS_SAMPLED, note="refutation sampled, none found"),
                      details)


def hessian_signature_check(f: MultiForm, K: Cone, trials: int = 100, seed=0,
                            tol: Tolerance = DEFAULT_TOL) -> FormReport:
    """At sampled interior points the Hessian must have exactly one positive
    eigenvalue; on self-dual cones it must additionally be either
    nonsingular and K-irreducible (then its spectral radius is a simple
    positive eigenvalue with an interior eigenvector) or singular and
    K-nonnegative."""
    if f.n != K.n:
        raise DimensionMismatch("form/cone dimension mismatch")
    if f.d < 2:
        raise ValueError("Hessian check needs degree >= 2")
    tallies = {"nonsingular_irreducible": 0, "singular_nonnegative": 0}
    unknowns = 0
    for t in range(trials):
        a = sample_interior(K, [seed, t])
        H = f.hessian_at(a)
        vals, pos, band, thr = _eig_positive_count(H, tol)
        if pos != 1:
            if pos == 0 and band:
                unknowns += 1
                continue
            return FormReport(
                "hessian-signature",
                Verdict(FAILS,
                        witness={"point": a, "eigenvalues": vals,
                                 "positive_count": pos}),
                {"trials_run": t + 1, "tallies": tallies})
        if not K.is_self_dual:
            continue
        singular = band > 0
        if singular:
            sub = matrix_k_nonnegative(H, K, tol, trials=32, seed=[seed, t, 1])
            if sub.is_fails:
                return FormReport(
                    "hessian-signature",
                    Verdict(FAILS, witness={"point": a, "inner": sub.witness},
                            note="singular Hessian is not K-nonnegative"),
                    {"trials_run": t + 1, "tallies": tallies})
            if sub.is_unknown:
                unknowns += 1
                continue
            tallies["singular_nonnegative"] += 1
        else:
            try:
                sub = matrix_k_irreducible(H, K, tol, trials=32, seed=[seed, t, 1])
            except Inapplicable as e:
                return FormReport(
                    "hessian-signature",
                    Verdict(FAILS, witness={"point": a, "inner": e.witness},
                            note="nonsingular Hessian is not K-nonnegative"),
                    {"trials_run": t + 1, "tallies": tallies})
            if sub.is_fails:
                return FormReport(
                    "hessian-signature",
                    Verdict(FAILS, witness={"point": a, "inner": sub.witness},
                            note="nonsingular Hessian is not K-irreducible"),
                    {"trials_run": t + 1, "tallies": tallies})
            if sub.is_unknown:
                unknowns += 1
                continue
            perron = perron_frobenius_check(H, K, tol).perron
            if not (perron.rho_positive and perron.simple
                    and perron.eigenvector_interior):
                return FormReport(
                    "hessian-signature",
                    Verdict(FAILS, witness={"point": a, "perron": perron},
                            note="generalized Perron-Frobenius property fails"),
                    {"trials_run": t + 1, "tallies": tallies})
            tallies["nonsingular_irreducible"] += 1
    details = {"trials_run": trials, "tallies": tallies}
    if unknowns:
        return FormReport("hessian-signature",
                          Verdict(UNKNOWN,
                                  note=f"{unknowns}/{trials} points indeterminate"),
                          details)
    return FormReport("hessian-signature",
                      Verdict(HOLDS_SAMPLED, note="refutation sampled, none found"),
                      details)


def hurwitz_over_cone_check(f: MultiForm, K: Cone, trials: int = 200, seed=0,
                            tol: Tolerance = DEFAULT_TOL) -> FormReport:
    """Sampled refutation of Hurwitz stability over the cone: every sampled
    interior line restriction must be Hurwitz-stable."""
    from .hurwitz import routh_hurwitz_stable

    if f.n != K.n:
        raise DimensionMismatch("form/cone dimension mismatch")
    if f.d < 1:
        raise ValueError("stability over the cone needs degree >= 1")
    unknowns = 0
    for t in range(trials):
        x = sample_interior(K, [seed, t, 0])
        v = sample_interior(K, [seed, t, 1])
        p = restrict_line(f, x, v)
        if p.is_zero or p.degree < 1:
            unknowns += 1
            continue
        verdict = routh_hurwitz_stable(p, tol)
        if verdict.is_fails:
            return FormReport(
                "hurwitz-over-cone",
                Verdict(FAILS, margin=verdict.margin,
                        witness={"x": x, "v": v, "inner": verdict.witness}),
                {"trials_run": t + 1})
        if verdict.is_unknown:
            unknowns += 1
    details = {"trials_run": trials}
    if unknowns:
        return FormReport("hurwitz-over-cone",
                          Verdict(UNKNOWN,
                                  note=f"{unknowns}/{trials} lines indeterminate"),
                          details)
    return FormReport("hurwitz-over-cone",
                      Verdict(HOLDS_SAMPLED, note="refutation sampled, none found"),
                      details)


def verify_sum_condition(f: MultiForm, g: MultiForm, b, c,
                         tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff D_b f and D_c g are the same nonzero form (the hypothesis
    under which a sum of two cone-Lorentzian forms stays cone-Lorentzian)."""
    if f.n != g.n or f.d != g.d:
        raise DimensionMismatch("forms must share dimension and degree")
    if len(b) != f.n or len(c) != f.n:
        raise DimensionMismatch("witness vectors have wrong dimension")
    if f.d < 1:
        return False
    df = f.dir_derivative(b)
    dg = g.dir_derivative(c)
    if df.is_zero or dg.is_zero:
        return False
    exact = df.is_exact and dg.is_exact
    if exact:
        return df == dg
    keys = set(df.terms) | set(dg.terms)
    for k in keys:
        a1 = df.terms.get(k, 0)
        a2 = dg.terms.get(k, 0)
        if abs(a1 - a2) > tol.threshold(max(abs(a1), abs(a2), 1.0)):
            return False
    return True


def form_from_json(obj, exact: bool = True) -> MultiForm:
    """Parse ``{"n": ..., "d": ..., "terms": [{"exp": [...], "coef": ...}]}``."""
    if not isinstance(obj, dict):
        raise ParseError("expected a form descriptor object")
    try:
        n = int(obj["n"])
        d = int(obj["d"])
        raw = obj["terms"]
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"bad form descriptor: {e}") from e
    terms = {}
    for item in raw:
        try:
            exp = tuple(int(e) for e in item["exp"])
            coef = scalar_from_json(item["coef"], exact)
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"bad term {item!r}: {e}") from e
        terms[exp] = terms.get(exp, 0) + coef
    try:
        return MultiForm(n, d, terms)
    except (ValueError, DimensionMismatch) as e:
        raise ParseError(str(e)) from e


def form_to_json(f: MultiForm) -> dict:
    return {"n": f.n, "d": f.d,
            "terms": [{"exp": list(exp), "coef": scalar_to_json(c)}
                      for exp, c in sorted(f.terms.items())]}
