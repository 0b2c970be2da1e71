#!/usr/bin/env python3
"""Walk the showcase inputs through every layer of the library."""

from fractions import Fraction

from conestab import (Cone, MultiForm, SquareMatrix, UniPoly,
                      hessian_signature_check, is_univariate_clc, lti_report,
                      lorentzian_sample_check, perron_frobenius_check,
                      restrict_line, stability_report)


def banner(title):
    print(f"\n=== {title} ===")


def show_poly(label, p):
    rep = stability_report(p)
    clc = is_univariate_clc(p)
    print(f"{label}: coeffs={[str(c) for c in p.coeffs]}")
    print(f"  minor test: {rep.routh_hurwitz.status}   "
          f"interlacing: {rep.hermite_biehler.status}   "
          f"degree reduction: {rep.degree_reduction.status}   "
          f"root oracle: {rep.root_oracle.status}")
    print(f"  complete log-concavity (t >= 0): {clc.status}"
          + (f" (binding at index {clc.witness[1]})" if clc.witness else ""))


def main():
    banner("univariate: stability and log-concavity part ways at degree 5")
    show_poly("clc-but-unstable",
              UniPoly((5, 14, Fraction(25, 2), Fraction(36, 5), 3, 1)))
    show_poly("stable-but-not-clc", UniPoly((5, 25, 50, 30, 10, 3)))
    show_poly("clc cubic (degree <= 4 implies stability)",
              UniPoly((3, 7, 7, 4)))

    banner("forms over the orthant")
    e2 = MultiForm(3, 2, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})
    K = Cone.orthant(3)
    lor = lorentzian_sample_check(e2, K, trials=50, seed=1)
    hes = hessian_signature_check(e2, K, trials=50, seed=1)
    print(f"e2 = x1x2 + x1x3 + x2x3: lorentzian check {lor.verdict.status}, "
          f"hessian signature {hes.verdict.status}")
    print(f"  restriction along the diagonal: "
          f"{list(restrict_line(e2, (1, 1, 1), (1, 1, 1)).coeffs)}")
    bad = MultiForm(2, 2, {(2, 0): 1, (0, 2): 1})
    print(f"x1^2 + x2^2: lorentzian check "
          f"{lorentzian_sample_check(bad, Cone.orthant(2), trials=10, seed=1).verdict.status}"
          " (two positive eigenvalues)")

    banner("cone matrices")
    P = SquareMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    rep = perron_frobenius_check(P, K)
    print(f"cyclic permutation: irreducible {rep.k_irreducible.status}, "
          f"rho={rep.perron.rho:.3f}, interior eigenvector "
          f"{rep.perron.eigenvector_interior}")

    banner("linear systems dx/dt = Ax")
    A = SquareMatrix.from_rows([[-1, 1], [0, -2]])
    lti = lti_report(A)
    print(f"A = [[-1, 1], [0, -2]]: char poly {list(lti.char_poly.coeffs)}, "
          f"conclusion {lti.conclusion}, low-degree criterion "
          f"{lti.clc_d_le_4.status}")


if __name__ == "__main__":
    main()
