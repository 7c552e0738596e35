"""Coefficient vectors, the matrix packages P_w, the base package Psi = P_0,
and the orthogonal family P_w~ = Psi^{-1} P_w.

The a-vectors are produced by two independent code paths, a three-term
recursion and a Racah closed form, and the tests cross-check them entry by
entry; neither path is trusted alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .gaussian import GaussianRational, ZERO, ONE, I
from .polynomials import Polynomial, MatrixPolynomial
from .hypergeometric import (HypergeometricSpec, hyp_terminating,
                             hyp2f1_poly_u, racah_value, pochhammer)
from .structure import build_L, build_structures, eigen_ledger


@dataclass(frozen=True)
class CoefficientVector:
    """The ell+1 leading constants a_j of one package column."""

    ell: int
    w: int
    k: int
    a: tuple

    def __iter__(self):
        return iter(self.a)


def coeffs_by_recursion(ell: int, w: int, k: int) -> CoefficientVector:
    """Solve the three-term recursion forward from a_0 = 1.

    The recursion is the eigenvector equation L(lambda) a = mu a read row by
    row; the superdiagonal coefficient -i(j+1)(ell+j+2)/2 never vanishes, so
    each row determines the next entry.  The last row is a closing relation
    with no new unknown; it is asserted, not solved.
    """
    if w < 0 or not 0 <= k <= ell:
        raise ValueError("need w >= 0 and 0 <= k <= ell")
    ledger = eigen_ledger(ell, w, k)
    mu = GaussianRational(ledger.mu)
    L = build_L(ell, n=w + k).constant_value()
    a = [ONE] + [ZERO] * ell
    for j in range(ell):
        rhs = mu * a[j]
        if j > 0:
            rhs = rhs - L[j][j - 1] * a[j - 1]
        rhs = rhs - L[j][j] * a[j]
        a[j + 1] = rhs / L[j][j + 1]
    closing = -mu * a[ell] + L[ell][ell] * a[ell]
    if ell > 0:
        closing = closing + L[ell][ell - 1] * a[ell - 1]
    if not closing.is_zero():
        raise ArithmeticError(
            f"closing equation violated for (ell={ell}, w={w}, k={k})"
        )
    return CoefficientVector(ell=ell, w=w, k=k, a=tuple(a))


def coeffs_by_racah(ell: int, w: int, k: int) -> CoefficientVector:
    """Closed form for the a-vector via a Racah polynomial value."""
    if w < 0 or not 0 <= k <= ell:
        raise ValueError("need w >= 0 and 0 <= k <= ell")
    out = []
    minus_2i = GaussianRational(0, -2)
    for j in range(ell + 1):
        poch = pochhammer(-w - k, j)
        if poch == 0:
            out.append(ZERO)
            continue
        scale = (minus_2i ** j
                 * GaussianRational(poch)
                 * GaussianRational(Fraction(factorial(j), factorial(2 * j)))
                 * GaussianRational(Fraction(comb(ell, j),
                                             comb(ell + j + 1, j))))
        r = racah_value(k, j, -ell - 1, -w - k - 1, 0, 0, ell)
        out.append(scale * r)
    return CoefficientVector(ell=ell, w=w, k=k, a=tuple(out))


def column_entry(ell: int, w: int, k: int, j: int,
                 a_j: GaussianRational) -> Polynomial:
    """Entry (j, k) of P_w: a_j * 2F1(-w-k+j, w+k+j+2; j+3/2; (1-u)/2)."""
    if a_j.is_zero():
        return Polynomial.zero("u")
    f = hyp2f1_poly_u(-(w + k - j), w + k + j + 2, Fraction(2 * j + 3, 2))
    return f * a_j


def build_Pw(ell: int, w: int) -> MatrixPolynomial:
    """The package P_w with columns indexed by k."""
    cols = [coeffs_by_recursion(ell, w, k) for k in range(ell + 1)]
    return MatrixPolynomial.from_function(
        ell + 1, ell + 1,
        lambda j, k: column_entry(ell, w, k, j, cols[k].a[j]),
        var="u",
    )


@dataclass(frozen=True)
class FamilyPackage:
    """Psi, its inverse, and the packages P_w and P_w~ for w up to w_max."""

    ell: int
    Psi: MatrixPolynomial
    PsiInv: MatrixPolynomial
    Pw: dict
    PwTilde: dict


def build_family(ell: int, w_max: int) -> FamilyPackage:
    if w_max < 0:
        raise ValueError("w_max must be nonnegative")
    from .polynomials import matpoly_inverse_triangular
    Psi = build_Pw(ell, 0)
    PsiInv = matpoly_inverse_triangular(Psi)
    Pw = {}
    PwTilde = {}
    for w in range(w_max + 1):
        Pw[w] = Psi if w == 0 else build_Pw(ell, w)
        PwTilde[w] = PsiInv * Pw[w]
    return FamilyPackage(ell=ell, Psi=Psi, PsiInv=PsiInv, Pw=Pw,
                         PwTilde=PwTilde)


def psi_entry_reference(ell: int, j: int, k: int) -> Polynomial:
    """Independent formula for the Psi entries through Gegenbauer
    polynomials; used as a test oracle against build_Pw(ell, 0)."""
    from .hypergeometric import gegenbauer
    if j > k:
        return Polynomial.zero("u")
    c = (GaussianRational(2 * j + 1)
         * GaussianRational(0, -2) ** j
         * GaussianRational(Fraction(factorial(k) * factorial(j),
                                     factorial(k + j + 1))))
    return gegenbauer(k - j, j + 1) * c


def eval_H(ell: int, w: int, k: int, u: float):
    """Numeric value of the vector H(u) = U diag((1-u^2)^{j/2}) P_col(u).

    Valid for u in [-1, 1].  At u = 1 every half-integer power collapses and
    the value is (1, ..., 1) since a_0 = 1.
    """
    if not -1.0 <= u <= 1.0:
        raise ValueError("u must lie in [-1, 1]")
    st = build_structures(ell)
    coeffs = coeffs_by_recursion(ell, w, k)
    p = [complex(column_entry(ell, w, k, j, coeffs.a[j])(u))
         for j in range(ell + 1)]
    t = [(1.0 - u * u) ** (j / 2.0) for j in range(ell + 1)]
    U = st.U.constant_value()
    return [sum(complex(U[r][j]) * t[j] * p[j] for j in range(ell + 1))
            for r in range(ell + 1)]
