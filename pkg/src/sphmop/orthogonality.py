"""The matrix weight, exact inner products, Gram matrices, operator
symmetry, LDU decomposition, and commutant analysis.

The measure is (2/pi) sqrt(1-u^2) du on [-1, 1]; its even moments are
rational, so every integral of a polynomial integrand is computed exactly
by expanding in monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .gaussian import GaussianRational, ZERO, ONE, I
from .polynomials import Polynomial, MatrixPolynomial
from .structure import build_structures
from . import exact_linalg


@dataclass(frozen=True)
class WeightMatrix:
    """Polynomial part of the weight; the scalar prefactor
    (2/pi) sqrt(1-u^2) is carried by the moment rule, not stored.

    poly_part = Psi* diag(c_j (1-u^2)^j) Psi with the constants c_j from
    the diagonal matrix U*U; it is Hermitian as a polynomial matrix.
    """

    ell: int
    poly_part: MatrixPolynomial


@lru_cache(maxsize=None)
def build_weight(ell: int) -> WeightMatrix:
    from .family import build_Pw
    st = build_structures(ell)
    Psi = build_Pw(ell, 0)
    one_minus_u2 = Polynomial([1, 0, -1], var="u")
    mid_entries = []
    pw = Polynomial.constant(1, var="u")
    for j in range(ell + 1):
        c = st.UstarU[j, j].constant_term()
        mid_entries.append(pw * c)
        pw = pw * one_minus_u2
    mid = MatrixPolynomial.diagonal(mid_entries, var="u")
    poly_part = Psi.conjugate_transpose() * mid * Psi
    return WeightMatrix(ell=ell, poly_part=poly_part)


def chebyshev_moment(m: int) -> Fraction:
    """Exact value of (2/pi) * integral of u^m sqrt(1-u^2) over [-1, 1].

    Zero for odd m; for m = 2t the value is the Catalan number C_t divided
    by 4^t.  The closed form is validated against numeric quadrature in the
    test suite before anything downstream relies on it.
    """
    if m < 0:
        raise ValueError("moment order must be nonnegative")
    if m % 2 == 1:
        return Fraction(0)
    t = m // 2
    return Fraction(factorial(2 * t), 4 ** t * factorial(t) * factorial(t + 1))


def integrate_poly(p: Polynomial) -> GaussianRational:
    """Integrate a polynomial in u against the measure, exactly."""
    acc = ZERO
    for m, c in enumerate(p.coeffs):
        w = chebyshev_moment(m)
        if w:
            acc = acc + c * GaussianRational(w)
    return acc


@lru_cache(maxsize=None)
def _moment_scalar(m: int) -> GaussianRational:
    return GaussianRational(chebyshev_moment(m))


def _integral_sesquilinear(p: Polynomial, q: Polynomial) -> GaussianRational:
    """Exact value of the integral of conj(p) q against the measure,
    summed coefficient pair by coefficient pair (odd total powers drop)."""
    acc = ZERO
    for a, pa in enumerate(p.coeffs):
        if pa.is_zero():
            continue
        pac = pa.conjugate()
        for b, qb in enumerate(q.coeffs):
            if (a + b) % 2 or qb.is_zero():
                continue
            acc = acc + pac * qb * _moment_scalar(a + b)
    return acc


def weighted_image(F: MatrixPolynomial, W: WeightMatrix) -> MatrixPolynomial:
    """The product poly_part * F; the expensive half of an inner product,
    worth sharing when one F meets many partners."""
    return W.poly_part * F


def inner_product_against_image(G: MatrixPolynomial,
                                Y: MatrixPolynomial) -> MatrixPolynomial:
    """<F, G> given Y = poly_part * F, without forming the full product
    polynomial G* Y: each entry only needs the integral."""
    n = Y.rows
    return MatrixPolynomial.from_constant_rows(
        [[sum((_integral_sesquilinear(G[t, i], Y[t, j]) for t in range(n)),
              ZERO)
          for j in range(Y.cols)] for i in range(G.cols)]
    )


def inner_product(F: MatrixPolynomial, G: MatrixPolynomial,
                  W: WeightMatrix) -> MatrixPolynomial:
    """The matrix inner product <F, G> = integral of G* W F, exact.

    Note the convention: the SECOND argument is conjugated.  The result is
    a constant matrix returned as a MatrixPolynomial.
    """
    return inner_product_against_image(G, weighted_image(F, W))


def gram_matrix(family, W: WeightMatrix, w1: int, w2: int) -> MatrixPolynomial:
    return inner_product(family.PwTilde[w1], family.PwTilde[w2], W)


def trace_norm_check(ell: int) -> Fraction:
    """Norm of the all-ones vector pair under the scalar measure: the
    integrand is the constant ell+1, so the exact answer must be ell+1."""
    total = Fraction(0)
    for _ in range(ell + 1):
        total += chebyshev_moment(0)
    return total


def symmetry_check(op, W: WeightMatrix, family, w_max: int) -> bool:
    """True iff <op F, G> = <F, op G> exactly for all F, G among the
    orthogonal family members up to degree w_max."""
    from .operators import apply
    members = [family.PwTilde[w] for w in range(w_max + 1)]
    images = [apply(op, F) for F in members]
    member_Y = [weighted_image(F, W) for F in members]
    image_Y = [weighted_image(F, W) for F in images]
    for a in range(len(members)):
        for b in range(len(members)):
            lhs = inner_product_against_image(members[b], image_Y[a])
            rhs = inner_product_against_image(images[b], member_Y[a])
            if lhs != rhs:
                return False
    return True


def ldu_decompose(W: WeightMatrix):
    """Split poly_part as L Dg Uf with L lower unit-triangular, Uf upper
    unit-triangular, and Dg diagonal.

    Writing Psi = Delta PsiHat with Delta the constant diagonal of Psi gives
    L = PsiHat*, Uf = PsiHat, and Dg = diag(|Psi_jj|^2 c_j (1-u^2)^j).
    """
    from .family import build_Pw
    ell = W.ell
    st = build_structures(ell)
    Psi = build_Pw(ell, 0)
    delta = []
    for j in range(ell + 1):
        d = Psi[j, j]
        if not d.is_constant() or d.is_zero():
            raise AssertionError("diagonal of the base package must be a "
                                 "nonzero constant")
        delta.append(d.constant_term())
    Uf = MatrixPolynomial.from_function(
        ell + 1, ell + 1, lambda i, j: Psi[i, j] * (ONE / delta[i]), var="u"
    )
    L = Uf.conjugate_transpose()
    one_minus_u2 = Polynomial([1, 0, -1], var="u")
    dg = []
    pw = Polynomial.constant(1, var="u")
    for j in range(ell + 1):
        c = st.UstarU[j, j].constant_term()
        dg.append(pw * (delta[j] * delta[j].conjugate() * c))
        pw = pw * one_minus_u2
    Dg = MatrixPolynomial.diagonal(dg, var="u")
    return L, Dg, Uf


def _rational_roots(coeffs):
    """Rational roots of a polynomial with Fraction coefficients, lowest
    degree first, found by the rational root theorem."""
    # clear denominators to integers
    from math import lcm
    den = lcm(*[c.denominator for c in coeffs]) if coeffs else 1
    ints = [int(c * den) for c in coeffs]
    while ints and ints[-1] == 0:
        ints.pop()
    shift = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        shift += 1
    roots = set()
    if shift:
        roots.add(Fraction(0))
    if not ints:
        return sorted(roots)
    a0, alead = abs(ints[0]), abs(ints[-1])

    def divisors(n):
        out = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.append(d)
                out.append(n // d)
            d += 1
        return out

    for p in divisors(a0):
        for q in divisors(alead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if sum(c * cand ** k for k, c in enumerate(ints)) == 0:
                    roots.add(cand)
    return sorted(roots)


def _minimal_polynomial(B):
    """Minimal polynomial of a constant matrix over Q(i), as monic Fraction
    coefficients (requires the matrix to have rational spectrum here, which
    holds for the self-adjoint commutant elements in play)."""
    n = len(B)
    powers = [exact_linalg.mat_identity(n)]
    for _ in range(n):
        powers.append(exact_linalg.mat_mul(powers[-1], B))
    for deg in range(1, n + 1):
        # look for coefficients x with sum x_t B^t + B^deg = 0
        rows = []
        rhs = []
        for i in range(n):
            for j in range(n):
                rows.append([powers[t][i][j] for t in range(deg)])
                rhs.append(-powers[deg][i][j])
        try:
            x = exact_linalg.solve(rows, rhs)
        except ValueError:
            continue
        coeffs = [xi.re for xi in x] + [Fraction(1)]
        for xi in x:
            if xi.im:
                raise ArithmeticError("minimal polynomial is not rational")
        return coeffs
    raise ArithmeticError("no minimal polynomial found")


@dataclass(frozen=True)
class Reduction:
    """Block-diagonalizing change of basis for a reducible weight."""

    R: MatrixPolynomial
    block_sizes: tuple


def commutant(W: WeightMatrix):
    """Constant matrices commuting with poly_part(u) for every u.

    Returns (dimension, basis, reduction) where reduction holds an exact
    block-diagonalizing matrix R when the dimension exceeds one (columns
    are eigenvectors of a self-adjoint non-scalar commutant element), and
    is None otherwise.
    """
    n = W.ell + 1
    P = W.poly_part
    deg = P.degree() or 0
    power_mats = [P.coefficient_matrix(m) for m in range(deg + 1)]
    # unknowns: entries of A, row-major
    rows = []
    for Pm in power_mats:
        for i in range(n):
            for j in range(n):
                # (A Pm - Pm A)[i, j] = sum_t A[i,t] Pm[t,j] - Pm[i,t] A[t,j]
                row = [ZERO] * (n * n)
                for t in range(n):
                    row[i * n + t] = row[i * n + t] + Pm[t][j]
                    row[t * n + j] = row[t * n + j] - Pm[i][t]
                rows.append(row)
    basis_vecs = exact_linalg.nullspace(rows)
    basis = [[[v[i * n + j] for j in range(n)] for i in range(n)]
             for v in basis_vecs]
    dim = len(basis)
    if dim <= 1:
        return dim, basis, None

    # pick a non-scalar element and make it self-adjoint
    def is_scalar(A):
        c = A[0][0]
        return all(A[i][j] == (c if i == j else ZERO)
                   for i in range(n) for j in range(n))

    A = next(a for a in basis if not is_scalar(a))
    Astar = exact_linalg.mat_conj_transpose(A)
    B = [[A[i][j] + Astar[i][j] for j in range(n)] for i in range(n)]
    if is_scalar(B):
        c = B[0][0]
        half_c = c * GaussianRational(Fraction(1, 2))
        B = [[I * (A[i][j] - (half_c if i == j else ZERO))
              for j in range(n)] for i in range(n)]
    # exact spectral decomposition of the self-adjoint element B
    minpoly = _minimal_polynomial(B)
    roots = _rational_roots(minpoly)
    if len(roots) < len(minpoly) - 1:
        raise ArithmeticError("commutant element has irrational spectrum")
    columns = []
    block_sizes = []
    for t in roots:
        shifted = [[B[i][j] - (GaussianRational(t) if i == j else ZERO)
                    for j in range(n)] for i in range(n)]
        space = exact_linalg.nullspace(shifted)
        if space:
            block_sizes.append(len(space))
            columns.extend(space)
    if len(columns) != n:
        raise ArithmeticError("eigenspaces do not span")
    R = MatrixPolynomial.from_constant_rows(
        [[columns[c][r] for c in range(n)] for r in range(n)]
    )
    return dim, basis, Reduction(R=R, block_sizes=tuple(block_sizes))


def block_offdiagonal_is_zero(W: WeightMatrix, R: MatrixPolynomial,
                              block_sizes) -> bool:
    """Check that R* poly_part R has exact zero off-diagonal blocks for the
    given partition of the columns."""
    conj = R.conjugate_transpose() * W.poly_part * R
    bounds = []
    start = 0
    for b in block_sizes:
        bounds.append((start, start + b))
        start += b
    for bi, (r0, r1) in enumerate(bounds):
        for bj, (c0, c1) in enumerate(bounds):
            if bi == bj:
                continue
            for i in range(r0, r1):
                for j in range(c0, c1):
                    if not conj[i, j].is_zero():
                        return False
    return True
