"""Terminating hypergeometric series and the classical families built on them.

Everything here is a finite sum of Pochhammer ratios evaluated exactly, so
the same code path serves as its own oracle for the closed-form identities
checked in the tests.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .gaussian import GaussianRational, ZERO, ONE
from .polynomials import Polynomial


def _as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("hypergeometric parameters must be rational")


class HypergeometricSpec:
    """Parameter block for a terminating pFq at a fixed argument.

    The argument is either a GaussianRational or the string "s", in which
    case evaluation yields a Polynomial in the variable s.
    """

    def __init__(self, numerator, denominator, argument):
        self.numerator = [_as_rational(a) for a in numerator]
        self.denominator = [_as_rational(b) for b in denominator]
        self.argument = argument
        self._validate()

    def _termination_order(self) -> int:
        stops = [-int(a) for a in self.numerator
                 if a <= 0 and a.denominator == 1]
        if not stops:
            raise ValueError("series does not terminate: no nonpositive "
                             "integer numerator parameter")
        return min(stops)

    def _validate(self):
        n_terms = self._termination_order()
        for b in self.denominator:
            if b <= 0 and b.denominator == 1 and -int(b) < n_terms:
                raise ValueError("denominator parameter hits zero before "
                                 "the series terminates")


def hyp_terminating(spec: HypergeometricSpec):
    """Sum the terminating series exactly.

    Returns a GaussianRational for a numeric argument, or a Polynomial in s
    for the symbolic argument "s".  Pochhammer ratios are accumulated
    incrementally to avoid factorial blowup.
    """
    n_terms = spec._termination_order()
    symbolic = spec.argument == "s"
    if symbolic:
        z = Polynomial.variable("s")
        acc = Polynomial.constant(1, var="s")
        term = Polynomial.constant(1, var="s")
    else:
        z = GaussianRational.of(spec.argument) if not isinstance(
            spec.argument, GaussianRational) else spec.argument
        acc = ONE
        term = ONE
    for m in range(n_terms):
        ratio = Fraction(1, m + 1)
        for a in spec.numerator:
            ratio *= a + m
        for b in spec.denominator:
            ratio /= b + m
        term = term * z * GaussianRational(ratio)
        acc = acc + term
    return acc


def hyp2f1_poly_u(a, b, c) -> Polynomial:
    """The terminating 2F1(a, b; c; (1-u)/2) expanded as a Polynomial in u."""
    p = hyp_terminating(HypergeometricSpec([a, b], [c], "s"))
    # s = (1-u)/2, exact affine substitution
    return p.substitute_affine(Fraction(-1, 2), Fraction(1, 2), "u")


def gegenbauer(n: int, lam: int) -> Polynomial:
    """Gegenbauer polynomial C_n^lam(u) as an exact Polynomial in u."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    lead = comb(n + 2 * lam - 1, n)
    return hyp2f1_poly_u(-n, n + 2 * lam, Fraction(2 * lam + 1, 2)) * lead


def hahn_value(k: int, j: int, ell: int) -> GaussianRational:
    """Value 3F2(-k, -j, k+1; 1, -ell; 1), the (j, k) entry of the Hahn
    matrix U."""
    if not (0 <= j <= ell and 0 <= k <= ell):
        raise ValueError("indices must lie in [0, ell]")
    spec = HypergeometricSpec([-k, -j, k + 1], [1, -ell], GaussianRational(1))
    return hyp_terminating(spec)


def racah_value(k: int, j: int, alpha, beta, gamma, delta,
                N: int) -> GaussianRational:
    """Racah polynomial value R_k(lambda(j)) with lambda(x) = x(x+gamma+
    delta+1), evaluated as a terminating 4F3 at unit argument."""
    alpha = _as_rational(alpha)
    beta = _as_rational(beta)
    gamma = _as_rational(gamma)
    delta = _as_rational(delta)
    if not any(p == -N for p in (alpha + 1, beta + delta + 1, gamma + 1)):
        raise ValueError("one of alpha+1, beta+delta+1, gamma+1 must be -N")
    if not 0 <= k <= N:
        raise ValueError("k out of range")
    spec = HypergeometricSpec(
        [-k, k + alpha + beta + 1, -j, j + gamma + delta + 1],
        [alpha + 1, beta + delta + 1, gamma + 1],
        GaussianRational(1),
    )
    return hyp_terminating(spec)


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial (a)_n over the rationals."""
    a = _as_rational(a)
    out = Fraction(1)
    for m in range(n):
        out *= a + m
    return out
