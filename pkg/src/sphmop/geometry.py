"""Floating-point group layer: the double cover SO(4) -> SO(3) x SO(3), the
representation pi_ell of SO(3), and numeric reconstruction of the matrix
spherical functions on the group.

Everything here is double precision; tolerances are 1e-9 for single
operations and 1e-7 for composites, on unit-scale matrices.
"""

from __future__ import annotations

import numpy as np
from scipy.linalg import expm
from scipy.spatial.transform import Rotation

from .family import eval_H

# ordered basis of the second exterior power of R^4
_PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

# columns: the orthonormal eigenbasis splitting the exterior square into the
# two 3-dimensional invariant subspaces (self-dual and anti-self-dual); the
# i-th self-dual vector is e_i ^ e_4 plus its Hodge dual
_SQ = 1.0 / np.sqrt(2.0)
_BASIS = _SQ * np.array([
    # v1    v2    v3    u1    u2    u3
    [0.0,  0.0,  1.0,  0.0,  0.0, -1.0],   # e1^e2
    [0.0, -1.0,  0.0,  0.0,  1.0,  0.0],   # e1^e3
    [1.0,  0.0,  0.0,  1.0,  0.0,  0.0],   # e1^e4
    [1.0,  0.0,  0.0, -1.0,  0.0,  0.0],   # e2^e3
    [0.0,  1.0,  0.0,  0.0,  1.0,  0.0],   # e2^e4
    [0.0,  0.0,  1.0,  0.0,  0.0,  1.0],   # e3^e4
])


def check_rotation(g: np.ndarray, tol: float = 1e-9):
    g = np.asarray(g, dtype=float)
    n = g.shape[0]
    if g.shape != (n, n) or n not in (3, 4):
        raise ValueError("expected a 3x3 or 4x4 matrix")
    if np.max(np.abs(g.T @ g - np.eye(n))) > tol:
        raise ValueError("matrix is not orthogonal within tolerance")
    if abs(np.linalg.det(g) - 1.0) > tol:
        raise ValueError("determinant is not 1 within tolerance")
    return g


def wedge_action(g: np.ndarray) -> np.ndarray:
    """The induced action of g on the exterior square, in the pair basis."""
    q = np.empty((6, 6))
    for a, (k, l) in enumerate(_PAIRS):
        for b, (i, j) in enumerate(_PAIRS):
            q[a, b] = g[k, i] * g[l, j] - g[l, i] * g[k, j]
    return q


def wedge_cover(g: np.ndarray, tol: float = 1e-9):
    """The double cover map: g in SO(4) to the pair (a, b) in
    SO(3) x SO(3), with kernel {I, -I}."""
    g = check_rotation(g, tol)
    if g.shape != (4, 4):
        raise ValueError("wedge_cover needs a 4x4 rotation")
    q6 = _BASIS.T @ wedge_action(g) @ _BASIS
    if np.max(np.abs(q6[:3, 3:])) > tol or np.max(np.abs(q6[3:, :3])) > tol:
        raise ValueError("off-diagonal blocks do not vanish; input is not "
                         "a rotation within tolerance")
    return q6[:3, :3].copy(), q6[3:, 3:].copy()


class RepSO3:
    """The (ell+1)-dimensional irreducible representation of SO(3) via its
    complexified Lie algebra sl(2)."""

    def __init__(self, ell: int):
        if ell < 0:
            raise ValueError("ell must be nonnegative")
        self.ell = ell
        n = ell + 1
        self.h = np.diag([float(ell - 2 * j) for j in range(n)]).astype(complex)
        self.e = np.zeros((n, n), dtype=complex)
        self.f = np.zeros((n, n), dtype=complex)
        for j in range(1, n):
            self.e[j - 1, j] = ell - j + 1
        for j in range(n - 1):
            self.f[j + 1, j] = j + 1
        # the real rotation generators expressed through e, f, h
        self.Y1 = -0.5j * (self.e + self.f)
        self.Y2 = -0.5 * (self.e - self.f)
        self.Y3 = 0.5j * self.h


def rep_exp(rep: RepSO3, k: np.ndarray) -> np.ndarray:
    """pi_ell(k) through the axis-angle factorization of k.

    The rotation vector r of k satisfies k = exp([r]_x), and [r]_x
    corresponds to -r1 Y3 + r2 Y2 - r3 Y1 under the identification of the
    rotation generators fixed by RepSO3 (checked against the diagonal
    one-parameter subgroup in the tests).
    """
    k = check_rotation(np.asarray(k, dtype=float))
    if k.shape != (3, 3):
        raise ValueError("rep_exp needs a 3x3 rotation")
    r = Rotation.from_matrix(k).as_rotvec()
    gen = -r[0] * rep.Y3 + r[1] * rep.Y2 - r[2] * rep.Y1
    return expm(gen)


def phi_pi(rep: RepSO3, g: np.ndarray) -> np.ndarray:
    """The auxiliary function pi_ell(a(g)) on SO(4)."""
    a, _ = wedge_cover(g)
    return rep_exp(rep, a)


def section_matrix(y: np.ndarray) -> np.ndarray:
    """A rotation carrying (||y||, 0, 0) to y, from an explicit chart that
    excludes the ray y1 <= 0, y2 = y3 = 0."""
    y = np.asarray(y, dtype=float)
    norm = np.linalg.norm(y)
    if norm < 1e-13:
        return np.eye(3)
    y1, y2, y3 = y
    if abs(y2) < 1e-13 and abs(y3) < 1e-13 and y1 <= 0:
        # excluded ray of the chart: any rotation by pi about an axis in
        # the plane orthogonal to e1 works
        return np.diag([-1.0, -1.0, 1.0])
    d = norm + y1
    A = np.array([
        [y1, -y2, -y3],
        [y2, norm - y2 * y2 / d, -y2 * y3 / d],
        [y3, -y2 * y3 / d, norm - y3 * y3 / d],
    ]) / norm
    return A


def embed_so3(k: np.ndarray) -> np.ndarray:
    out = np.eye(4)
    out[:3, :3] = k
    return out


def reconstruct_phi(ell: int, w: int, k: int, g: np.ndarray) -> np.ndarray:
    """Numeric value of the spherical function Phi(g) = H(g) pi(a(g)).

    The coset point is x = g e4 on the 3-sphere; writing x = k0 (y0, u)
    with y0 = (sqrt(1-u^2), 0, 0) and k0 the section rotation, H(g) is the
    conjugate by pi(k0) of the diagonal matrix of the one-variable vector
    H(u)."""
    g = check_rotation(np.asarray(g, dtype=float))
    if g.shape != (4, 4):
        raise ValueError("reconstruct_phi needs a 4x4 rotation")
    x = g[:, 3]
    u = float(np.clip(x[3], -1.0, 1.0))
    k0 = section_matrix(x[:3])
    rep = RepSO3(ell)
    pik0 = rep_exp(rep, k0)
    hdiag = np.diag(eval_H(ell, w, k, u))
    H = pik0 @ hdiag @ np.linalg.inv(pik0)
    return H @ phi_pi(rep, g)


def plane_rotation_14(theta: float) -> np.ndarray:
    """The one-parameter subgroup rotating the (1, 4) coordinate plane;
    its orbit through e4 parameterizes the full meridian u = cos(theta)."""
    g = np.eye(4)
    c, s = np.cos(theta), np.sin(theta)
    g[0, 0] = c
    g[0, 3] = s
    g[3, 0] = -s
    g[3, 3] = c
    return g


def random_rotation(rng, dim: int) -> np.ndarray:
    """Haar-ish random rotation from the QR decomposition of a Gaussian
    matrix, with the sign fix making it det +1."""
    m = rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(m)
    q = q @ np.diag(np.sign(np.diag(r)))
    if np.linalg.det(q) < 0:
        q[:, [0, 1]] = q[:, [1, 0]]
    return q
