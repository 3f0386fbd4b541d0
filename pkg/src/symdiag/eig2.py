"""Closed-form diagonalization of a 2x2 real symmetric matrix.

Eigenvalues come from the quadratic formula with a sign convention that
keeps lambda1 attached to a11: interchanging a11 and a22 interchanges the
eigenvalues and flips the sign of the rotation angle.
"""

import math

from .core import EigenDecomp2, SymMat2, wrap_half_pi

# |a11 - a22| and |a12| both below DEGENERACY_EPS * max(1, ||A||_F) means the
# matrix is treated as a scalar multiple of the identity: phi = 0.
DEGENERACY_EPS = 1e-14


def _sign(x):
    # sign(0) = +1 keeps the lambda1 >= lambda2 ordering in the tie case
    return -1.0 if x < 0.0 else 1.0


def eigenvalues2(a: SymMat2):
    """Both eigenvalues, lambda1 carrying the sign(a11 - a22) branch."""
    t = a.a11 + a.a22
    r = _sign(a.a11 - a.a22) * math.hypot(a.a11 - a.a22, 2.0 * a.a12)
    return 0.5 * (t + r), 0.5 * (t - r)


def rotation_angle2(a: SymMat2):
    """Anti-clockwise angle of the eigenvectors w.r.t. the basis, in (-pi/2, pi/2].

    Half the quadrant-aware arctangent of 2*a12 over a11 - a22, evaluated on
    sign-corrected arguments so the branch stays consistent with the
    eigenvalue convention (the plain single-argument arctangent would, but
    divides by zero when a11 = a22).
    """
    eps = DEGENERACY_EPS * a.scale()
    if abs(a.a11 - a.a22) <= eps and abs(a.a12) <= eps:
        return 0.0
    s = _sign(a.a11 - a.a22)
    return wrap_half_pi(0.5 * math.atan2(2.0 * a.a12 * s, (a.a11 - a.a22) * s))


def diagonalize2(a: SymMat2) -> EigenDecomp2:
    """Full closed-form decomposition A = D . diag(l1, l2) . D^T."""
    l1, l2 = eigenvalues2(a)
    phi = rotation_angle2(a)
    return EigenDecomp2.from_angle(l1, l2, phi)
