"""Independent reference implementations for verifying the closed-form solvers.

Nothing here shares a code path with the trigonometric formulas: the
eigensolver is classical cyclic Jacobi, and the cubic roots come from
bracketed root finding on the characteristic polynomial.  Performance is a
non-goal; reliability is the point.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .core import SymMat2, SymMat3
from .eig3 import CubicCoeffs

MAX_SWEEPS = 100
# |poly| at a critical point below this (times scale^3) marks a double root
DOUBLE_ROOT_POLY_EPS = 1e-11


class NoConvergence(RuntimeError):
    """Jacobi failed to converge; unreachable for symmetric input in practice."""


class ComplexRootsDetected(ValueError):
    """The cubic is not real-rooted: its coefficients did not come from a
    symmetric matrix."""


@dataclass(frozen=True)
class JacobiResult:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int
    offdiag_final: float


def _offdiag_sq(a):
    n = a.shape[0]
    return sum(a[i, j] ** 2 for i in range(n) for j in range(i + 1, n))


def jacobi_eigen(a, tol=1e-13) -> JacobiResult:
    """Cyclic-by-row Jacobi rotations until the off-diagonal mass is gone.

    Accepts SymMat2, SymMat3 or a plain symmetric ndarray.  Stops when the
    squared off-diagonal sum drops to tol^2 * max(1, ||A||_F^2).
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if isinstance(a, (SymMat2, SymMat3)):
        m = a.to_array()
    else:
        m = np.array(a, dtype=float)
    n = m.shape[0]
    v = np.eye(n)
    thresh = tol * tol * max(1.0, float(np.sum(m * m)))

    sweeps = 0
    while _offdiag_sq(m) > thresh:
        if sweeps >= MAX_SWEEPS:
            raise NoConvergence(f"no convergence after {MAX_SWEEPS} sweeps")
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                if apq == 0.0:
                    continue
                # stable rotation: smaller root of t^2 + 2 t theta - 1 = 0
                theta = 0.5 * (m[q, q] - m[p, p]) / apq
                t = math.copysign(1.0, theta) / (abs(theta)
                                                 + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                j = np.eye(n)
                j[p, p] = j[q, q] = c
                j[p, q] = s
                j[q, p] = -s
                m = j.T @ m @ j
                v = v @ j
        sweeps += 1
    return JacobiResult(eigenvalues=np.diag(m).copy(), eigenvectors=v,
                        sweeps=sweeps, offdiag_final=math.sqrt(_offdiag_sq(m)))


def cubic_roots_reference(coeffs: CubicCoeffs):
    """Three real roots of l^3 - b l^2 + c l + d by bracketing and bisection.

    The critical points (b +- sqrt(p))/3 split the line into three brackets;
    all roots lie within (b +- 2 sqrt(p))/3.  A near-zero polynomial value at
    a critical point is a double root there.  Deliberately slow and
    unconditionally reliable.
    """
    b, c, d = coeffs.b, coeffs.c, coeffs.d

    def poly(x):
        return ((x - b) * x + c) * x + d

    s = coeffs.scale()
    p = b * b - 3.0 * c
    if p < -1e-12 * s * s:
        # p is a sum of squares for any symmetric matrix; a genuinely
        # negative value means one real and two complex roots
        raise ComplexRootsDetected("cubic has complex roots (p < 0)")
    p = max(p, 0.0)
    if p <= 9.0 * (1e-12 * s) ** 2:
        lam = b / 3.0
        return (lam, lam, lam)
    sp = math.sqrt(p)
    x_lo = (b - sp) / 3.0   # local maximum
    x_hi = (b + sp) / 3.0   # local minimum
    f_lo = poly(x_lo)
    f_hi = poly(x_hi)
    ptol = DOUBLE_ROOT_POLY_EPS * s**3
    if f_lo < -ptol or f_hi > ptol:
        raise ComplexRootsDetected("cubic has complex roots")

    margin = max(1e-8 * s, 1e-8 * sp)
    lo = (b - 2.0 * sp) / 3.0 - margin
    hi = (b + 2.0 * sp) / 3.0 + margin

    if abs(f_lo) <= ptol:
        # double root at the local maximum, simple root to the right
        r = brentq(poly, x_hi, hi, xtol=1e-15, rtol=4 * math.ulp(1.0))
        return (x_lo, x_lo, r)
    if abs(f_hi) <= ptol:
        r = brentq(poly, lo, x_lo, xtol=1e-15, rtol=4 * math.ulp(1.0))
        return (r, x_hi, x_hi)
    kw = dict(xtol=1e-15, rtol=4 * math.ulp(1.0))
    return (brentq(poly, lo, x_lo, **kw),
            brentq(poly, x_lo, x_hi, **kw),
            brentq(poly, x_hi, hi, **kw))


def reconstruct(d, lambdas):
    """D . diag(lambdas) . D^T for a decomposition candidate."""
    d = np.asarray(d, dtype=float)
    if float(np.linalg.norm(d.T @ d - np.eye(d.shape[0]))) > 1e-10:
        raise ValueError("d is not orthogonal within 1e-10")
    return d @ np.diag(lambdas) @ d.T


def residuals(a, dec):
    """(relative reconstruction residual, orthogonality defect, eigenvector residuals).

    Works for both EigenDecomp2 and EigenDecomp3.
    """
    m = a.to_array()
    scale = a.scale()
    if hasattr(dec, "lambda3"):
        lambdas = (dec.lambda1, dec.lambda2, dec.lambda3)
    else:
        lambdas = (dec.lambda1, dec.lambda2)
    d = dec.d
    recon = d @ np.diag(lambdas) @ d.T
    recon_rel = float(np.linalg.norm(recon - m)) / scale
    ortho = float(np.linalg.norm(d.T @ d - np.eye(d.shape[0])))
    eigvec_res = [float(np.linalg.norm(m @ d[:, i] - lam * d[:, i])) / scale
                  for i, lam in enumerate(lambdas)]
    return recon_rel, ortho, eigvec_res
