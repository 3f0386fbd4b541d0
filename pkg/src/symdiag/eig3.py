"""Closed-form diagonalization of a 3x3 real symmetric matrix.

Eigenvalues come from the trigonometric solution of the characteristic
cubic; the orthogonal factor D is recovered as three rotation angles
(phi1, phi2, phi3) about the fixed basis axes.  The squared cosines of
phi2 and phi3 are rational in the matrix entries and eigenvalues, which
leaves four sign combinations; consistency of two independent estimates of
phi1 (one from each of two 2-vector identities) selects the combination.

Eigenvalues are kept in the order the angle equations assume:
lambda1 >= lambda3 >= lambda2 from the cosine placement in the cubic
solution, or (repeated, repeated, distinct) on the double-root branch.
"""

import math
from dataclasses import dataclass, replace

import numpy as np

from .core import (
    Angles3,
    Branch,
    EigenDecomp3,
    SolveReport,
    SymMat3,
    angle_of,
    compose_rotation,
    rot3x,
    rot3y,
    wrapped_diff_mod_pi,
)

# f-vector norms at or below F_ZERO_EPS * max(1, ||A||_F) are treated as zero.
F_ZERO_EPS = 1e-14
# Eigenvalue gaps below DEGENERATE_EPS * scale poison the v/w quotients.
DEGENERATE_EPS = 1e-12
# Below V_ZERO_EPS the w quotient is rounding noise; the v = 0 rule gives w = 1.
V_ZERO_EPS = 1e-12
# Domain arguments (arccos operands, squared cosines) may round past their
# boundary by at most CLAMP_SLACK; anything worse means misclassification.
CLAMP_SLACK = 1e-9
# Two sign combinations tie when their wrapped differences are this close.
TIE_EPS = 1e-12
# A non-tied runner-up inside NEAR_TIE_EPS of the winner is surfaced.
NEAR_TIE_EPS = 1e-6


class DegenerateEigenvalues(ValueError):
    """An eigenvalue gap needed by the generic branch is numerically zero."""


class BothFVectorsZero(ValueError):
    """f1 = f2 = 0: the matrix is diagonal with two equal diagonal entries."""


class NotDoubleRoot(ValueError):
    """degenerate_double was called with all three eigenvalues equal."""


class DomainExcursion(ValueError):
    """A squared cosine left [0, 1] beyond slack: the branch classification
    does not fit this matrix."""


@dataclass(frozen=True)
class CubicCoeffs:
    """Coefficients of the characteristic cubic l^3 - b l^2 + c l + d = 0."""

    b: float
    c: float
    d: float

    def scale(self):
        # sum of squared eigenvalues is b^2 - 2c
        return max(1.0, math.sqrt(max(self.b * self.b - 2.0 * self.c, 0.0)))


@dataclass(frozen=True)
class PQ:
    """Cubic invariants p, q and the arccos angle delta (absent near p = 0)."""

    p: float
    q: float
    delta: float | None = None


def triple_root_threshold(scale):
    """p at or below this is the triple-root case (p scales as A^2)."""
    return 9.0 * (1e-12 * scale) ** 2


def discriminant_threshold(scale):
    """4p^3 - q^2 at or below this is a double root (discriminant scales as A^6).

    The computed discriminant of an exact double root is rounding noise up
    to a few 1e-14 * scale^6; random matrices with all gaps resolvable sit
    above ~1e-6 * scale^6.  The constant splits those populations.
    """
    return 1e-12 * scale**6


def char_coeffs(a: SymMat3) -> CubicCoeffs:
    """Characteristic-cubic coefficients from the matrix entries."""
    b = a.a11 + a.a22 + a.a33
    c = (a.a11 * a.a22 + a.a11 * a.a33 + a.a22 * a.a33
         - a.a12**2 - a.a13**2 - a.a23**2)
    d = (a.a11 * a.a23**2 + a.a22 * a.a13**2 + a.a33 * a.a12**2
         - a.a11 * a.a22 * a.a33 - 2.0 * a.a12 * a.a13 * a.a23)
    return CubicCoeffs(b=b, c=c, d=d)


def pq_expanded(a: SymMat3) -> tuple:
    """p and q evaluated directly from the matrix entries (the expanded forms).

    Algebraically identical to the b,c,d route; kept as an independent
    evaluation path so the two can be checked against each other.
    """
    off2 = a.a12**2 + a.a13**2 + a.a23**2
    p = 0.5 * ((a.a11 - a.a22) ** 2 + (a.a11 - a.a33) ** 2
               + (a.a22 - a.a33) ** 2) + 3.0 * off2
    q = (18.0 * (a.a11 * a.a22 * a.a33 + 3.0 * a.a12 * a.a13 * a.a23)
         + 2.0 * (a.a11**3 + a.a22**3 + a.a33**3)
         + 9.0 * (a.a11 + a.a22 + a.a33) * off2
         - 3.0 * (a.a11 + a.a22) * (a.a11 + a.a33) * (a.a22 + a.a33)
         - 27.0 * (a.a11 * a.a23**2 + a.a22 * a.a13**2 + a.a33 * a.a12**2))
    return p, q


def compute_pq(coeffs: CubicCoeffs) -> PQ:
    """Cubic invariants p = b^2 - 3c, q = 2b^3 - 9bc - 27d and the angle delta.

    p is a sum of squares, so a tiny negative value is rounding and is
    clamped to zero.  delta is only defined above the triple-root threshold.
    Near a double root q/(2 sqrt(p^3)) legitimately rounds past +-1 and is
    clamped; an excursion beyond CLAMP_SLACK indicates broken input.
    """
    b, c = coeffs.b, coeffs.c
    s = coeffs.scale()
    p = b * b - 3.0 * c
    q = 2.0 * b**3 - 9.0 * b * c - 27.0 * coeffs.d
    if p < 0.0:
        if p < -1e-12 * max(1.0, b * b + abs(c)):
            raise ValueError(f"p = {p} is negative beyond rounding tolerance")
        p = 0.0
    if p <= triple_root_threshold(s):
        return PQ(p=p, q=q, delta=None)
    if 4.0 * p**3 - q * q <= discriminant_threshold(s):
        # double root: the arccos argument is +-1 up to (possibly large
        # relative) rounding in q; the sign of q decides the endpoint
        return PQ(p=p, q=q, delta=0.0 if q >= 0.0 else math.pi)
    arg = q / (2.0 * math.sqrt(p**3))
    if abs(arg) > 1.0:
        if abs(arg) > 1.0 + CLAMP_SLACK:
            raise ValueError(f"arccos argument {arg} out of range beyond slack")
        arg = 1.0 if arg > 0.0 else -1.0
    return PQ(p=p, q=q, delta=math.acos(arg))


def eigenvalues3(coeffs: CubicCoeffs, pq: PQ) -> tuple:
    """The three real roots via the trigonometric formulas.

    The cosine placement orders them lambda1 >= lambda3 >= lambda2
    (delta/3 lies in [0, pi/3]); no sorting is applied here.
    """
    b = coeffs.b
    if pq.delta is None:
        lam = b / 3.0
        return (lam, lam, lam)
    sp = math.sqrt(pq.p)
    third = pq.delta / 3.0
    l1 = (b + 2.0 * sp * math.cos(third)) / 3.0
    l2 = (b + 2.0 * sp * math.cos(third + 2.0 * math.pi / 3.0)) / 3.0
    l3 = (b + 2.0 * sp * math.cos(third - 2.0 * math.pi / 3.0)) / 3.0
    return (l1, l2, l3)


def _clamp_unit(x, what, slack=CLAMP_SLACK):
    if x < -slack or x > 1.0 + slack:
        raise DomainExcursion(f"{what} = {x} outside [0, 1] beyond slack")
    return min(max(x, 0.0), 1.0)


def compute_v(a: SymMat3, lambdas) -> float:
    """v = cos(phi2)^2, rational in the entries and eigenvalues.

    Requires the generic branch: the denominator gaps (l2 - l3)(l3 - l1)
    must be resolvable, else the caller misrouted a degenerate matrix.
    """
    l1, l2, l3 = lambdas
    tol = DEGENERATE_EPS * max(1.0, abs(l1), abs(l2), abs(l3))
    if abs(l2 - l3) <= tol or abs(l3 - l1) <= tol:
        raise DegenerateEigenvalues("gap (l2-l3) or (l3-l1) below tolerance")
    num = (a.a12**2 + a.a13**2
           + (a.a11 - l3) * (a.a11 + l3 - l1 - l2))
    return _clamp_unit(num / ((l2 - l3) * (l3 - l1)), "v")


def compute_w(a: SymMat3, lambdas, v) -> float:
    """w = cos(phi3)^2; for v = 0 the quotient degenerates and w = 1."""
    if v <= V_ZERO_EPS:
        return 1.0
    l1, l2, l3 = lambdas
    tol = DEGENERATE_EPS * max(1.0, abs(l1), abs(l2), abs(l3))
    if abs(l1 - l2) <= tol:
        raise DegenerateEigenvalues("gap (l1-l2) below tolerance")
    return _clamp_unit((a.a11 - l3 + (l3 - l2) * v) / ((l1 - l2) * v), "w")


def f_vectors(a: SymMat3):
    """The two entry-built 2-vectors used to recover phi1."""
    f1 = np.array([a.a12, -a.a13])
    f2 = np.array([a.a22 - a.a33, -2.0 * a.a23])
    return f1, f2


def g_vectors(lambdas, phi2, phi3, v, w):
    """The eigenvalue/angle-built 2-vectors: g1 = R(phi1) f1, g2 = R(2 phi1) f2."""
    l1, l2, l3 = lambdas
    s2phi2 = math.sin(2.0 * phi2)
    s2phi3 = math.sin(2.0 * phi3)
    g1 = np.array([0.5 * (l1 - l2) * math.cos(phi2) * s2phi3,
                   0.5 * ((l1 - l2) * w + l2 - l3) * s2phi2])
    g2 = np.array([(l1 - l2) * (1.0 + (v - 2.0) * w) + (l2 - l3) * v,
                   (l1 - l2) * math.sin(phi2) * s2phi3])
    return g1, g2


def _rotated_angle(cos_psi, sin_psi, gx, gy):
    # angle of R(-psi) . g without building the matrix
    return angle_of((cos_psi * gx + sin_psi * gy, -sin_psi * gx + cos_psi * gy))


def _phi1_candidates(n1, n2, tol_f, cs1, cs2, g1, g2):
    """phi1 estimate from each f/g route; NaN where the route is unavailable.

    cs1/cs2 are the (cos, sin) of the f-vector angles psi1, psi2.  A route
    needs both its f-vector above tolerance and its g-vector nonzero; the
    latter can underflow to exactly zero for nearly diagonal matrices whose
    angle quotients round to their endpoints.
    """
    p11 = (_rotated_angle(cs1[0], cs1[1], g1[0], g1[1])
           if n1 > tol_f and (g1[0] != 0.0 or g1[1] != 0.0) else math.nan)
    p12 = (0.5 * _rotated_angle(cs2[0], cs2[1], g2[0], g2[1])
           if n2 > tol_f and (g2[0] != 0.0 or g2[1] != 0.0) else math.nan)
    return p11, p12


def _assemble_angles(n1, n2, tol_f, p11, p12, s2, s3, phi2_mag, phi3_mag):
    """Final triple with a consistent phi1 representative.

    The decomposition is invariant under (phi1 + pi, -phi2, -phi3), so when
    the recovered phi1 lies outside (-pi/2, pi/2] wrapping it back must flip
    both selected signs.  The f1/g1 route carries the full mod-2pi value of
    phi1 and decides the flip whenever it is available; the f2/g2 route only
    determines phi1 mod pi (its representative already lies in range, and
    with f1 = 0 the sign choice is immaterial).
    """
    if math.isnan(p11):
        phi1 = 0.0 if math.isnan(p12) else p12
    elif math.isnan(p12):
        phi1 = p11
    else:
        phi1 = p11 if n1 >= n2 else p12
    if not math.isnan(p11) and (p11 > 0.5 * math.pi or p11 <= -0.5 * math.pi):
        s2, s3 = -s2, -s3
    return Angles3(phi1=phi1, phi2=s2 * phi2_mag, phi3=s3 * phi3_mag), (s2, s3)


def resolve_signs(a: SymMat3, lambdas, v, w):
    """Select the signs of phi2 and phi3 and recover phi1.

    Enumerates the four combinations (+-arccos sqrt(v), +-arccos sqrt(w)).
    With both f-vectors nonzero the combination minimizing the wrapped
    mod-pi difference between the two phi1 estimates wins (ties broken in a
    fixed preference order); with exactly one nonzero any combination is
    valid and (+,+) is used.  Both f-vectors zero means the matrix is
    diagonal with a repeated entry and must go to the double-root branch.
    """
    scale = a.scale()
    tol_f = F_ZERO_EPS * scale
    f1x, f1y = a.a12, -a.a13
    f2x, f2y = a.a22 - a.a33, -2.0 * a.a23
    n1 = math.hypot(f1x, f1y)
    n2 = math.hypot(f2x, f2y)
    if n1 <= tol_f and n2 <= tol_f:
        raise BothFVectorsZero("matrix is diagonal with two equal entries")

    phi2_mag = math.acos(math.sqrt(_clamp_unit(v, "v")))
    phi3_mag = math.acos(math.sqrt(_clamp_unit(w, "w")))
    cs1 = (f1x / n1, f1y / n1) if n1 > tol_f else (1.0, 0.0)
    cs2 = (f2x / n2, f2y / n2) if n2 > tol_f else (1.0, 0.0)

    l1, l2, l3 = lambdas
    c2, s2m = math.cos(phi2_mag), math.sin(phi2_mag)
    s3x2 = math.sin(2.0 * phi3_mag)
    s2x2 = 2.0 * s2m * c2
    g1y_mag = 0.5 * ((l1 - l2) * w + l2 - l3) * s2x2
    g1x_mag = 0.5 * (l1 - l2) * c2 * s3x2
    g2x = (l1 - l2) * (1.0 + (v - 2.0) * w) + (l2 - l3) * v
    g2y_mag = (l1 - l2) * s2m * s3x2

    combos = ((1, 1), (1, -1), (-1, 1), (-1, -1))
    candidates = []
    for s2, s3 in combos:
        # cos(phi2), cos(2 phi3), w, v are even in the signs; the sines flip
        g1 = (s3 * g1x_mag, s2 * g1y_mag)
        g2 = (g2x, s2 * s3 * g2y_mag)
        p11, p12 = _phi1_candidates(n1, n2, tol_f, cs1, cs2, g1, g2)
        diff = (wrapped_diff_mod_pi(p11, p12)
                if n1 > tol_f and n2 > tol_f else math.nan)
        candidates.append((s2, s3, p11, p12, diff))

    near_tie = False
    scored = [c for c in candidates if not math.isnan(c[4])]
    if scored:
        best = min(c[4] for c in scored)
        # first combo within TIE_EPS of the minimum wins (preference order)
        sel = next(c for c in scored if c[4] <= best + TIE_EPS)
        others = [c[4] for c in scored if c is not sel]
        if others:
            near_tie = TIE_EPS < (min(others) - sel[4]) <= NEAR_TIE_EPS
    else:
        # a single usable route (or none): any combination is valid
        sel = candidates[0]

    s2, s3, p11, p12, _ = sel

    # Near 0 or pi/2 the arccos(sqrt(.)) magnitudes square-root-amplify
    # rounding in v and w.  The rotated identities R(phi1) f1 = (g1x, g1y)
    # and R(2 phi1) f2 = (g2x, g2y) measure sin(2 phi3) and sin(2 phi2)
    # linearly, so swap those in away from pi/4.  A route is only used when
    # its phi1-error amplification (the orthogonal h-component over twice
    # the denominator) stays below one half, so that two passes of
    # alternating phi1 re-estimation and magnitude refinement contract.
    if n1 > tol_f:
        gap12 = l1 - l2
        gap23 = l2 - l3
        for _ in range(2):
            phi1_est = p12 if (math.isnan(p11) or (n2 > n1
                               and not math.isnan(p12))) else p11
            if math.isnan(phi1_est):
                break
            c1, s1 = math.cos(phi1_est), math.sin(phi1_est)
            hx = c1 * f1x - s1 * f1y
            hy = s1 * f1x + c1 * f1y
            c1d, s1d = math.cos(2.0 * phi1_est), math.sin(2.0 * phi1_est)
            h2x = c1d * f2x - s1d * f2y
            h2y = s1d * f2x + c1d * f2y
            if phi3_mag < 0.125 * math.pi or phi3_mag > 0.375 * math.pi:
                den_a = abs(0.5 * gap12 * c2)
                den_b = abs(gap12 * s2m)
                k_a = abs(hy) / (2.0 * den_a) if den_a > 0.0 else math.inf
                k_b = (abs(h2x) / den_b
                       if n2 > tol_f and den_b > 0.0 else math.inf)
                est = math.inf
                if k_a <= min(k_b, 0.5):
                    est = hx / (0.5 * gap12 * c2)
                elif k_b <= 0.5:
                    est = h2y / (gap12 * s2m)
                if math.isfinite(est):
                    half = 0.5 * math.asin(min(abs(est), 1.0))
                    phi3_mag = (half if phi3_mag <= 0.25 * math.pi
                                else 0.5 * math.pi - half)
                    w = math.cos(phi3_mag) ** 2
            if phi2_mag < 0.125 * math.pi or phi2_mag > 0.375 * math.pi:
                den = 0.5 * (gap12 * w + gap23)
                if abs(den) > 0.0 and abs(hx) / (2.0 * abs(den)) <= 0.5:
                    half = 0.5 * math.asin(min(abs(hy / den), 1.0))
                    phi2_mag = (half if phi2_mag <= 0.25 * math.pi
                                else 0.5 * math.pi - half)
                    v = math.cos(phi2_mag) ** 2
            c2, s2m = math.cos(phi2_mag), math.sin(phi2_mag)
            s3x2 = math.sin(2.0 * phi3_mag)
            s2x2 = 2.0 * s2m * c2
            g1 = (s3 * 0.5 * gap12 * c2 * s3x2,
                  s2 * 0.5 * (gap12 * w + gap23) * s2x2)
            g2 = (gap12 * (1.0 + (v - 2.0) * w) + gap23 * v,
                  s2 * s3 * gap12 * s2m * s3x2)
            p11, p12 = _phi1_candidates(n1, n2, tol_f, cs1, cs2, g1, g2)

    angles, signs = _assemble_angles(n1, n2, tol_f, p11, p12,
                                     s2, s3, phi2_mag, phi3_mag)
    report = SolveReport(selected_signs=signs,
                         phi1_candidates=tuple(candidates),
                         f1_norm=n1, f2_norm=n2, near_tie=near_tie)
    return angles, report


def degenerate_double(a: SymMat3, lam, lam3):
    """Angles for the double-root case lambda1 = lambda2 = lam.

    Here cos(phi2)^2 = (a11 - lam3)/(lam - lam3), phi3 = 0, and only the two
    sign choices of phi2 remain; phi1 comes from the same f/g machinery with
    the g-vectors in their simplified double-root form.
    """
    scale = a.scale()
    if abs(lam - lam3) <= DEGENERATE_EPS * scale:
        raise NotDoubleRoot("repeated and distinct eigenvalues coincide")
    # a near-double matrix legitimately pushes s outside [0, 1] by O(gap),
    # not just by rounding, hence the wider slack than the generic branch
    s = _clamp_unit((a.a11 - lam3) / (lam - lam3), "s", slack=1e-5)
    phi2_mag = math.acos(math.sqrt(s))

    tol_f = F_ZERO_EPS * scale
    f1x, f1y = a.a12, -a.a13
    f2x, f2y = a.a22 - a.a33, -2.0 * a.a23
    n1 = math.hypot(f1x, f1y)
    n2 = math.hypot(f2x, f2y)

    # |g1| = |f1| gives |sin(2 phi2)| = 2|f1| / |lam - lam3| straight from the
    # entries.  Near phi2 = 0 or pi/2 the arccos(sqrt(s)) route square-root
    # amplifies rounding (and any slight deviation from an exact double
    # root), while the arcsin route is linear there; swap it in away from
    # pi/4, keeping the quadrant decided by s.
    if phi2_mag < 0.125 * math.pi or phi2_mag > 0.375 * math.pi:
        sin2 = min(2.0 * n1 / abs(lam - lam3), 1.0)
        half = 0.5 * math.asin(sin2)
        phi2_mag = half if phi2_mag <= 0.25 * math.pi else 0.5 * math.pi - half
        s = math.cos(phi2_mag) ** 2
    cs1 = (f1x / n1, f1y / n1) if n1 > tol_f else (1.0, 0.0)
    cs2 = (f2x / n2, f2y / n2) if n2 > tol_f else (1.0, 0.0)

    g1y_mag = 0.5 * (lam - lam3) * math.sin(2.0 * phi2_mag)
    candidates = []
    for s2 in (1, -1):
        g1 = (0.0, s2 * g1y_mag)
        g2 = ((lam - lam3) * s, 0.0)
        p11, p12 = _phi1_candidates(n1, n2, tol_f, cs1, cs2, g1, g2)
        diff = (wrapped_diff_mod_pi(p11, p12)
                if n1 > tol_f and n2 > tol_f else math.nan)
        candidates.append((s2, 1, p11, p12, diff))

    near_tie = False
    scored = [c for c in candidates if not math.isnan(c[4])]
    if scored:
        best = min(c[4] for c in scored)
        sel = next(c for c in scored if c[4] <= best + TIE_EPS)
        others = [c[4] for c in scored if c is not sel]
        if others:
            near_tie = TIE_EPS < (min(others) - sel[4]) <= NEAR_TIE_EPS
    else:
        sel = candidates[0]

    if n1 <= tol_f and n2 <= tol_f:
        # already diagonal; any phi1 rotates within the repeated eigenspace
        angles = Angles3(phi1=0.0, phi2=sel[0] * phi2_mag, phi3=0.0)
        signs = (sel[0], 1)
    else:
        angles, signs = _assemble_angles(n1, n2, tol_f, sel[2], sel[3],
                                         sel[0], sel[1], phi2_mag, 0.0)
    report = SolveReport(selected_signs=signs,
                         phi1_candidates=tuple(candidates),
                         f1_norm=n1, f2_norm=n2, near_tie=near_tie)
    return angles, report


# Rotation generators (skew matrices) about the fixed basis axes.
_GEN1 = np.array([[0.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]])
_GEN2 = np.array([[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [-1.0, 0.0, 0.0]])
_GEN3 = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])


def _polish_angles(a_arr, lambdas, angles, scale):
    """Damped Gauss-Newton on the reconstruction residual over the angles.

    The closed-form recovery is exact in exact arithmetic, but isolated
    conditioning corners (an angle within rounding distance of 0 or pi/2)
    can leave a few orders of magnitude on the table; one or two quadratic
    steps recover them.  Returns the improved angles and absolute residual.
    """
    lam = np.asarray(lambdas, dtype=float)
    phis = np.array(angles.as_tuple())
    d = compose_rotation(tuple(phis))
    rec = (d * lam) @ d.T
    best = (float(np.linalg.norm(rec - a_arr)), phis)
    damp = (1e-14 * scale * scale) * np.eye(3)
    for _ in range(2):
        r1 = rot3x(phis[0])
        r12 = r1 @ rot3y(phis[1])
        gens = (_GEN1, r1 @ _GEN2 @ r1.T, r12 @ _GEN3 @ r12.T)
        j = np.column_stack([(g @ rec - rec @ g).reshape(9) for g in gens])
        resid = (rec - a_arr).reshape(9)
        phis = phis - np.linalg.solve(j.T @ j + damp, j.T @ resid)
        d = compose_rotation(tuple(phis))
        rec = (d * lam) @ d.T
        res = float(np.linalg.norm(rec - a_arr))
        if res < best[0]:
            best = (res, phis.copy())
    return Angles3(*best[1]), best[0]


def _double_root_lambdas(lambdas):
    """Reorder so the repeated pair (the closest two roots, averaged) comes first."""
    l1, l2, l3 = lambdas
    gaps = (abs(l1 - l2), abs(l1 - l3), abs(l2 - l3))
    k = gaps.index(min(gaps))
    if k == 0:
        return 0.5 * (l1 + l2), l3
    if k == 1:
        return 0.5 * (l1 + l3), l2
    return 0.5 * (l2 + l3), l1


def _reconstruction_residual(a: SymMat3, d, lambdas):
    recon = (d * lambdas) @ d.T
    return float(np.linalg.norm(recon - a.to_array())) / a.scale()


def diagonalize3(a: SymMat3) -> EigenDecomp3:
    """Full closed-form decomposition A = D . diag(lambdas) . D^T.

    Classifies into triple-root, double-root and generic branches from the
    cubic invariants; a generic-branch failure (both f-vectors zero, or an
    eigenvalue gap below tolerance) reroutes to the double-root handling.
    """
    coeffs = char_coeffs(a)
    pq = compute_pq(coeffs)
    scale = a.scale()

    branch = None
    if pq.delta is None:
        lam = coeffs.b / 3.0
        lambdas = (lam, lam, lam)
        angles = Angles3(0.0, 0.0, 0.0)
        f1, f2 = f_vectors(a)
        report = SolveReport(f1_norm=float(np.hypot(*f1)),
                             f2_norm=float(np.hypot(*f2)))
        branch = Branch.TRIPLE_ROOT
    else:
        lambdas = eigenvalues3(coeffs, pq)
        disc = 4.0 * pq.p**3 - pq.q * pq.q
        if disc <= discriminant_threshold(scale):
            lam, lam3 = _double_root_lambdas(lambdas)
            lambdas = (lam, lam, lam3)
            angles, report = degenerate_double(a, lam, lam3)
            branch = Branch.DOUBLE_ROOT
        else:
            try:
                v = compute_v(a, lambdas)
                w = compute_w(a, lambdas, v)
                angles, report = resolve_signs(a, lambdas, v, w)
                if (report.f1_norm <= F_ZERO_EPS * scale
                        or report.f2_norm <= F_ZERO_EPS * scale):
                    branch = Branch.ALREADY_DIAGONAL_2D
                else:
                    branch = Branch.GENERIC
            except (BothFVectorsZero, DegenerateEigenvalues, DomainExcursion):
                lam, lam3 = _double_root_lambdas(lambdas)
                lambdas = (lam, lam, lam3)
                angles, report = degenerate_double(a, lam, lam3)
                branch = Branch.DOUBLE_ROOT

    d = compose_rotation(angles)
    recon_res = _reconstruction_residual(a, d, lambdas)
    if recon_res > 1e-12:
        polished, abs_res = _polish_angles(a.to_array(), lambdas, angles,
                                           scale)
        if abs_res / scale < recon_res:
            angles = polished
            recon_res = abs_res / scale
            d = compose_rotation(angles)
    report = replace(report, recon_residual=recon_res)
    return EigenDecomp3(lambda1=lambdas[0], lambda2=lambdas[1],
                        lambda3=lambdas[2], angles=angles, d=d,
                        branch=branch, report=report)


def euler_angles(dec: EigenDecomp3) -> Angles3:
    """The Euler angles of the eigenvectors.

    Numerically identical to dec.angles: the fixed-axis product
    R1(phi1) R2(phi2) R3(phi3) equals the Euler sequence about rotating
    axes with the same angles applied in reverse order, so no transformation
    is needed; this operation fixes that semantic contract.
    """
    return dec.angles
