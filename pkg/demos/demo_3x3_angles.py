"""Recovering the three rotation angles of a 3x3 symmetric eigenbasis.

Builds a matrix from known angles, then shows each stage of the closed-form
recovery: characteristic-cubic coefficients, the trigonometric eigenvalues,
the squared-cosine quotients v and w, and the sign resolution that pins
down (phi1, phi2, phi3).
"""

import math

import numpy as np

from symdiag import (
    SymMat3,
    char_coeffs,
    compose_rotation,
    compute_pq,
    compute_v,
    compute_w,
    diagonalize3,
    eigenvalues3,
    f_vectors,
    g_vectors,
)

np.set_printoptions(precision=6, suppress=True)


def main():
    # construct A = D diag(lambdas) D^T from known angles; the solver
    # reports eigenvalues ordered (largest, smallest, middle), so place
    # them on the diagonal in that order to make the comparison direct
    true_angles = (0.3, 0.5, 0.9)
    lambdas = (3.0, 1.0, 2.0)
    d = compose_rotation(true_angles)
    a = SymMat3.from_array((d * np.array(lambdas)) @ d.T)
    print("constructed from angles", true_angles, "and eigenvalues", lambdas)
    print("A =")
    print(a.to_array())

    # stage 1: the characteristic cubic and its invariants
    coeffs = char_coeffs(a)
    pq = compute_pq(coeffs)
    print(f"\ncubic coefficients: b = {coeffs.b:.6f}, c = {coeffs.c:.6f}, "
          f"d = {coeffs.d:.6f}")
    print(f"invariants: p = {pq.p:.6f}, q = {pq.q:.6f}, "
          f"delta = {pq.delta:.6f}")

    # stage 2: eigenvalues in closed form
    lams = eigenvalues3(coeffs, pq)
    print(f"eigenvalues (largest, smallest, middle): "
          f"({lams[0]:.6f}, {lams[1]:.6f}, {lams[2]:.6f})")

    # stage 3: the squared cosines of phi2 and phi3 are rational in the
    # entries and eigenvalues
    v = compute_v(a, lams)
    w = compute_w(a, lams, v)
    print(f"v = cos(phi2)^2 = {v:.6f}  ->  |phi2| = {math.acos(math.sqrt(v)):.6f}")
    print(f"w = cos(phi3)^2 = {w:.6f}  ->  |phi3| = {math.acos(math.sqrt(w)):.6f}")

    # stage 4: the f/g vector pairs that resolve the signs; |f| = |g|
    f1, f2 = f_vectors(a)
    g1, g2 = g_vectors(lams, true_angles[1], true_angles[2], v, w)
    print(f"|f1| = {np.linalg.norm(f1):.6f}, |g1| = {np.linalg.norm(g1):.6f}")
    print(f"|f2| = {np.linalg.norm(f2):.6f}, |g2| = {np.linalg.norm(g2):.6f}")

    # the full solver puts it together
    dec = diagonalize3(a)
    print(f"\nrecovered angles: ({dec.angles.phi1:.9f}, "
          f"{dec.angles.phi2:.9f}, {dec.angles.phi3:.9f})")
    print(f"branch: {dec.branch.value}")
    print(f"selected signs for (phi2, phi3): {dec.report.selected_signs}")
    print(f"reconstruction residual: {dec.report.recon_residual:.2e}")


if __name__ == "__main__":
    main()
