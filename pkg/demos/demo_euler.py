"""The fixed-axis angle triple doubles as a Euler-angle sequence.

The eigenvector matrix is built as R1(phi1) R2(phi2) R3(phi3) about the
fixed basis axes.  The same three values, applied in reverse order about
axes that rotate with the body, produce the identical matrix: the
conjugation identity R3'' R2' R1 = R1 R2 R3 with R2' = R1 R2 R1^-1 and
R3'' = (R2' R1) R3 (R2' R1)^-1.  This demo verifies the identity
numerically and shows euler_angles on a solved decomposition.
"""

import numpy as np

from symdiag import (
    SymMat3,
    compose_rotation,
    diagonalize3,
    euler_angles,
    rot3x,
    rot3y,
    rot3z,
)

np.set_printoptions(precision=6, suppress=True)


def main():
    angles = (0.3, 0.5, 0.9)
    r1, r2, r3 = rot3x(angles[0]), rot3y(angles[1]), rot3z(angles[2])

    fixed = r1 @ r2 @ r3
    r2p = r1 @ r2 @ r1.T            # second rotation about the rotated axis
    s = r2p @ r1
    r3pp = s @ r3 @ s.T             # third rotation about the twice-rotated axis
    rotating = r3pp @ r2p @ r1

    print("fixed-axis product R1 R2 R3 =")
    print(fixed)
    print("rotating-axis product R3'' R2' R1 =")
    print(rotating)
    print(f"max entrywise difference: {np.max(np.abs(fixed - rotating)):.2e}")

    rng = np.random.default_rng(0)
    worst = 0.0
    for _ in range(1000):
        p1, p2, p3 = rng.uniform(-np.pi, np.pi, 3)
        a1, a2, a3 = rot3x(p1), rot3y(p2), rot3z(p3)
        b2 = a1 @ a2 @ a1.T
        t = b2 @ a1
        b3 = t @ a3 @ t.T
        worst = max(worst, float(np.max(np.abs(b3 @ b2 @ a1 - a1 @ a2 @ a3))))
    print(f"1000 random triples: worst difference = {worst:.2e}")

    # consequence: the solved angle triple needs no conversion to be read
    # as Euler angles of the eigenvectors
    d = compose_rotation(angles)
    a = SymMat3.from_array((d * np.array([3.0, 1.0, 2.0])) @ d.T)
    dec = diagonalize3(a)
    print(f"\nsolved angles:      {dec.angles.as_tuple()}")
    print(f"euler_angles(dec):  {euler_angles(dec).as_tuple()}")


if __name__ == "__main__":
    main()
