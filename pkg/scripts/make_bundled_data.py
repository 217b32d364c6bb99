#!/usr/bin/env python3
"""Build the small bundled category files from closed-form data.

Each category is constructed programmatically, run through the full
verification suite, and only written to ``src/fuscat/data`` if every check
passes.  Run from the repository root:

    python3 scripts/make_bundled_data.py
"""

from __future__ import annotations

import pathlib
import sys

import numpy as np

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from fuscat import SkeletalCategory, verify_category
from fuscat.data_io import write_category

DATA = pathlib.Path(__file__).resolve().parents[1] / "src" / "fuscat" / "data"


def group_fusion(table):
    """N tensor of a finite abelian group given as a multiplication table."""
    n = len(table)
    N = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            N[i, j, table[i][j]] = 1
    return N


def trivial():
    N = np.ones((1, 1, 1), dtype=np.int64)
    return SkeletalCategory(N, {}, {}, theta=[1.0], qdim=[1.0], name="trivial",
                            label_names=["1"])


def z2_semion():
    # Z_2 anyons with the nontrivial associator: F^{sss}_s = -1, theta_s = i.
    N = group_fusion([[0, 1], [1, 0]])
    F = {(1, 1, 1, 1): [[-1.0]]}
    R = {(1, 1, 0): [[1j]]}
    return SkeletalCategory(N, F, R, theta=[1, 1j], qdim=[1, 1],
                            name="z2_semion", label_names=["1", "s"])


def z3_anyons():
    # Z_3 anyons: trivial associator, R^{ab} = w^{ab}, theta_a = w^{a^2}.
    w = np.exp(2j * np.pi / 3)
    table = [[(i + j) % 3 for j in range(3)] for i in range(3)]
    N = group_fusion(table)
    F = {}
    R = {}
    for a in range(1, 3):
        for b in range(1, 3):
            R[a, b, (a + b) % 3] = [[w ** (a * b)]]
            for c in range(1, 3):
                F[a, b, c, (a + b + c) % 3] = [[1.0]]
    theta = [w ** (a * a) for a in range(3)]
    return SkeletalCategory(N, F, R, theta=theta, qdim=[1, 1, 1],
                            name="z3_anyons", label_names=["1", "w", "wbar"])


def fibonacci():
    phi = (1 + np.sqrt(5)) / 2
    N = np.zeros((2, 2, 2), dtype=np.int64)
    N[0, 0, 0] = N[0, 1, 1] = N[1, 0, 1] = 1
    N[1, 1, 0] = N[1, 1, 1] = 1
    F = {
        (1, 1, 1, 0): [[1.0]],
        (1, 1, 1, 1): [[1 / phi, 1 / np.sqrt(phi)],
                       [1 / np.sqrt(phi), -1 / phi]],
    }
    R = {
        (1, 1, 0): [[np.exp(-4j * np.pi / 5)]],
        (1, 1, 1): [[np.exp(3j * np.pi / 5)]],
    }
    return SkeletalCategory(N, F, R, theta=[1, np.exp(4j * np.pi / 5)],
                            qdim=[1, phi], name="fibonacci",
                            label_names=["1", "tau"])


def ising():
    # Label order 1, psi, sigma; the nu = 1 solution.
    N = np.zeros((3, 3, 3), dtype=np.int64)
    N[0, 0, 0] = N[0, 1, 1] = N[0, 2, 2] = N[1, 0, 1] = N[2, 0, 2] = 1
    N[1, 1, 0] = 1
    N[1, 2, 2] = N[2, 1, 2] = 1
    N[2, 2, 0] = N[2, 2, 1] = 1
    s = 1 / np.sqrt(2)
    F = {
        (2, 2, 2, 2): [[s, s], [s, -s]],
        (1, 2, 1, 2): [[-1.0]],
        (2, 1, 2, 0): [[1.0]],
        (2, 1, 2, 1): [[-1.0]],
        (1, 1, 1, 1): [[1.0]],
        (1, 1, 2, 2): [[1.0]],
        (1, 2, 2, 0): [[1.0]],
        (1, 2, 2, 1): [[1.0]],
        (2, 1, 1, 2): [[1.0]],
        (2, 2, 1, 0): [[1.0]],
        (2, 2, 1, 1): [[1.0]],
    }
    R = {
        (1, 1, 0): [[-1.0]],
        (1, 2, 2): [[-1j]],
        (2, 1, 2): [[-1j]],
        (2, 2, 0): [[np.exp(-1j * np.pi / 8)]],
        (2, 2, 1): [[np.exp(3j * np.pi / 8)]],
    }
    return SkeletalCategory(N, F, R, theta=[1, -1, np.exp(1j * np.pi / 8)],
                            qdim=[1, 1, np.sqrt(2)], name="ising",
                            label_names=["1", "psi", "sigma"])


def toric_code():
    # Drinfeld double of Z_2.  Labels encode (g, x) as 2g + x:
    # 1 = (0,0), e = (0,1), m = (1,0), f = (1,1); fusion is XOR.
    table = [[i ^ j for j in range(4)] for i in range(4)]
    N = group_fusion(table)
    F = {}
    R = {}
    for i in range(1, 4):
        for j in range(1, 4):
            R[i, j, i ^ j] = [[(-1.0) ** ((i & 1) * (j >> 1))]]
            for k in range(1, 4):
                F[i, j, k, i ^ j ^ k] = [[1.0]]
    theta = [(-1.0) ** ((i >> 1) * (i & 1)) for i in range(4)]
    return SkeletalCategory(N, F, R, theta=theta, qdim=[1, 1, 1, 1],
                            name="toric_code", label_names=["1", "e", "m", "f"])


def main():
    DATA.mkdir(exist_ok=True)
    builders = [trivial, z2_semion, z3_anyons, fibonacci, ising, toric_code]
    failures = 0
    for build in builders:
        cat = build()
        report = verify_category(cat)
        if not report.passed:
            failures += 1
            print(f"{cat.name}: verification FAILED")
            print(report.to_json())
            continue
        path = DATA / f"{cat.name}.cat"
        write_category(cat, path)
        print(f"{cat.name}: verified, wrote {path.name}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
