#!/usr/bin/env python3
"""Generate su(2)_k category data from quantum 6j symbols.

Labels are twice the spin, jj = 0..k.  F-matrices come from the q-deformed
Racah sum at q = exp(i pi / (k+2)), R-matrices and twists from the conformal
weights h_j = j(j+2) / (4(k+2)).  The data file is only written after the
full verification suite passes, so the verifier itself is the provenance of
the bundled numbers.

    python3 scripts/generate_su2k.py [k]
"""

from __future__ import annotations

import functools
import pathlib
import sys

import numpy as np

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from fuscat import SkeletalCategory, verify_category
from fuscat.data_io import write_category

DATA = pathlib.Path(__file__).resolve().parents[1] / "src" / "fuscat" / "data"


def make_su2k(k: int) -> SkeletalCategory:
    n = k + 1

    def qnum(m: int) -> float:
        return np.sin(m * np.pi / (k + 2)) / np.sin(np.pi / (k + 2))

    @functools.lru_cache(maxsize=None)
    def qfact(m: int) -> float:
        if m < 0:
            return 0.0
        out = 1.0
        for i in range(2, m + 1):
            out *= qnum(i)
        return out

    def admissible(a: int, b: int, c: int) -> bool:
        return (a + b + c) % 2 == 0 and abs(a - b) <= c <= min(a + b, 2 * k - a - b)

    def tri(a: int, b: int, c: int) -> float:
        # q-triangle coefficient, labels doubled
        return np.sqrt(qfact((a + b - c) // 2) * qfact((a - b + c) // 2)
                       * qfact((-a + b + c) // 2) / qfact((a + b + c) // 2 + 1))

    def sixj(a: int, b: int, e: int, c: int, d: int, f: int) -> float:
        # {a/2 b/2 e/2; c/2 d/2 f/2}_q, triads (abe), (ecd), (bcf), (afd)
        if not (admissible(a, b, e) and admissible(e, c, d)
                and admissible(b, c, f) and admissible(a, f, d)):
            return 0.0
        t1 = (a + b + e) // 2
        t2 = (e + c + d) // 2
        t3 = (b + c + f) // 2
        t4 = (a + f + d) // 2
        q1 = (a + b + c + d) // 2
        q2 = (b + e + d + f) // 2
        q3 = (a + e + c + f) // 2
        pref = tri(a, b, e) * tri(e, c, d) * tri(b, c, f) * tri(a, f, d)
        total = 0.0
        for z in range(max(t1, t2, t3, t4), min(q1, q2, q3) + 1):
            if z + 1 > k + 1:
                continue  # [z+1]! contains the vanishing [k+2]
            total += ((-1) ** z * qfact(z + 1)
                      / (qfact(z - t1) * qfact(z - t2) * qfact(z - t3)
                         * qfact(z - t4) * qfact(q1 - z) * qfact(q2 - z)
                         * qfact(q3 - z)))
        return pref * total

    N = np.zeros((n, n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if admissible(a, b, c):
                    N[a, b, c] = 1

    qdim = np.array([qnum(a + 1) for a in range(n)])
    h = np.array([a * (a + 2) / (4 * (k + 2)) for a in range(n)])
    theta = np.exp(2j * np.pi * h)

    F: dict[tuple, np.ndarray] = {}
    for a in range(1, n):
        for b in range(1, n):
            for c in range(1, n):
                for d in range(n):
                    es = [e for e in range(n)
                          if admissible(a, b, e) and admissible(e, c, d)]
                    fs = [f for f in range(n)
                          if admissible(b, c, f) and admissible(a, f, d)]
                    if not es or not fs:
                        continue
                    mat = np.zeros((len(es), len(fs)), dtype=complex)
                    sign = (-1.0) ** ((a + b + c + d) // 2)
                    for r, e in enumerate(es):
                        for s, f in enumerate(fs):
                            mat[r, s] = (sign
                                         * np.sqrt(qnum(e + 1) * qnum(f + 1))
                                         * sixj(a, b, e, c, d, f))
                    F[a, b, c, d] = mat

    R: dict[tuple, np.ndarray] = {}
    for a in range(1, n):
        for b in range(1, n):
            for c in range(n):
                if not admissible(a, b, c):
                    continue
                ph = np.exp(2j * np.pi * (c * (c + 2) - a * (a + 2) - b * (b + 2))
                            / (8 * (k + 2)))
                R[a, b, c] = [[(-1.0) ** ((c - a - b) // 2) * ph]]

    names = [str(a) for a in range(n)]
    return SkeletalCategory(N, F, R, theta=theta, qdim=qdim, name=f"su2_{k}",
                            label_names=names)


def main():
    k = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    cat = make_su2k(k)
    report = verify_category(cat)
    if not report.passed:
        print(f"su2_{k}: verification FAILED")
        print(report.to_json())
        return 1
    DATA.mkdir(exist_ok=True)
    path = DATA / f"su2_{k}.cat"
    write_category(cat, path)
    print(f"su2_{k}: verified, wrote {path.name}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
