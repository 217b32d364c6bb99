"""Torus and defect partition functions, annulus coefficients, certificates.

The genus-one observables of the full theory built from a symmetric special
Frobenius algebra A are dimensions of bimodule morphism spaces: the torus
partition function is

    Z_ij = dim Hom_{A|A}( U_i (x) A (x) U_j , A )

with the dressing of :func:`fuscat.modules.dress_bimodule` (inverse braidings
on both sides).  The orientation convention pairs the plain label j, not its
dual, with the right leg; this choice is calibrated once by requiring that
the trivial algebra A = 1 yields the charge-conjugation matrix on every
bundled category.  With the opposite pairing the trivial algebra would give
the identity matrix instead; the two conventions differ whenever the
category has non-self-dual labels.

Certificates never round anything away: check_modular_invariance reports the
actual commutator norm with S, the exact twist-matching condition on the
support of Z, and the normalization Z_00 = 1 for haploid algebras.  The
twist condition for genuine defect tables (B or B' different from A) is
convention-dependent and is therefore reported by the same function but only
asserted by callers for the torus case.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import blocks, modules
from .category import s_matrix
from .errors import ShapeMismatch
from .modules import (Bimodule, LeftModule, bimodule_hom_dim, dress_bimodule,
                      list_simple_modules, module_hom_dim, regular_bimodule,
                      underlying_multiplicities)
from .reporting import CheckResult, ReportDocument

__all__ = [
    "PartitionTable", "AnnulusTensor", "torus_partition_function",
    "defect_partition_function", "annulus_coefficients",
    "check_modular_invariance", "check_nimrep",
]

_S_TOL = 1e-8


@dataclass(frozen=True)
class PartitionTable:
    """A genus-one partition function: nonnegative integer matrix ``z``.

    Attributes
    ----------
    z : ndarray
        Integer matrix indexed by pairs of simple labels.
    algebra : str
        Name of the algebra the table was computed from.
    kind : str
        ``"torus"`` or ``"defect"``.
    left, right : str
        Defect names for ``kind="defect"`` (both equal the algebra name for
        the torus).
    """

    z: np.ndarray
    algebra: str
    kind: str = "torus"
    left: str = ""
    right: str = ""

    def __post_init__(self):
        z = np.asarray(self.z)
        if z.ndim != 2 or z.shape[0] != z.shape[1]:
            raise ShapeMismatch("partition table must be a square matrix")
        object.__setattr__(self, "z", z.astype(int))


@dataclass(frozen=True)
class AnnulusTensor:
    """Annulus coefficients: one integer matrix per simple label.

    ``matrices[i][m, n]`` is the dimension of the module morphism space from
    ``M_m (x) U_i`` to ``M_n``, over the listed simple modules (boundary
    conditions).
    """

    matrices: tuple
    modules: tuple
    algebra: str = ""

    def __post_init__(self):
        mats = tuple(np.asarray(m).astype(int) for m in self.matrices)
        k = len(self.modules)
        for m in mats:
            if m.shape != (k, k):
                raise ShapeMismatch(
                    "annulus matrices must be square over the module list")
        object.__setattr__(self, "matrices", mats)
        object.__setattr__(self, "modules", tuple(self.modules))


def torus_partition_function(alg) -> PartitionTable:
    """Torus partition function of the full theory built from ``alg``."""
    reg = regular_bimodule(alg)
    n = alg.cat.n
    z = np.array([[bimodule_hom_dim(dress_bimodule(i, reg, j), reg)
                   for j in range(n)] for i in range(n)], dtype=int)
    return PartitionTable(z, alg.name or "A", kind="torus",
                          left=alg.name or "A", right=alg.name or "A")


def defect_partition_function(alg, left: Bimodule,
                              right: Bimodule) -> PartitionTable:
    """Partition function with defect lines ``left`` and ``right`` inserted.

    Reduces to :func:`torus_partition_function` when both defects are the
    regular bimodule.
    """
    n = alg.cat.n
    z = np.array([[bimodule_hom_dim(dress_bimodule(i, left, j), right)
                   for j in range(n)] for i in range(n)], dtype=int)
    return PartitionTable(z, alg.name or "A", kind="defect",
                          left=left.name or "B", right=right.name or "B'")


def annulus_coefficients(alg, simples: list[LeftModule] | None = None,
                         seed: int = modules._DEFAULT_SEED) -> AnnulusTensor:
    """Annulus coefficients over the simple modules (boundary conditions)."""
    cat = alg.cat
    if simples is None:
        simples = list_simple_modules(alg, seed=seed)
    shifted = {}
    for m_idx, mod in enumerate(simples):
        for i in range(cat.n):
            u = blocks.SumObject.simple(cat, i)
            rho = blocks.tensor(mod.rho, blocks.identity(cat, (u,)))
            shifted[m_idx, i] = LeftModule(alg, mod.word + (u,), rho)
    mats = []
    for i in range(cat.n):
        mat = np.array([[module_hom_dim(shifted[m_idx, i], n_mod)
                         for n_mod in simples]
                        for m_idx in range(len(simples))], dtype=int)
        mats.append(mat)
    return AnnulusTensor(tuple(mats), tuple(s.name or f"M{k}" for k, s
                                            in enumerate(simples)),
                         algebra=alg.name or "A")


def check_modular_invariance(cat, table: PartitionTable,
                             haploid: bool = True,
                             tolerance: float | None = None) -> ReportDocument:
    """Certify a partition table: S-commutation, twist matching, Z_00.

    The S check compares ``S Z`` with ``Z S`` in the sup norm against 1e-8
    (or the supplied tolerance).  The twist condition demands theta_i =
    theta_j exactly up to the category tolerance wherever ``Z_ij != 0``.
    ``Z_00 = 1`` is required when ``haploid`` is set.
    """
    z = table.z
    if z.shape != (cat.n, cat.n):
        raise ShapeMismatch("table size does not match the category")
    s_tol = _S_TOL if tolerance is None else tolerance
    S = s_matrix(cat).S
    s_res = float(np.abs(S @ z - z @ S).max())
    t_res = 0.0
    bad: list[tuple[int, int]] = []
    for i in range(cat.n):
        for j in range(cat.n):
            if z[i, j]:
                d = abs(cat.theta[i] - cat.theta[j])
                if d > cat.tolerance:
                    bad.append((i, j))
                t_res = max(t_res, d)
    checks = [
        CheckResult("s_invariance", s_res, s_tol, s_res <= s_tol),
        CheckResult("t_condition", t_res, cat.tolerance,
                     t_res <= cat.tolerance,
                     detail=f"violations at {bad}" if bad else ""),
        CheckResult("entries_nonnegative",
                     0.0 if (z >= 0).all() else 1.0, 0.5, (z >= 0).all()),
    ]
    if haploid:
        z00 = abs(int(z[0, 0]) - 1)
        checks.append(CheckResult("vacuum_normalization", float(z00), 0.5,
                                  z00 == 0, detail=f"Z_00 = {z[0, 0]}"))
    return ReportDocument(
        "modular_invariance", table.algebra,
        all(c.passed for c in checks), checks,
        data={"z": z.tolist()})


def check_nimrep(cat, ann: AnnulusTensor) -> ReportDocument:
    """Certify the fusion-ring representation property of annulus matrices.

    Verifies ``A_i A_j = sum_k N_ij^k A_k`` and ``A_0 = id`` in exact integer
    arithmetic; deviations are counted, not rounded.
    """
    mats = ann.matrices
    if len(mats) != cat.n:
        raise ShapeMismatch("annulus tensor size does not match the category")
    N = cat.ring.N
    worst = 0
    bad: list[tuple[int, int]] = []
    for i in range(cat.n):
        for j in range(cat.n):
            lhs = mats[i] @ mats[j]
            rhs = sum(int(N[i, j, k]) * mats[k] for k in range(cat.n))
            dev = int(np.abs(lhs - rhs).max())
            if dev:
                bad.append((i, j))
                worst = max(worst, dev)
    unit_dev = int(np.abs(mats[0] - np.eye(len(ann.modules),
                                           dtype=int)).max())
    neg = min(int(m.min()) for m in mats)
    checks = [
        CheckResult("representation", float(worst), 0.5, worst == 0,
                     detail=f"violations at {bad}" if bad else ""),
        CheckResult("unit_is_identity", float(unit_dev), 0.5, unit_dev == 0),
        CheckResult("entries_nonnegative", 0.0 if neg >= 0 else 1.0, 0.5,
                     neg >= 0),
    ]
    return ReportDocument(
        "nimrep_check", ann.algebra, all(c.passed for c in checks), checks,
        data={"matrices": [m.tolist() for m in mats],
              "modules": list(ann.modules)})
