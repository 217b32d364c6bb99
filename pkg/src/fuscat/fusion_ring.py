"""Fusion rings on a finite label set.

Labels are dense integers ``0 .. n-1`` with ``0`` the unit.  The structure
constants ``N[i, j, k]`` count fusion channels ``i x j -> k`` and are stored
as unsigned 8-bit integers; all associativity arithmetic is done in int64.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import MalformedTable

__all__ = ["FusionRing", "FusionRingReport", "verify_fusion_ring"]


@dataclass(frozen=True)
class FusionRingReport:
    """Outcome of :func:`verify_fusion_ring`.

    Attributes
    ----------
    passed : bool
        True iff every axiom holds exactly.
    failures : list of str
        Human-readable description of each violated axiom instance.
    """

    passed: bool
    failures: list[str] = field(default_factory=list)


class FusionRing:
    """A based ring with nonnegative integer structure constants.

    Parameters
    ----------
    N : array_like of shape (n, n, n)
        Fusion multiplicities ``N[i, j, k]`` for ``i x j -> k``.  Values must
        be nonnegative integers below 256.

    Attributes
    ----------
    n : int
        Number of labels.
    N : ndarray of uint8
        The fusion tensor.
    dual : ndarray of int
        The conjugation involution, read off from ``N[i, j, 0]``.
    """

    def __init__(self, N) -> None:
        N = np.asarray(N)
        if N.ndim != 3 or N.shape[0] != N.shape[1] or N.shape[0] != N.shape[2]:
            raise MalformedTable(f"fusion tensor must be cubic, got shape {N.shape}")
        if N.shape[0] == 0:
            raise MalformedTable("a fusion ring needs at least the unit label")
        if not np.issubdtype(N.dtype, np.integer):
            if not np.all(N == np.round(N)):
                raise MalformedTable("fusion multiplicities must be integers")
            N = np.round(N).astype(np.int64)
        if np.any(N < 0) or np.any(N > 255):
            raise MalformedTable("fusion multiplicities must lie in 0..255")
        self.N = N.astype(np.uint8)
        self.n = N.shape[0]
        # dual(i) is the unique j with N[i, j, 0] == 1; validated in verify().
        unit_channels = self.N[:, :, 0].astype(np.int64)
        self.dual = np.argmax(unit_channels, axis=1)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"FusionRing(n={self.n})"

    def fuse(self, i: int, j: int) -> list[tuple[int, int]]:
        """Channels of ``i x j`` as ``(label, multiplicity)`` pairs."""
        row = self.N[i, j]
        return [(int(k), int(row[k])) for k in np.nonzero(row)[0]]

    def matrix(self, i: int) -> np.ndarray:
        """Left fusion matrix ``(N_i)_{jk} = N[i, j, k]`` as int64."""
        return self.N[i].astype(np.int64)

    def pf_dims(self) -> np.ndarray:
        """Perron-Frobenius eigenvalue of each ``N_i``.

        These are the minimal quantum dimensions compatible with the ring;
        every categorification satisfies ``d_i >= pf_dims()[i] >= 1``.
        """
        dims = np.empty(self.n)
        for i in range(self.n):
            eig = np.linalg.eigvals(self.matrix(i))
            dims[i] = float(np.max(np.abs(eig)))
        return dims

    def verify(self) -> FusionRingReport:
        """Check unit, associativity, duality and dual-involutivity axioms."""
        return verify_fusion_ring(self)


def verify_fusion_ring(ring: FusionRing) -> FusionRingReport:
    """Exhaustively verify the fusion ring axioms in exact integer arithmetic.

    Checks, for all labels:

    * unit: ``N[0, i, k] == N[i, 0, k] == delta_{ik}``
    * associativity: ``sum_m N[i,j,m] N[m,k,l] == sum_m N[j,k,m] N[i,m,l]``
    * duality: ``N[i, j, 0] == delta_{j, dual(i)}`` with ``dual`` an involution
      and ``N[i, j, 0] == N[j, i, 0]``
    """
    N = ring.N.astype(np.int64)
    n = ring.n
    failures: list[str] = []

    eye = np.eye(n, dtype=np.int64)
    if not np.array_equal(N[0], eye):
        failures.append("unit: N[0, j, k] != delta_{jk}")
    if not np.array_equal(N[:, 0, :], eye):
        failures.append("unit: N[i, 0, k] != delta_{ik}")

    # (i j) k vs i (j k), contracted over the middle label.
    left = np.einsum("ijm,mkl->ijkl", N, N)
    right = np.einsum("jkm,iml->ijkl", N, N)
    if not np.array_equal(left, right):
        bad = np.argwhere(left != right)
        i, j, k, l = (int(x) for x in bad[0])
        failures.append(
            f"associativity: (i,j,k,l)=({i},{j},{k},{l}) "
            f"lhs={int(left[i, j, k, l])} rhs={int(right[i, j, k, l])}"
        )

    unit_ch = N[:, :, 0]
    if not np.array_equal(unit_ch, unit_ch.T):
        failures.append("duality: N[i, j, 0] is not symmetric")
    row_sums = unit_ch.sum(axis=1)
    if not np.all(row_sums == 1):
        bad = int(np.argwhere(row_sums != 1)[0][0])
        failures.append(f"duality: label {bad} has {int(row_sums[bad])} duals")
    else:
        dual = ring.dual
        if not np.array_equal(dual[dual], np.arange(n)):
            failures.append("duality: dual map is not an involution")

    return FusionRingReport(passed=not failures, failures=failures)
