"""Skeletal data of a braided fusion category with twists.

Conventions
-----------
Labels are dense integers ``0 .. n-1`` with unit ``0``.  The associator is
stored as F-matrices

    ``F[(i, j, k, l)][(p, a, b), (q, g, d)]``

relating the two parenthesizations of ``i x j x k -> l``: the row index runs
over left-nested channels ``p`` (``i x j -> p`` with vertex index ``a``, then
``p x k -> l`` with vertex ``b``), the column over right-nested channels ``q``
(``j x k -> q`` with vertex ``g``, then ``i x q -> l`` with vertex ``d``), both
enumerated lexicographically.  Braiding is stored as R-matrices
``R[(i, j, k)][a, b]`` giving the action of ``c_{i,j}`` on the fusion vertex
``(i j -> k)``.  Entries with a unit-label leg are the identity and are filled
in automatically; supplying a conflicting value is rejected at load time.

Verification never fixes a gauge: pentagon, hexagon and ribbon residuals are
gauge-invariant statements about the supplied tables.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import MalformedTable, NondegeneracyFailure
from .fusion_ring import FusionRing
from .reporting import CheckResult, ReportDocument

__all__ = [
    "SkeletalCategory",
    "SMatrix",
    "s_matrix",
    "verify_pentagon",
    "verify_hexagon",
    "verify_ribbon",
    "verlinde_check",
    "modular_relations",
    "verify_category",
]


class SkeletalCategory:
    """Skeletal braided fusion category data with twists and dimensions.

    Parameters
    ----------
    ring : FusionRing | array_like
        The fusion ring (or its N tensor).
    F : dict
        ``(i, j, k, l) -> complex matrix`` as described in the module
        docstring.  Tuples with a unit leg may be omitted.
    R : dict
        ``(i, j, k) -> complex matrix`` of shape ``(N_ijk, N_ijk)``.
        Tuples with a unit factor may be omitted.
    theta : array_like of complex
        Twists, ``theta[0] == 1``.
    qdim : array_like of float
        Quantum dimensions, ``qdim[0] == 1``.
    tolerance : float
        Numerical tolerance ``eps_num`` used by verifiers and downstream
        consumers.
    name : str
        Optional display name.
    label_names : list of str, optional
        Human-readable label names for reports and files.
    """

    def __init__(self, ring, F, R, theta, qdim, tolerance=1e-9, name="",
                 label_names=None):
        self.ring = ring if isinstance(ring, FusionRing) else FusionRing(ring)
        self.n = self.ring.n
        self.N = self.ring.N
        self.dual = self.ring.dual
        self.theta = np.asarray(theta, dtype=complex)
        self.qdim = np.asarray(qdim, dtype=float)
        self.tolerance = float(tolerance)
        self.name = name
        self.label_names = (list(label_names) if label_names is not None
                            else [str(i) for i in range(self.n)])
        if self.theta.shape != (self.n,):
            raise MalformedTable("theta must have one entry per label")
        if self.qdim.shape != (self.n,):
            raise MalformedTable("qdim must have one entry per label")
        if len(self.label_names) != self.n:
            raise MalformedTable("label_names must have one entry per label")

        # channel cache: labels k with N[i, j, k] > 0
        self._channels: dict[tuple[int, int], tuple[int, ...]] = {}
        for i in range(self.n):
            for j in range(self.n):
                self._channels[i, j] = tuple(
                    int(k) for k in np.nonzero(self.N[i, j])[0])

        self.F = self._normalize_f(F)
        self.R = self._normalize_r(R)
        self._f_inv_cache: dict[tuple[int, int, int, int], np.ndarray] = {}
        self._basis_cache: dict[tuple[int, int, int, int], tuple[dict, dict]] = {}

    # -- channel bookkeeping -------------------------------------------------

    def channels(self, i: int, j: int) -> tuple[int, ...]:
        """Labels k with ``N[i, j, k] > 0``."""
        return self._channels[i, j]

    def nijk(self, i: int, j: int, k: int) -> int:
        return int(self.N[i, j, k])

    def f_left_basis(self, i, j, k, l):
        """Row basis of ``F[(i,j,k,l)]``: triples ``(p, a, b)``."""
        out = []
        for p in self.channels(i, j):
            npk = self.nijk(p, k, l)
            if npk == 0:
                continue
            for a in range(self.nijk(i, j, p)):
                for b in range(npk):
                    out.append((p, a, b))
        return out

    def f_right_basis(self, i, j, k, l):
        """Column basis of ``F[(i,j,k,l)]``: triples ``(q, g, d)``."""
        out = []
        for q in self.channels(j, k):
            niq = self.nijk(i, q, l)
            if niq == 0:
                continue
            for g in range(self.nijk(j, k, q)):
                for d in range(niq):
                    out.append((q, g, d))
        return out

    def f_admissible(self, i, j, k, l) -> bool:
        return any(self.nijk(p, k, l) for p in self.channels(i, j))

    def f_bases(self, i, j, k, l) -> tuple[dict, dict]:
        """Index maps ``(p, a, b) -> row`` and ``(q, g, d) -> col``, cached."""
        key = (i, j, k, l)
        out = self._basis_cache.get(key)
        if out is None:
            rows = {t: r for r, t in enumerate(self.f_left_basis(i, j, k, l))}
            cols = {t: c for c, t in enumerate(self.f_right_basis(i, j, k, l))}
            out = (rows, cols)
            self._basis_cache[key] = out
        return out

    # -- F / R access ---------------------------------------------------------

    def _normalize_f(self, F) -> dict:
        out = {}
        for (i, j, k, l), mat in F.items():
            if not self.f_admissible(i, j, k, l):
                raise MalformedTable(f"F entry for inadmissible tuple {(i, j, k, l)}")
            mat = np.asarray(mat, dtype=complex)
            nr = len(self.f_left_basis(i, j, k, l))
            nc = len(self.f_right_basis(i, j, k, l))
            if mat.shape != (nr, nc):
                raise MalformedTable(
                    f"F{(i, j, k, l)} has shape {mat.shape}, expected {(nr, nc)}")
            if 0 in (i, j, k):
                if not np.allclose(mat, np.eye(nr), atol=self.tolerance * 100):
                    raise MalformedTable(
                        f"F{(i, j, k, l)} has a unit leg and must be the identity")
                continue
            out[i, j, k, l] = mat
        return out

    def _normalize_r(self, R) -> dict:
        out = {}
        for (i, j, k), mat in R.items():
            m = self.nijk(i, j, k)
            if m == 0:
                raise MalformedTable(f"R entry for inadmissible tuple {(i, j, k)}")
            mat = np.asarray(mat, dtype=complex)
            if mat.shape == ():
                mat = mat.reshape(1, 1)
            if mat.shape != (m, m):
                raise MalformedTable(
                    f"R{(i, j, k)} has shape {mat.shape}, expected {(m, m)}")
            if i == 0 or j == 0:
                if not np.allclose(mat, np.eye(m), atol=self.tolerance * 100):
                    raise MalformedTable(
                        f"R{(i, j, k)} has a unit factor and must be the identity")
                continue
            out[i, j, k] = mat
        return out

    def f_matrix(self, i, j, k, l) -> np.ndarray:
        """The F-matrix for ``(i, j, k, l)``; identity when a leg is the unit."""
        if 0 in (i, j, k):
            nr = len(self.f_left_basis(i, j, k, l))
            return np.eye(nr, dtype=complex)
        try:
            return self.F[i, j, k, l]
        except KeyError:
            raise MalformedTable(f"missing F entry for {(i, j, k, l)}") from None

    def f_inv(self, i, j, k, l) -> np.ndarray:
        """Inverse F-matrix, cached."""
        key = (i, j, k, l)
        out = self._f_inv_cache.get(key)
        if out is None:
            out = np.linalg.inv(self.f_matrix(i, j, k, l))
            self._f_inv_cache[key] = out
        return out

    def r_matrix(self, i, j, k) -> np.ndarray:
        """The R-matrix for the vertex ``(i j -> k)``."""
        m = self.nijk(i, j, k)
        if m == 0:
            raise MalformedTable(f"R requested for inadmissible tuple {(i, j, k)}")
        if i == 0 or j == 0:
            return np.eye(m, dtype=complex)
        try:
            return self.R[i, j, k]
        except KeyError:
            raise MalformedTable(f"missing R entry for {(i, j, k)}") from None

    def r_inv(self, i, j, k) -> np.ndarray:
        """Matrix inverse of ``r_matrix(i, j, k)``."""
        return np.linalg.inv(self.r_matrix(i, j, k))

    def global_dim_sqrt(self) -> float:
        """The positive square root ``D = sqrt(sum d_i^2)``."""
        return float(np.sqrt(np.sum(self.qdim ** 2)))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"SkeletalCategory({self.name or self.n})"


# -- coherence ---------------------------------------------------------------


def _f_entry(mat, basis_index, row, col):
    return mat[basis_index[0][row], basis_index[1][col]]


def verify_pentagon(cat: SkeletalCategory) -> tuple[float, tuple]:
    """Maximum pentagon residual over all label tuples.

    For every word ``(a, b, c, d)`` fused to ``e`` the two F-move paths from
    the fully left-nested to the fully right-nested tree are compared entry by
    entry:

        ``sum_t F[pcd;e][(q,b2,g),(z,k,t)] F[abz;e][(p,a1,t),(y,l,s)]
        = sum_{x,m,n,r} F[abc;q][(p,a1,b2),(x,m,n)] F[axd;e][(q,n,g),(y,r,s)]
          F[bcd;y][(x,m,r),(z,k,l)]``

    Returns ``(max_residual, worst_tuple)``.
    """
    worst = 0.0
    worst_at: tuple = ()
    rng = range(cat.n)
    for a, b, c, d in itertools.product(rng, rng, rng, rng):
        for p in cat.channels(a, b):
            na = cat.nijk(a, b, p)
            for q in cat.channels(p, c):
                nb = cat.nijk(p, c, q)
                for e in cat.channels(q, d):
                    ng = cat.nijk(q, d, e)
                    Fpcd = cat.f_matrix(p, c, d, e)
                    rows_pcd, cols_pcd = cat.f_bases(p, c, d, e)
                    Fabc = cat.f_matrix(a, b, c, q)
                    rows_abc, cols_abc = cat.f_bases(a, b, c, q)
                    for z in cat.channels(c, d):
                        nk = cat.nijk(c, d, z)
                        for y in cat.channels(b, z):
                            nl = cat.nijk(b, z, y)
                            ns = cat.nijk(a, y, e)
                            if ns == 0:
                                continue
                            Fabz = cat.f_matrix(a, b, z, e)
                            rows_abz, cols_abz = cat.f_bases(a, b, z, e)
                            Fbcd = cat.f_matrix(b, c, d, y)
                            rows_bcd, cols_bcd = cat.f_bases(b, c, d, y)
                            # middle objects x of the three-move path
                            mids = [x for x in cat.channels(b, c)
                                    if cat.nijk(a, x, q) and cat.nijk(x, d, y)]
                            fx = {x: (cat.f_matrix(a, x, d, e), *cat.f_bases(a, x, d, e))
                                  for x in mids}
                            nt = cat.nijk(p, z, e)
                            for a1 in range(na):
                                for b2 in range(nb):
                                    for g in range(ng):
                                        for k in range(nk):
                                            for l in range(nl):
                                                for s in range(ns):
                                                    lhs = 0.0 + 0.0j
                                                    for t in range(nt):
                                                        lhs += (Fpcd[rows_pcd[q, b2, g], cols_pcd[z, k, t]]
                                                                * Fabz[rows_abz[p, a1, t], cols_abz[y, l, s]])
                                                    rhs = 0.0 + 0.0j
                                                    for x in mids:
                                                        Faxd, rows_axd, cols_axd = fx[x]
                                                        for m in range(cat.nijk(b, c, x)):
                                                            for nn in range(cat.nijk(a, x, q)):
                                                                for r in range(cat.nijk(x, d, y)):
                                                                    rhs += (Fabc[rows_abc[p, a1, b2], cols_abc[x, m, nn]]
                                                                            * Faxd[rows_axd[q, nn, g], cols_axd[y, r, s]]
                                                                            * Fbcd[rows_bcd[x, m, r], cols_bcd[z, k, l]])
                                                    res = abs(lhs - rhs)
                                                    if res > worst:
                                                        worst = res
                                                        worst_at = (a, b, c, d, e)
    return worst, worst_at


def verify_hexagon(cat: SkeletalCategory) -> tuple[float, tuple]:
    """Maximum hexagon residual over both braiding families.

    Family one braids the leftmost strand with the forward braiding:

        ``sum_{g,...} F[abc;d][(e,a1,b1),(g,g1,n)] R[a,g;d][n,n']
        F[bca;d][(g,g1,n'),(h,m,r)]
        = sum R[a,b;e][a1,a'] F[bac;d][(e,a',b1),(h,m',r)] R[a,c;h][m',m]``

    Family two replaces every R-matrix by the matrix of the inverse braiding
    (``c^{-1}_{y,x}`` acting on ``(x y -> k)`` is ``inv(R[y,x;k])``).

    Returns ``(max_residual, worst_tuple)``.
    """
    worst = 0.0
    worst_at: tuple = ()
    rng = range(cat.n)

    for family in (1, 2):
        def rmat(x, y, k):
            if family == 1:
                return cat.r_matrix(x, y, k)
            return np.linalg.inv(cat.r_matrix(y, x, k))

        for a, b, c in itertools.product(rng, rng, rng):
            for e in cat.channels(a, b):
                for d in cat.channels(e, c):
                    Fabc = cat.f_matrix(a, b, c, d)
                    rows_abc, cols_abc = cat.f_bases(a, b, c, d)
                    Fbca = cat.f_matrix(b, c, a, d)
                    rows_bca, cols_bca = cat.f_bases(b, c, a, d)
                    Fbac = cat.f_matrix(b, a, c, d)
                    rows_bac, cols_bac = cat.f_bases(b, a, c, d)
                    Rab = rmat(a, b, e)
                    for h in cat.channels(c, a):
                        if cat.nijk(b, h, d) == 0:
                            continue
                        Rac = rmat(a, c, h)
                        for a1 in range(cat.nijk(a, b, e)):
                            for b1 in range(cat.nijk(e, c, d)):
                                for m in range(cat.nijk(c, a, h)):
                                    for r in range(cat.nijk(b, h, d)):
                                        lhs = 0.0 + 0.0j
                                        for g in cat.channels(b, c):
                                            if cat.nijk(a, g, d) == 0:
                                                continue
                                            Rag = rmat(a, g, d)
                                            for g1 in range(cat.nijk(b, c, g)):
                                                for n1 in range(cat.nijk(a, g, d)):
                                                    for n2 in range(cat.nijk(g, a, d)):
                                                        lhs += (Fabc[rows_abc[e, a1, b1], cols_abc[g, g1, n1]]
                                                                * Rag[n1, n2]
                                                                * Fbca[rows_bca[g, g1, n2], cols_bca[h, m, r]])
                                        rhs = 0.0 + 0.0j
                                        for a2 in range(cat.nijk(b, a, e)):
                                            for m2 in range(cat.nijk(a, c, h)):
                                                rhs += (Rab[a1, a2]
                                                        * Fbac[rows_bac[e, a2, b1], cols_bac[h, m2, r]]
                                                        * Rac[m2, m])
                                        res = abs(lhs - rhs)
                                        if res > worst:
                                            worst = res
                                            worst_at = (family, a, b, c, d)
    return worst, worst_at


def verify_ribbon(cat: SkeletalCategory) -> float:
    """Maximum residual of ``R[j,i;k] @ R[i,j;k] = (theta_k / theta_i theta_j) I``."""
    worst = 0.0
    for i in range(cat.n):
        for j in range(cat.n):
            for k in cat.channels(i, j):
                m = cat.nijk(i, j, k)
                mono = cat.r_matrix(j, i, k) @ cat.r_matrix(i, j, k)
                target = (cat.theta[k] / (cat.theta[i] * cat.theta[j])) * np.eye(m)
                worst = max(worst, float(np.max(np.abs(mono - target))))
    return worst


# -- S-matrix and Verlinde ----------------------------------------------------


class SMatrix:
    """S-matrix data of a skeletal category.

    Attributes
    ----------
    s_tilde : ndarray
        Unnormalized ``s~_{ij} = sum_k N[dual(i), j, k] (theta_k / theta_i
        theta_j) d_k``.
    S : ndarray
        Normalized ``s~ / D`` with ``D = sqrt(sum d_i^2)``.
    D : float
        The positive square root of the global dimension.
    """

    def __init__(self, s_tilde: np.ndarray, D: float):
        self.s_tilde = s_tilde
        self.D = D
        self.S = s_tilde / D

    def unitarity_residual(self) -> float:
        n = self.S.shape[0]
        return float(np.max(np.abs(self.S @ self.S.conj().T - np.eye(n))))


def s_matrix(cat: SkeletalCategory) -> SMatrix:
    """Compute the S-matrix from twists and dimensions.

    Raises
    ------
    NondegeneracyFailure
        If ``|det s~|`` vanishes within tolerance (the category is not
        modular).
    """
    n = cat.n
    st = np.zeros((n, n), dtype=complex)
    for i in range(n):
        di = cat.dual[i]
        for j in range(n):
            acc = 0.0 + 0.0j
            for k in cat.channels(di, j):
                acc += cat.nijk(di, j, k) * (cat.theta[k] / (cat.theta[i] * cat.theta[j])) * cat.qdim[k]
            st[i, j] = acc
    det = np.linalg.det(st)
    if abs(det) <= cat.tolerance:
        raise NondegeneracyFailure(f"|det s~| = {abs(det):g} is not positive")
    return SMatrix(st, cat.global_dim_sqrt())


def verlinde_check(cat: SkeletalCategory, sm: SMatrix | None = None):
    """Fusion coefficients from the Verlinde formula versus the stored N.

    Returns
    -------
    (max_dev, n_prime) : tuple
        ``max_dev`` is the largest absolute deviation of
        ``sum_m S_im S_jm conj(S_km) / S_0m`` from ``N[i, j, k]``;
        ``n_prime`` the rounded integer tensor.
    """
    sm = sm or s_matrix(cat)
    S = sm.S
    with np.errstate(divide="raise", invalid="raise"):
        weights = 1.0 / S[0]
    n_complex = np.einsum("im,jm,km,m->ijk", S, S, S.conj(), weights)
    dev = float(np.max(np.abs(n_complex - cat.N.astype(float))))
    return dev, np.round(n_complex.real).astype(np.int64)


def modular_relations(cat: SkeletalCategory, sm: SMatrix | None = None):
    """Residuals of ``(S T)^3 = S^2`` and ``S^2 = C``, each up to a phase.

    Returns a dict with keys ``st3_residual``, ``s2_residual``, ``st3_phase``
    and ``s2_phase``.  The optimal global phase is the polar part of the
    Frobenius inner product of the two sides.
    """
    sm = sm or s_matrix(cat)
    S = sm.S
    T = np.diag(cat.theta)
    M1 = np.linalg.matrix_power(S @ T, 3)
    M2 = S @ S

    def phase_residual(A, B):
        ip = np.trace(A @ B.conj().T)
        ph = ip / abs(ip) if abs(ip) > 0 else 1.0
        return float(np.max(np.abs(A - ph * B))), complex(ph)

    st3, ph1 = phase_residual(M1, M2)
    C = np.zeros_like(S)
    for i in range(cat.n):
        C[i, cat.dual[i]] = 1.0
    s2, ph2 = phase_residual(M2, C)
    return {"st3_residual": st3, "s2_residual": s2,
            "st3_phase": ph1, "s2_phase": ph2}


def verify_category(cat: SkeletalCategory) -> ReportDocument:
    """Full verification suite for a skeletal category.

    Aggregates the fusion-ring axioms, pentagon, hexagon, ribbon
    compatibility, the dimension/twist normalizations, agreement of ``d_i``
    with the Perron-Frobenius eigenvalue of ``N_i``, and S-matrix
    nondegeneracy into one report.
    """
    tol = cat.tolerance
    checks = []

    ring_rep = cat.ring.verify()
    checks.append(CheckResult("fusion_ring", 0.0 if ring_rep.passed else 1.0,
                              0.5, ring_rep.passed,
                              "; ".join(ring_rep.failures)))

    comm = float(np.max(np.abs(cat.N.astype(np.int64)
                               - cat.N.transpose(1, 0, 2))))
    checks.append(CheckResult("braided_fusion", comm, 0.5, comm == 0,
                              "N[i,j,k] == N[j,i,k] is required for R data"))

    res = float(abs(cat.theta[0] - 1.0))
    checks.append(CheckResult("unit_twist", res, tol, res <= tol, ""))
    res = float(abs(cat.qdim[0] - 1.0))
    checks.append(CheckResult("unit_dim", res, tol, res <= tol, ""))
    res = float(np.max(np.abs(np.abs(cat.theta) - 1.0)))
    checks.append(CheckResult("twist_modulus", res, tol, res <= tol, ""))
    res = float(np.max(np.abs(cat.qdim - cat.qdim[cat.dual])))
    checks.append(CheckResult("dual_dims", res, tol, res <= tol, ""))
    res = float(np.max(np.abs(cat.qdim - cat.ring.pf_dims())))
    checks.append(CheckResult("pf_dims", res, tol, res <= tol,
                              "quantum dimensions versus PF eigenvalues"))

    if ring_rep.passed:
        pres, pworst = verify_pentagon(cat)
        checks.append(CheckResult("pentagon", pres, tol, pres <= tol,
                                  f"worst at {pworst}" if pworst else ""))
        hres, hworst = verify_hexagon(cat)
        checks.append(CheckResult("hexagon", hres, tol, hres <= tol,
                                  f"worst at {hworst}" if hworst else ""))
        rres = verify_ribbon(cat)
        checks.append(CheckResult("ribbon", rres, tol, rres <= tol, ""))
        try:
            sm = s_matrix(cat)
            ures = sm.unitarity_residual()
            checks.append(CheckResult("s_unitarity", ures, max(tol * cat.n, tol),
                                      ures <= max(tol * cat.n, tol), ""))
        except NondegeneracyFailure as exc:
            checks.append(CheckResult("s_unitarity", float("inf"), tol, False, str(exc)))

    return ReportDocument(kind="category_check", name=cat.name,
                          passed=all(c.passed for c in checks), checks=checks)
