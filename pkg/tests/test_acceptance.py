"""Acceptance gate: one test per release criterion, at the stated tolerances.

Run with ``pytest -v tests/test_acceptance.py`` to get one PASS/FAIL line per
criterion.  Each test states its tolerance and runtime budget inline; nothing
here relaxes a threshold used elsewhere in the suite.
"""

from __future__ import annotations

import time

import numpy as np
import pytest

from fuscat import (
    MalformedTable,
    SkeletalCategory,
    load_algebra,
    bundled_names,
    bundled_path,
    modular_relations,
    s_matrix,
    verify_pentagon,
    verify_hexagon,
    verlinde_check,
)
from fuscat.algebra import (
    cardy_algebra,
    check_algebra,
    evaluate_algebra_network,
    pachner_move_pairs,
    simple_current_candidate,
)
from fuscat import modules as md
from fuscat import observables as ob


@pytest.fixture(scope="module")
def bundled_algebras():
    names = [n[:-4] for n in bundled_names() if n.endswith(".alg")]
    return {n: load_algebra(bundled_path(n)) for n in names}


def retabled(cat, F):
    return SkeletalCategory(cat.ring, F, dict(cat.R), cat.theta, cat.qdim,
                            tolerance=cat.tolerance, name=cat.name,
                            label_names=cat.label_names)


def tamper_detected(cat, key, r, c):
    """True if bumping one F entry by 0.1 is caught at build or check time."""
    F = dict(cat.F)
    mat = F[key].copy()
    mat[r, c] += 0.1
    F[key] = mat
    try:
        bad = retabled(cat, F)
    except MalformedTable:
        return True
    res, _ = verify_pentagon(bad)
    return res > 1e-3


def test_criterion_01_coherence(all_bundled):
    # pentagon and hexagon residuals <= 1e-9 everywhere; every single-entry
    # 0.1 tamper detectable; whole criterion within 10 s
    t0 = time.monotonic()
    for cat in all_bundled:
        res_p, _ = verify_pentagon(cat)
        res_h, _ = verify_hexagon(cat)
        assert res_p <= 1e-9, cat.name
        assert res_h <= 1e-9, cat.name
    for name in ("fibonacci", "ising"):
        cat = next(c for c in all_bundled if c.name == name)
        for key, mat in cat.F.items():
            for r in range(mat.shape[0]):
                for s in range(mat.shape[1]):
                    assert tamper_detected(cat, key, r, s), (name, key, r, s)
    for cat in all_bundled:
        if not cat.F:
            continue  # no stored entries to tamper with
        key = next(iter(sorted(cat.F)))
        assert tamper_detected(cat, key, 0, 0), cat.name
    assert time.monotonic() - t0 <= 10.0


def test_criterion_02_modularity(all_bundled):
    # (ST)^3 = S^2 up to a global phase at 1e-8; S^2 equals charge
    # conjugation on the nose; Verlinde integer counts reproduce N exactly
    for cat in all_bundled:
        rel = modular_relations(cat)
        assert rel["st3_residual"] <= 1e-8, cat.name
        assert rel["s2_residual"] <= 1e-8, cat.name
        assert abs(rel["s2_phase"] - 1) <= 1e-8, cat.name
        dev, nprime = verlinde_check(cat)
        assert np.array_equal(nprime, cat.ring.N.astype(nprime.dtype)), \
            cat.name


def test_criterion_03a_cardy_algebra_everywhere(all_bundled):
    # the unit object with its canonical structure passes every axiom at 1e-9
    for cat in all_bundled:
        rep = check_algebra(cardy_algebra(cat), tolerance=1e-9)
        assert rep.passed, (cat.name,
                            [(c.name, c.residual) for c in rep.checks])


def test_criterion_03b_toric_code_one_e(toric_code):
    rep = check_algebra(simple_current_candidate(toric_code, (0, 1)),
                        tolerance=1e-9)
    assert rep.passed


@pytest.mark.xfail(
    strict=True,
    reason="stated expectation is false: 1+psi carries a valid symmetric "
    "special Frobenius structure for every phase on the 12-point grid "
    "(theta_psi = -1 obstructs commutativity, not the axioms; the genuine "
    "all-phase failure is the semion 1+s, covered in test_algebra.py)")
def test_criterion_03c_ising_one_psi_rejected_on_phase_grid(ising):
    # as stated: 1+psi must fail for every phase choice on a 12-point grid
    for k in range(12):
        ph = np.exp(2j * np.pi * k / 12)
        cocycle = {(0, 0): 1.0, (0, 1): 1.0, (1, 0): 1.0, (1, 1): ph}
        alg = simple_current_candidate(ising, (0, 1), cocycle=cocycle)
        rep = check_algebra(alg)
        assert not rep.passed, k


def test_criterion_04_triangulation_invariance(bundled_algebras):
    # >= 5 closed-network pairs per algebra, each related by a Pachner
    # 2-2 or 1-3 move, equal values within 1e-8
    pairs = pachner_move_pairs()
    assert len(pairs) >= 5
    for name, alg in bundled_algebras.items():
        for move, net_a, net_b in pairs:
            va = evaluate_algebra_network(alg, net_a)
            vb = evaluate_algebra_network(alg, net_b)
            assert abs(va - vb) <= 1e-8, (name, move)


def test_criterion_05_averaging_projectors(bundled_algebras):
    # Ave o Ave = Ave within 1e-8 and integer traces within 1e-6, for the
    # module and bimodule hom computations of every bundled algebra
    for name, alg in bundled_algebras.items():
        reg_m = md.LeftModule(alg, (alg.A,), alg.m)
        ind = md.induced_module(alg, min(1, alg.cat.n - 1))
        for m_mod, n_mod in ((reg_m, reg_m), (ind, reg_m), (ind, ind)):
            p = md.module_projector_matrix(m_mod, n_mod)
            if p.size:
                assert np.abs(p @ p - p).max() <= 1e-8, name
                tr = complex(np.trace(p))
                assert abs(tr - round(tr.real)) <= 1e-6, name
        reg_b = md.regular_bimodule(alg)
        pb = md.bimodule_projector_matrix(reg_b, reg_b)
        assert np.abs(pb @ pb - pb).max() <= 1e-8, name
        trb = complex(np.trace(pb))
        assert abs(trb - round(trb.real)) <= 1e-6, name


def test_criterion_06_cardy_theorem(all_bundled):
    # torus partition function of the unit algebra is charge conjugation,
    # via projector traces, within 60 s for all bundled categories
    t0 = time.monotonic()
    for cat in all_bundled:
        z = ob.torus_partition_function(cardy_algebra(cat)).z
        conj = np.zeros((cat.n, cat.n), dtype=int)
        for i in range(cat.n):
            conj[i, cat.dual[i]] = 1
        assert np.array_equal(z, conj), cat.name
    assert time.monotonic() - t0 <= 60.0


def simple_current_invariant(cat, H):
    """Monodromy-charge oracle for simple-current torus invariants.

    Z_ij = [Q_h(i) = 1 for all h in H] * #{h in H : j = h * dual(i)} with
    Q_h(i) = theta_{h i} / (theta_h theta_i).  Independent of the bimodule
    machinery: only fusion coefficients and twists enter.
    """
    H = sorted(int(h) for h in H)

    def fuse(h, i):
        channels = np.flatnonzero(cat.ring.N[h, i])
        assert channels.size == 1
        return int(channels[0])

    z = np.zeros((cat.n, cat.n), dtype=int)
    for i in range(cat.n):
        charges = [cat.theta[fuse(h, i)] / (cat.theta[h] * cat.theta[i])
                   for h in H]
        if any(abs(q - 1) > 1e-9 for q in charges):
            continue
        for h in H:
            z[i, fuse(h, int(cat.dual[i]))] += 1
    return z


def test_criterion_07_nontrivial_invariants(toric_code, su2_4):
    toric_e = simple_current_candidate(toric_code, (0, 1), name="1+e")
    su_even = simple_current_candidate(su2_4, (0, 4), name="0+4")

    z_e = ob.torus_partition_function(toric_e).z
    want_e = np.array([[1, 1, 0, 0], [1, 1, 0, 0],
                       [0, 0, 0, 0], [0, 0, 0, 0]])
    assert np.array_equal(z_e, want_e)

    z_s = ob.torus_partition_function(su_even).z
    want_s = np.zeros((5, 5), dtype=int)
    want_s[0, 0] = want_s[0, 4] = want_s[4, 0] = want_s[4, 4] = 1
    want_s[2, 2] = 2
    assert np.array_equal(z_s, want_s)

    # independent oracle, computed from twists and fusion alone
    assert np.array_equal(z_e, simple_current_invariant(toric_code, (0, 1)))
    assert np.array_equal(z_s, simple_current_invariant(su2_4, (0, 4)))

    for alg, z in ((toric_e, z_e), (su_even, z_s)):
        cert = ob.check_modular_invariance(alg.cat, ob.PartitionTable(
            z, alg.name), haploid=True)
        assert cert.passed, alg.name
        by_name = {c.name: c for c in cert.checks}
        assert by_name["s_invariance"].residual <= 1e-8
        assert by_name["t_condition"].residual <= 1e-12


def test_criterion_08_nimrep(bundled_algebras):
    # annulus matrices satisfy A_i A_j = sum_k N_ij^k A_k in exact integer
    # arithmetic, and A_0 is the identity, for every bundled algebra
    for name, alg in bundled_algebras.items():
        ann = ob.annulus_coefficients(alg)
        rep = ob.check_nimrep(alg.cat, ann)
        assert rep.passed, (name,
                            [(c.name, c.detail) for c in rep.checks
                             if not c.passed])


def test_criterion_09_morita_relabeling(bundled_algebras):
    # condensing e or m gives the same torus invariant up to swapping e and m
    z_e = ob.torus_partition_function(bundled_algebras["toric_code_one_e"]).z
    z_m = ob.torus_partition_function(bundled_algebras["toric_code_one_m"]).z
    perm = np.array([0, 2, 1, 3])
    assert np.array_equal(z_m, z_e[np.ix_(perm, perm)])


def test_criterion_10_defects(all_bundled, bundled_algebras):
    # defect fusion over the unit algebra reproduces the fusion ring, and
    # the regular-defect partition function equals the torus one entrywise
    for cat in all_bundled:
        alg = cardy_algebra(cat)
        simples, table = md.defect_fusion_table(alg)
        assert len(simples) == cat.n, cat.name
        order = np.argsort([int(np.argmax(md.underlying_multiplicities(s)))
                            for s in simples])
        t = table[np.ix_(order, order, order)]
        assert np.array_equal(t, cat.ring.N), cat.name
    for name, alg in bundled_algebras.items():
        reg = md.regular_bimodule(alg)
        z_def = ob.defect_partition_function(alg, reg, reg).z
        z_tor = ob.torus_partition_function(alg).z
        assert np.array_equal(z_def, z_tor), name
