"""Tests for morphisms between direct sums of simple objects."""

from __future__ import annotations

import numpy as np
import pytest

from fuscat import blocks
from fuscat.blocks import BlockMorphism, SumObject
from fuscat.errors import ShapeMismatch


def two_charge_sum(cat):
    """1 + x for the first nontrivial label x."""
    return SumObject(cat, (0, 1), name="1+x")


class TestSumObject:
    def test_simple_wraps_one_label(self, fibonacci):
        s = SumObject.simple(fibonacci, 1)
        assert s.labels == (1,)

    def test_quantum_dimension_adds(self, ising):
        s = SumObject(ising, (0, 1, 2, 2))
        expected = sum(ising.qdim[l] for l in (0, 1, 2, 2))
        assert s.dim_q == pytest.approx(expected)

    def test_multiplicity_counts_copies(self, toric_code):
        s = SumObject(toric_code, (0, 3, 3))
        assert s.multiplicity(3) == 2
        assert s.multiplicity(1) == 0

    def test_dual_dualizes_each_copy(self, z3_anyons):
        s = SumObject(z3_anyons, (0, 1, 2))
        assert s.dual().labels == (0, 2, 1)

    def test_label_out_of_range_rejected(self, fibonacci):
        with pytest.raises(Exception):
            SumObject(fibonacci, (0, 5))

    def test_empty_rejected(self, fibonacci):
        with pytest.raises(Exception):
            SumObject(fibonacci, ())


class TestBlockStructure:
    def test_identity_blocks_are_diagonal(self, ising):
        s = SumObject(ising, (0, 2))
        ident = blocks.identity(ising, (s, s))
        keys = set(ident.blocks)
        assert all(ck == dk for ck, dk in keys)

    def test_zero_block_returned_on_demand(self, ising):
        s = SumObject(ising, (0, 1))
        z = blocks.zero(ising, (s,), (s,))
        b = z.block((1,), (0,))
        assert b.norm() == 0.0

    def test_word_mismatch_rejected(self, ising):
        from fuscat import morphism as plain
        s = SumObject(ising, (0, 1))
        f = plain.identity(ising, (0,))
        with pytest.raises(ShapeMismatch):
            BlockMorphism(ising, (s,), (s,), {((0,), (1,)): f})

    def test_compose_matches_flattened_product(self, ising, rng):
        a = SumObject(ising, (0, 2))
        b = SumObject(ising, (1, 2))
        f = blocks.random_block_morphism(ising, (a,), (b,), rng)
        g = blocks.random_block_morphism(ising, (b,), (a,), rng)
        prod = blocks.compose(g, f)
        ff, gg, pp = blocks.flatten(f), blocks.flatten(g), blocks.flatten(prod)
        for c, mat in pp.items():
            assert np.allclose(mat, gg[c] @ ff[c], atol=1e-12)

    def test_flatten_unflatten_roundtrip(self, su2_4, rng):
        a = SumObject(su2_4, (0, 2, 4))
        b = SumObject(su2_4, (2, 2))
        f = blocks.random_block_morphism(su2_4, (a, b), (b,), rng)
        g = blocks.unflatten(su2_4, (a, b), (b,), blocks.flatten(f))
        assert g.distance(f) < 1e-12

    def test_unflatten_rejects_wrong_shape(self, ising):
        a = SumObject(ising, (0, 1))
        with pytest.raises(ShapeMismatch):
            blocks.unflatten(ising, (a,), (a,), {0: np.zeros((3, 3))})

    def test_tensor_functorial(self, fibonacci, rng):
        s = two_charge_sum(fibonacci)
        f1 = blocks.random_block_morphism(fibonacci, (s,), (s,), rng)
        f2 = blocks.random_block_morphism(fibonacci, (s,), (s,), rng)
        g1 = blocks.random_block_morphism(fibonacci, (s,), (s,), rng)
        g2 = blocks.random_block_morphism(fibonacci, (s,), (s,), rng)
        lhs = blocks.compose(blocks.tensor(f2, g2), blocks.tensor(f1, g1))
        rhs = blocks.tensor(blocks.compose(f2, f1), blocks.compose(g2, g1))
        assert lhs.distance(rhs) < 1e-10

    def test_adjoint_reverses_composition(self, ising, rng):
        a = SumObject(ising, (0, 2))
        b = SumObject(ising, (1, 2))
        f = blocks.random_block_morphism(ising, (a,), (b,), rng)
        g = blocks.random_block_morphism(ising, (b,), (a,), rng)
        lhs = blocks.compose(g, f).adjoint()
        rhs = blocks.compose(f.adjoint(), g.adjoint())
        assert lhs.distance(rhs) < 1e-10


class TestDualityAndBraiding:
    def test_loop_value_is_total_dimension(self, all_bundled):
        for cat in all_bundled:
            s = SumObject(cat, tuple(range(cat.n)))
            loop = blocks.compose(blocks.cap(cat, s), blocks.cup(cat, s))
            assert loop.scalar() == pytest.approx(s.dim_q, abs=1e-9)

    def test_zigzag_is_identity(self, all_bundled):
        for cat in all_bundled:
            s = SumObject(cat, tuple(range(cat.n)))
            ident = blocks.identity(cat, (s,))
            z1 = blocks.compose(
                blocks.tensor(ident, blocks.cap_right(cat, s)),
                blocks.tensor(blocks.cup(cat, s), ident))
            z2 = blocks.compose(
                blocks.tensor(blocks.cap(cat, s), ident),
                blocks.tensor(ident, blocks.cup_right(cat, s)))
            assert z1.distance(ident) < 1e-9
            assert z2.distance(ident) < 1e-9

    def test_braid_inverse(self, ising, rng):
        a = SumObject(ising, (0, 2))
        b = SumObject(ising, (1, 2))
        word = (a, b)
        c = blocks.braid(ising, word, 0)
        cinv = blocks.braid(ising, (b, a), 0, inverse=True)
        assert blocks.compose(cinv, c).distance(
            blocks.identity(ising, word)) < 1e-10

    def test_braid_naturality(self, su2_4, rng):
        a = SumObject(su2_4, (1, 3))
        b = SumObject(su2_4, (0, 2))
        f = blocks.random_block_morphism(su2_4, (a,), (a,), rng)
        g = blocks.random_block_morphism(su2_4, (b,), (b,), rng)
        c_ab = blocks.braid(su2_4, (a, b), 0)
        lhs = blocks.compose(blocks.tensor(g, f), c_ab)
        rhs = blocks.compose(c_ab, blocks.tensor(f, g))
        assert lhs.distance(rhs) < 1e-9

    def test_trace_of_identity(self, fibonacci):
        s = SumObject(fibonacci, (0, 1, 1))
        tr = blocks.trace(blocks.identity(fibonacci, (s,)))
        assert tr == pytest.approx(s.dim_q, abs=1e-9)

    def test_twist_matches_double_braid(self, toric_code):
        s = SumObject(toric_code, (1, 2))
        double = blocks.compose(blocks.braid(toric_code, (s, s), 0),
                                blocks.braid(toric_code, (s, s), 0))
        lhs = blocks.compose(
            blocks.tensor(blocks.twist(toric_code, (s,)),
                          blocks.twist(toric_code, (s,))),
            double)
        assert lhs.distance(blocks.twist(toric_code, (s, s))) < 1e-10

    def test_dim_hom_counts_fusion_channels(self, ising):
        a = SumObject(ising, (2,))
        b = SumObject(ising, (2,))
        # sigma x sigma = 1 + psi: one channel each to 1+psi
        c = SumObject(ising, (0, 1))
        assert blocks.dim_hom(ising, (a, b), (c,)) == 2
