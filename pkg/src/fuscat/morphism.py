"""Morphisms between tensor words in the fusion-tree basis.

A :class:`Morphism` from word ``X`` to word ``Y`` stores one complex matrix
per total charge ``c``, indexed by (tree of Y into c) x (tree of X into c);
absent sectors are zero.  The basis is declared orthonormal, so adjoints are
blockwise conjugate transposes.

Component convention: basis changes act on coefficient vectors from the
left.  Since the F-matrix is stored as ``|left, (p,a,b)> = sum F[(p,a,b),
(q,g,d)] |right, (q,g,d)>``, coefficients transform with ``F^T`` from the
left-nested to the right-nested basis, and with ``(F^{-1})^T`` back.

Duality uses the cup/cap normalization

    cup(i)       = 1/kappa_i            : ()        -> (i, ibar)
    cap(i)       = theta_i R^{i ibar}_0 : (i, ibar) -> ()
    cup_right(i) = theta_i R^{i ibar}_0 / kappa_i : () -> (ibar, i)
    cap_right(i) = 1                    : (ibar, i) -> ()

with ``kappa_i = F^{i, ibar, i}_i`` at the vacuum channel.  Closed loops
then evaluate to ``d_i`` and both zig-zag identities hold; both facts are
verified numerically for every bundled category rather than assumed.
"""

from __future__ import annotations

import numpy as np

from .errors import IndexOutOfRange, ShapeMismatch
from .trees import admissible_totals, count_trees, fusion_trees, tree_index

__all__ = [
    "Morphism",
    "identity",
    "zero",
    "compose",
    "tensor",
    "braid",
    "twist",
    "cup",
    "cap",
    "cup_right",
    "cap_right",
    "partial_trace_last",
    "trace",
    "dim_hom",
    "random_morphism",
]


class Morphism:
    """A morphism between tensor words, stored per total-charge sector.

    Parameters
    ----------
    cat : SkeletalCategory
    domain, codomain : tuple of int
        Tensor words; the empty tuple is the unit object.
    blocks : dict[int, ndarray]
        Charge ``c`` to the matrix (trees of codomain at c) x (trees of
        domain at c).  Sectors may be omitted; zero and empty blocks are
        dropped.
    """

    def __init__(self, cat, domain, codomain, blocks):
        self.cat = cat
        self.domain = tuple(domain)
        self.codomain = tuple(codomain)
        clean: dict[int, np.ndarray] = {}
        for c, mat in blocks.items():
            mat = np.asarray(mat, dtype=complex)
            nr = count_trees(cat, self.codomain, c)
            nc = count_trees(cat, self.domain, c)
            if mat.shape != (nr, nc):
                raise ShapeMismatch(
                    f"block {c} has shape {mat.shape}, expected {(nr, nc)}")
            if nr and nc and np.any(mat):
                clean[c] = mat
        self.blocks = clean

    # -- bookkeeping ----------------------------------------------------------

    def block(self, c: int) -> np.ndarray:
        """The sector matrix at charge ``c`` (zeros when absent)."""
        got = self.blocks.get(c)
        if got is not None:
            return got
        return np.zeros((count_trees(self.cat, self.codomain, c),
                         count_trees(self.cat, self.domain, c)), dtype=complex)

    def is_endo(self) -> bool:
        return self.domain == self.codomain

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return (f"Morphism({list(self.domain)} -> {list(self.codomain)}, "
                f"sectors={sorted(self.blocks)})")

    # -- linear structure -------------------------------------------------------

    def _require_parallel(self, other: "Morphism"):
        if self.domain != other.domain or self.codomain != other.codomain:
            raise ShapeMismatch("morphisms are not parallel")

    def __add__(self, other: "Morphism") -> "Morphism":
        self._require_parallel(other)
        out = {}
        for c in set(self.blocks) | set(other.blocks):
            out[c] = self.block(c) + other.block(c)
        return Morphism(self.cat, self.domain, self.codomain, out)

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + (-1.0) * other

    def __neg__(self) -> "Morphism":
        return (-1.0) * self

    def __mul__(self, scalar) -> "Morphism":
        return Morphism(self.cat, self.domain, self.codomain,
                        {c: scalar * m for c, m in self.blocks.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)

    def adjoint(self) -> "Morphism":
        """Blockwise conjugate transpose (the tree basis is orthonormal)."""
        return Morphism(self.cat, self.codomain, self.domain,
                        {c: m.conj().T for c, m in self.blocks.items()})

    def norm(self) -> float:
        """Largest sector Frobenius norm."""
        if not self.blocks:
            return 0.0
        return max(float(np.linalg.norm(m)) for m in self.blocks.values())

    def distance(self, other: "Morphism") -> float:
        """Largest sector Frobenius norm of the difference."""
        self._require_parallel(other)
        out = 0.0
        for c in set(self.blocks) | set(other.blocks):
            out = max(out, float(np.linalg.norm(self.block(c) - other.block(c))))
        return out

    def scalar(self) -> complex:
        """The value of a morphism between empty words."""
        if self.domain or self.codomain:
            raise ShapeMismatch("scalar() needs empty domain and codomain")
        blk = self.blocks.get(0)
        return complex(blk[0, 0]) if blk is not None else 0.0 + 0.0j


# -- constructors ----------------------------------------------------------------


def identity(cat, word) -> Morphism:
    word = tuple(word)
    blocks = {c: np.eye(count_trees(cat, word, c), dtype=complex)
              for c in admissible_totals(cat, word)}
    return Morphism(cat, word, word, blocks)


def zero(cat, domain, codomain) -> Morphism:
    return Morphism(cat, domain, codomain, {})


def twist(cat, word, inverse: bool = False) -> Morphism:
    """The ribbon twist on a word: ``theta_c`` on each total-charge sector."""
    word = tuple(word)
    blocks = {}
    for c in admissible_totals(cat, word):
        th = cat.theta[c] if not inverse else 1.0 / cat.theta[c]
        blocks[c] = th * np.eye(count_trees(cat, word, c), dtype=complex)
    return Morphism(cat, word, word, blocks)


def random_morphism(cat, domain, codomain, rng) -> Morphism:
    """Dense random morphism with standard-normal re/im parts."""
    domain, codomain = tuple(domain), tuple(codomain)
    blocks = {}
    for c in admissible_totals(cat, domain):
        nr = count_trees(cat, codomain, c)
        nc = count_trees(cat, domain, c)
        if nr and nc:
            blocks[c] = rng.standard_normal((nr, nc)) + 1j * rng.standard_normal((nr, nc))
    return Morphism(cat, domain, codomain, blocks)


# -- composition and tensor -------------------------------------------------------


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g  after  f``; sector-wise matrix product."""
    if g.cat is not f.cat:
        raise ShapeMismatch("morphisms live over different categories")
    if g.domain != f.codomain:
        raise ShapeMismatch(
            f"cannot compose: {list(g.domain)} != {list(f.codomain)}")
    blocks = {}
    for c in set(g.blocks) & set(f.blocks):
        blocks[c] = g.blocks[c] @ f.blocks[c]
    return Morphism(f.cat, f.domain, g.codomain, blocks)


def _merge_cache(cat) -> dict:
    try:
        return cat._merge_cache
    except AttributeError:
        cat._merge_cache = {}
        return cat._merge_cache


def product_basis(cat, X, Z, c) -> list[tuple]:
    """Basis of ``Hom(c, X x Z)`` as tuples ``(a, b, mu, ix, iz)``.

    ``a``/``b`` run over admissible totals of X/Z with ``N[a, b, c] > 0``,
    ``mu`` over the fusion multiplicity, ``ix``/``iz`` over tree indices.
    Ordered by ``(a, b, mu, ix, iz)``.
    """
    out = []
    for a in admissible_totals(cat, X):
        nx = count_trees(cat, X, a)
        for b in admissible_totals(cat, Z):
            m = cat.nijk(a, b, c)
            if m == 0:
                continue
            nz = count_trees(cat, Z, b)
            for mu in range(m):
                for ix in range(nx):
                    for iz in range(nz):
                        out.append((a, b, mu, ix, iz))
    return out


def merge_transform(cat, X, Z, c) -> np.ndarray:
    """Change of basis from the ``(X, Z)`` product basis to the tree basis.

    Rows are left-nested trees of the concatenated word ``X + Z`` at charge
    ``c``, columns the :func:`product_basis`.  Built recursively: the last
    factor of Z is split off with an inverse F-move and the remainder merged
    recursively.
    """
    X, Z = tuple(X), tuple(Z)
    key = ("merge", X, Z, c)
    cache = _merge_cache(cat)
    got = cache.get(key)
    if got is not None:
        return got

    word = X + Z
    rows = tree_index(cat, word, c)
    cols = product_basis(cat, X, Z, c)
    col_pos = {t: i for i, t in enumerate(cols)}
    M = np.zeros((len(rows), len(cols)), dtype=complex)

    if len(Z) == 0:
        # product basis is (c, 0, 0, ix, 0) in tree order
        for i, (a, b, mu, ix, iz) in enumerate(cols):
            M[ix, i] = 1.0
    elif len(X) == 0:
        # product basis is (0, c, 0, 0, iz) in tree order
        for i, (a, b, mu, ix, iz) in enumerate(cols):
            M[iz, i] = 1.0
    elif len(Z) == 1:
        # appending one factor: the pair vertex becomes the last tree vertex
        trees_x = {a: fusion_trees(cat, X, a) for a in admissible_totals(cat, X)}
        for i, (a, b, mu, ix, iz) in enumerate(cols):
            tx = trees_x[a][ix]
            M[rows[tx + ((c, mu),)], i] = 1.0
    else:
        Zp, z = Z[:-1], Z[-1]
        trees_z = {b: fusion_trees(cat, Z, b) for b in admissible_totals(cat, Z)}
        trees_zp = {b: tree_index(cat, Zp, b) for b in admissible_totals(cat, Zp)}
        trees_xzp = {e: fusion_trees(cat, X + Zp, e)
                     for e in admissible_totals(cat, X + Zp)}
        sub = {}
        for i, (a, b, mu, ix, iz) in enumerate(cols):
            tz = trees_z[b][iz]
            bp = tz[-2][0] if len(tz) >= 2 else Zp[0]
            nu = tz[-1][1]
            izp = trees_zp[bp][tz[:-1]]
            finv = cat.f_inv(a, bp, z, c)
            frows, fcols = cat.f_bases(a, bp, z, c)
            q_idx = fcols[b, nu, mu]
            for (e, sg, rho), l_idx in frows.items():
                coeff = finv[q_idx, l_idx]
                if abs(coeff) < 1e-300:
                    continue
                if e not in sub:
                    sub[e] = (merge_transform(cat, X, Zp, e),
                              {t: i2 for i2, t in
                               enumerate(product_basis(cat, X, Zp, e))})
                Mrec, colp_pos = sub[e]
                colp = colp_pos[a, bp, sg, ix, izp]
                for imid, tmid in enumerate(trees_xzp[e]):
                    v = Mrec[imid, colp]
                    if v != 0.0:
                        M[rows[tmid + ((c, rho),)], i] += coeff * v

    cache[key] = M
    return M


def _merge_inv(cat, X, Z, c) -> np.ndarray:
    key = ("merge_inv", tuple(X), tuple(Z), c)
    cache = _merge_cache(cat)
    got = cache.get(key)
    if got is None:
        got = np.linalg.inv(merge_transform(cat, X, Z, c))
        cache[key] = got
    return got


def tensor(f: Morphism, g: Morphism) -> Morphism:
    """Tensor product on concatenated words via merge transforms."""
    if f.cat is not g.cat:
        raise ShapeMismatch("morphisms live over different categories")
    cat = f.cat
    X, Z = f.domain, g.domain
    Y, W = f.codomain, g.codomain
    dom, cod = X + Z, Y + W
    blocks = {}
    for c in admissible_totals(cat, dom):
        if not count_trees(cat, cod, c):
            continue
        cols_d = product_basis(cat, X, Z, c)
        cols_c = product_basis(cat, Y, W, c)
        if not cols_d or not cols_c:
            continue
        P = np.zeros((len(cols_c), len(cols_d)), dtype=complex)
        nonzero = False
        for r, (a2, b2, mu2, iy, iw) in enumerate(cols_c):
            fa = f.blocks.get(a2)
            gb = g.blocks.get(b2)
            if fa is None or gb is None:
                continue
            for s, (a, b, mu, ix, iz) in enumerate(cols_d):
                if a == a2 and b == b2 and mu == mu2:
                    v = fa[iy, ix] * gb[iw, iz]
                    if v != 0.0:
                        P[r, s] = v
                        nonzero = True
        if not nonzero:
            continue
        blocks[c] = merge_transform(cat, Y, W, c) @ P @ _merge_inv(cat, X, Z, c)
    return Morphism(cat, dom, cod, blocks)


# -- braiding --------------------------------------------------------------------


def braid(cat, word, pos: int, inverse: bool = False) -> Morphism:
    """Elementary braid of factors ``pos`` and ``pos + 1``.

    The positive braid takes ``(..., u, v, ...)`` to ``(..., v, u, ...)`` by
    the overcrossing ``c_{u,v}``; ``inverse=True`` gives the undercrossing
    ``c^{-1}_{v,u}`` between the same words.
    """
    word = tuple(word)
    n = len(word)
    if not 0 <= pos < n - 1:
        raise IndexOutOfRange(f"braid position {pos} invalid for length {n}")
    u, v = word[pos], word[pos + 1]
    new_word = word[:pos] + (v, u) + word[pos + 2:]

    def rmat(x):
        # matrix of the crossing on the vertex (u v -> x), new index first
        return cat.r_matrix(u, v, x) if not inverse else np.linalg.inv(
            cat.r_matrix(v, u, x))

    blocks = {}
    for c in admissible_totals(cat, word):
        src = fusion_trees(cat, word, c)
        dst = tree_index(cat, new_word, c)
        B = np.zeros((len(dst), len(src)), dtype=complex)
        for j, t in enumerate(src):
            if pos == 0:
                # the pair fuses at the first vertex: R acts directly
                m2, mu = t[0]
                R = rmat(m2)
                for mup in range(R.shape[0]):
                    val = R[mup, mu]
                    if val != 0.0:
                        tp = ((m2, mup),) + t[1:]
                        B[dst[tp], j] += val
            else:
                # conjugate R by F-moves around vertices pos-1 and pos
                mt = word[0] if pos == 1 else t[pos - 2][0]
                m1, mu1 = t[pos - 1]
                m2, mu2 = t[pos]
                F = cat.f_matrix(mt, u, v, m2)
                frows, fcols = cat.f_bases(mt, u, v, m2)
                Fp_inv = cat.f_inv(mt, v, u, m2)
                fprows, fpcols = cat.f_bases(mt, v, u, m2)
                l_idx = frows[m1, mu1, mu2]
                for (x, g, d), q_idx in fcols.items():
                    R = rmat(x)
                    for gp in range(R.shape[0]):
                        rv = R[gp, g]
                        if rv == 0.0:
                            continue
                        qp_idx = fpcols[x, gp, d]
                        for (m1p, mu1p, mu2p), lp_idx in fprows.items():
                            val = (F[l_idx, q_idx] * rv
                                   * Fp_inv[qp_idx, lp_idx])
                            if val != 0.0:
                                tp = (t[:pos - 1] + ((m1p, mu1p), (m2, mu2p))
                                      + t[pos + 1:])
                                B[dst[tp], j] += val
        if np.any(B):
            blocks[c] = B
    return Morphism(cat, word, new_word, blocks)


# -- duality ---------------------------------------------------------------------


def _kappa(cat, i: int) -> complex:
    ib = int(cat.dual[i])
    F = cat.f_matrix(i, ib, i, i)
    rows, cols = cat.f_bases(i, ib, i, i)
    return complex(F[rows[0, 0, 0], cols[0, 0, 0]])


def cup(cat, i: int) -> Morphism:
    """Coevaluation ``() -> (i, dual(i))`` with coefficient ``1/kappa_i``."""
    ib = int(cat.dual[i])
    return Morphism(cat, (), (i, ib), {0: [[1.0 / _kappa(cat, i)]]})


def cap(cat, i: int) -> Morphism:
    """Evaluation ``(i, dual(i)) -> ()``, coefficient ``theta_i R^{i ibar}_0``."""
    ib = int(cat.dual[i])
    coeff = cat.theta[i] * cat.r_matrix(i, ib, 0)[0, 0]
    return Morphism(cat, (i, ib), (), {0: [[coeff]]})


def cup_right(cat, i: int) -> Morphism:
    """Right coevaluation ``() -> (dual(i), i)``."""
    ib = int(cat.dual[i])
    coeff = cat.theta[i] * cat.r_matrix(i, ib, 0)[0, 0] / _kappa(cat, i)
    return Morphism(cat, (), (ib, i), {0: [[coeff]]})


def cap_right(cat, i: int) -> Morphism:
    """Right evaluation ``(dual(i), i) -> ()``, coefficient 1."""
    ib = int(cat.dual[i])
    return Morphism(cat, (ib, i), (), {0: [[1.0]]})


# -- traces ----------------------------------------------------------------------


def partial_trace_last(f: Morphism) -> Morphism:
    """Quantum right trace over the last factor.

    ``(id_Y x cap_i) o (f x id_ibar) o (id_X' x cup_i)`` where the domain is
    ``X' + (i,)`` and the codomain ``Y + (i,)``.
    """
    if not f.domain or not f.codomain or f.domain[-1] != f.codomain[-1]:
        raise ShapeMismatch("last factors of domain and codomain must agree")
    cat = f.cat
    i = f.domain[-1]
    ib = int(cat.dual[i])
    Xp = f.domain[:-1]
    Y = f.codomain[:-1]
    lift = tensor(identity(cat, Xp), cup(cat, i))
    push = tensor(f, identity(cat, (ib,)))
    drop = tensor(identity(cat, Y), cap(cat, i))
    return compose(drop, compose(push, lift))


def trace(f: Morphism) -> complex:
    """Full quantum trace of an endomorphism."""
    if f.domain != f.codomain:
        raise ShapeMismatch("trace needs an endomorphism")
    out = f
    while out.domain:
        out = partial_trace_last(out)
    return out.scalar()


def dim_hom(cat, X, Y) -> int:
    """Dimension of ``Hom(X, Y)``: paired tree counts over total charges."""
    X, Y = tuple(X), tuple(Y)
    return sum(count_trees(cat, X, c) * count_trees(cat, Y, c)
               for c in range(cat.n))
