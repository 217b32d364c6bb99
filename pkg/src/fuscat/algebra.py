"""Frobenius algebras inside a skeletal category.

A :class:`FrobeniusAlgebra` stores an underlying :class:`~fuscat.blocks.SumObject`
``A`` together with structure morphisms ``m : A x A -> A``, ``eta : 1 -> A``,
``delta : A -> A x A`` and ``eps : A -> 1`` as block morphisms, plus an
optional reversion (Jandl morphism) ``A -> A``.  Structures are supplied and
verified, never solved for: :func:`check_algebra` reports one residual per
axiom (associativity, unit, coassociativity, counit, Frobenius, specialness,
symmetry) and accepts the algebra only if all of them pass and the two
specialness scalars are nonzero.

The symmetry axiom compares the two canonical morphisms ``A -> A^dual``
built from the counited product and the (left or right) coevaluation; with
the engine's cup and cap normalization both are plain compositions, so the
comparison carries no hidden convention beyond the verified zig-zags.

:func:`evaluate_algebra_network` evaluates closed planar networks assembled
from the generators ``delta o eta`` (edge weight) and ``eps o m o (m x id)``
(triangle weight); triangulation invariance of these values is exercised via
the Pachner move pairs in :func:`pachner_move_pairs`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import blocks
from .blocks import BlockMorphism, SumObject
from .errors import (MalformedTable, NotInvertible, NotSpecial, ShapeMismatch)
from .morphism import Morphism
from .reporting import CheckResult, ReportDocument

__all__ = [
    "FrobeniusAlgebra",
    "check_algebra",
    "normalize_specialness",
    "cardy_algebra",
    "simple_current_candidate",
    "check_jandl",
    "NetworkSpec",
    "network_morphism",
    "evaluate_algebra_network",
    "pachner_move_pairs",
    "closed_network_library",
]


class FrobeniusAlgebra:
    """Algebra object with product, unit, coproduct, counit and optional reversion.

    Parameters
    ----------
    cat : SkeletalCategory
    A : SumObject
        Underlying object.
    m, eta, delta, eps : BlockMorphism
        Structure morphisms ``A x A -> A``, ``1 -> A``, ``A -> A x A``,
        ``A -> 1``.
    jandl : BlockMorphism or None
        Optional reversion ``A -> A``; verified by :func:`check_jandl`,
        never implied.
    name : str
        Display name.
    category_ref : str
        File reference of the category, kept for serialization.
    """

    __slots__ = ("cat", "A", "m", "eta", "delta", "eps", "jandl",
                 "name", "category_ref")

    def __init__(self, cat, A: SumObject, m, eta, delta, eps,
                 jandl=None, name: str = "", category_ref: str = ""):
        word = (A,)
        pairs = [(m, (A, A), word), (eta, (), word),
                 (delta, word, (A, A)), (eps, word, ())]
        if jandl is not None:
            pairs.append((jandl, word, word))
        for f, dom, cod in pairs:
            if f.cat is not cat or f.domain != dom or f.codomain != cod:
                raise ShapeMismatch("structure morphism does not match the object")
        self.cat = cat
        self.A = A
        self.m = m
        self.eta = eta
        self.delta = delta
        self.eps = eps
        self.jandl = jandl
        self.name = name
        self.category_ref = category_ref

    # -- basic data ------------------------------------------------------------

    @property
    def dim_q(self) -> float:
        """Quantum dimension of the underlying object."""
        return self.A.dim_q

    @property
    def haploid(self) -> bool:
        """True when the unit label appears exactly once in A."""
        return self.A.multiplicity(0) == 1

    def specialness(self) -> tuple[complex, complex]:
        """The scalars (beta_A, beta_1) of m o delta and eps o eta."""
        beta_a = blocks.trace(blocks.compose(self.m, self.delta)) / self.dim_q
        beta_1 = blocks.compose(self.eps, self.eta).scalar()
        return complex(beta_a), complex(beta_1)

    def verify(self, tolerance: float | None = None) -> ReportDocument:
        return check_algebra(self, tolerance=tolerance)

    def __repr__(self):
        return f"FrobeniusAlgebra({self.name or self.A!r})"

    # -- coefficient form --------------------------------------------------------

    @classmethod
    def from_coefficients(cls, cat, A: SumObject, m_entries, eta_entries,
                          delta_entries, eps_entries, jandl_entries=None,
                          name: str = "", category_ref: str = "") -> "FrobeniusAlgebra":
        """Build the structure morphisms from sparse coefficient lists.

        Entry formats match the algebra file sections: ``m`` rows are
        ``(w, u, v, mu, value)`` with ``w, u, v`` copy indices of ``A`` and
        ``mu`` the fusion vertex of ``label(u) x label(v) -> label(w)``;
        ``delta`` rows are ``(u, v, mu, w, value)``; ``eta`` and ``eps`` rows
        are ``(w, value)`` on unit-label copies; ``jandl`` rows are
        ``(w_out, w_in, value)`` between equal-label copies.
        """
        k = len(A.labels)

        def copy(idx, what):
            idx = int(idx)
            if not 0 <= idx < k:
                raise MalformedTable(f"{what} copy index {idx} out of range")
            return idx

        m_blocks: dict = {}
        for w, u, v, mu, val in m_entries:
            w, u, v = copy(w, "m"), copy(u, "m"), copy(v, "m")
            lw, lu, lv = A.labels[w], A.labels[u], A.labels[v]
            nmu = cat.nijk(lu, lv, lw)
            if not 0 <= int(mu) < nmu:
                raise MalformedTable(
                    f"m entry ({w},{u},{v},{mu}) is not an admissible vertex")
            mat = m_blocks.setdefault(((w,), (u, v)), {}).setdefault(
                lw, np.zeros((1, nmu), dtype=complex))
            if mat[0, int(mu)] != 0:
                raise MalformedTable(f"duplicate m entry ({w},{u},{v},{mu})")
            mat[0, int(mu)] = val
        delta_blocks: dict = {}
        for u, v, mu, w, val in delta_entries:
            w, u, v = copy(w, "delta"), copy(u, "delta"), copy(v, "delta")
            lw, lu, lv = A.labels[w], A.labels[u], A.labels[v]
            nmu = cat.nijk(lu, lv, lw)
            if not 0 <= int(mu) < nmu:
                raise MalformedTable(
                    f"delta entry ({u},{v},{mu},{w}) is not an admissible vertex")
            mat = delta_blocks.setdefault(((u, v), (w,)), {}).setdefault(
                lw, np.zeros((nmu, 1), dtype=complex))
            if mat[int(mu), 0] != 0:
                raise MalformedTable(f"duplicate delta entry ({u},{v},{mu},{w})")
            mat[int(mu), 0] = val

        def unit_leg(entries, what):
            out = {}
            for w, val in entries:
                w = copy(w, what)
                if A.labels[w] != 0:
                    raise MalformedTable(f"{what} entry on non-unit copy {w}")
                if w in out:
                    raise MalformedTable(f"duplicate {what} entry {w}")
                out[w] = val
            return out

        eta_map = unit_leg(eta_entries, "eta")
        eps_map = unit_leg(eps_entries, "eps")

        word = (A,)
        m = BlockMorphism(cat, (A, A), word,
                          {key: Morphism(cat, (A.labels[key[1][0]], A.labels[key[1][1]]),
                                         (A.labels[key[0][0]],), mats)
                           for key, mats in m_blocks.items()})
        delta = BlockMorphism(cat, word, (A, A),
                              {key: Morphism(cat, (A.labels[key[1][0]],),
                                             (A.labels[key[0][0]], A.labels[key[0][1]]),
                                             mats)
                               for key, mats in delta_blocks.items()})
        eta = BlockMorphism(cat, (), word,
                            {((w,), ()): Morphism(cat, (), (0,), {0: np.array([[v]])})
                             for w, v in eta_map.items()})
        eps = BlockMorphism(cat, word, (),
                            {((), (w,)): Morphism(cat, (0,), (), {0: np.array([[v]])})
                             for w, v in eps_map.items()})
        jandl = None
        if jandl_entries is not None:
            jblocks: dict = {}
            for wout, win, val in jandl_entries:
                wout, win = copy(wout, "jandl"), copy(win, "jandl")
                lo, li = A.labels[wout], A.labels[win]
                if lo != li:
                    raise MalformedTable(
                        f"jandl entry ({wout},{win}) mixes labels {lo} and {li}")
                if ((wout,), (win,)) in jblocks:
                    raise MalformedTable(f"duplicate jandl entry ({wout},{win})")
                jblocks[(wout,), (win,)] = Morphism(
                    cat, (li,), (lo,), {lo: np.array([[val]])})
            jandl = BlockMorphism(cat, word, word, jblocks)
        return cls(cat, A, m, eta, delta, eps, jandl,
                   name=name, category_ref=category_ref)

    def _rows(self, f: BlockMorphism, kind: str):
        rows = []
        for (ck, dk), b in f.blocks.items():
            if kind == "m":
                w, (u, v) = ck[0], dk
                c = self.A.labels[w]
                for mu, val in enumerate(b.block(c)[0]):
                    if val != 0:
                        rows.append((w, u, v, mu, complex(val)))
            elif kind == "delta":
                (u, v), w = ck, dk[0]
                c = self.A.labels[w]
                for mu, val in enumerate(b.block(c)[:, 0]):
                    if val != 0:
                        rows.append((u, v, mu, w, complex(val)))
            elif kind == "eta":
                rows.append((ck[0], complex(b.block(0)[0, 0])))
            elif kind == "eps":
                rows.append((dk[0], complex(b.block(0)[0, 0])))
            else:
                c = self.A.labels[ck[0]]
                rows.append((ck[0], dk[0], complex(b.block(c)[0, 0])))
        return sorted(rows, key=lambda r: r[:-1])

    def m_coefficients(self):
        """Sparse rows (w, u, v, mu, value) of the product, sorted."""
        return self._rows(self.m, "m")

    def delta_coefficients(self):
        return self._rows(self.delta, "delta")

    def eta_coefficients(self):
        return self._rows(self.eta, "eta")

    def eps_coefficients(self):
        return self._rows(self.eps, "eps")

    def jandl_coefficients(self):
        if self.jandl is None:
            return []
        return self._rows(self.jandl, "jandl")


# -- axiom checks -----------------------------------------------------------------


def _dualizers(alg):
    """The two canonical morphisms A -> A^dual from counited product."""
    cat, A = alg.cat, alg.A
    em = blocks.compose(alg.eps, alg.m)
    ida = blocks.identity(cat, (A,))
    idd = blocks.identity(cat, (A.dual(),))
    phi1 = blocks.compose(blocks.tensor(em, idd),
                          blocks.tensor(ida, blocks.cup(cat, A)))
    phi2 = blocks.compose(blocks.tensor(idd, em),
                          blocks.tensor(blocks.cup_right(cat, A), ida))
    return phi1, phi2


def check_algebra(alg: FrobeniusAlgebra, tolerance: float | None = None) -> ReportDocument:
    """Verify the Frobenius axioms, one residual per axiom.

    The algebra is accepted iff every residual is within tolerance and both
    specialness scalars ``beta_A = m o delta / id`` and ``beta_1 = eps o eta``
    are nonzero.
    """
    cat, A = alg.cat, alg.A
    tol = cat.tolerance if tolerance is None else float(tolerance)
    word = (A,)
    ida = blocks.identity(cat, word)
    m, eta, delta, eps = alg.m, alg.eta, alg.delta, alg.eps

    checks = []

    def add(name, residual, detail=""):
        checks.append(CheckResult(name, residual, tol, residual <= tol, detail))

    add("associativity",
        blocks.compose(m, blocks.tensor(m, ida)).distance(
            blocks.compose(m, blocks.tensor(ida, m))))
    add("unit", max(
        blocks.compose(m, blocks.tensor(eta, ida)).distance(ida),
        blocks.compose(m, blocks.tensor(ida, eta)).distance(ida)))
    add("coassociativity",
        blocks.compose(blocks.tensor(delta, ida), delta).distance(
            blocks.compose(blocks.tensor(ida, delta), delta)))
    add("counit", max(
        blocks.compose(blocks.tensor(eps, ida), delta).distance(ida),
        blocks.compose(blocks.tensor(ida, eps), delta).distance(ida)))
    dm = blocks.compose(delta, m)
    add("frobenius", max(
        blocks.compose(blocks.tensor(ida, m), blocks.tensor(delta, ida)).distance(dm),
        blocks.compose(blocks.tensor(m, ida), blocks.tensor(ida, delta)).distance(dm)))

    beta_a, beta_1 = alg.specialness()
    add("specialness", blocks.compose(m, delta).distance(beta_a * ida),
        detail=f"beta_A = {beta_a}")
    scalars_ok = min(abs(beta_a), abs(beta_1)) > tol
    checks.append(CheckResult("special_scalars", 0.0 if scalars_ok else 1.0, tol,
                              scalars_ok,
                              f"beta_A = {beta_a}, beta_1 = {beta_1}"))

    phi1, phi2 = _dualizers(alg)
    add("symmetry", phi1.distance(phi2))

    add("dim_match", abs(blocks.trace(ida) - alg.dim_q))

    passed = all(c.passed for c in checks)
    return ReportDocument("algebra_check", alg.name or "algebra", passed, tuple(checks),
                          data={"beta_A": [beta_a.real, beta_a.imag],
                                "beta_1": [beta_1.real, beta_1.imag],
                                "dim": alg.dim_q})


def normalize_specialness(alg: FrobeniusAlgebra,
                          tolerance: float | None = None) -> FrobeniusAlgebra:
    """Rescale delta and eps so that m o delta = id exactly.

    After normalization ``beta_A = 1``; for symmetric special algebras the
    counit scalar then equals ``dim(A)`` automatically.  Raises
    :class:`NotSpecial` when ``m o delta`` is not a nonzero multiple of the
    identity or the counit scalar vanishes.
    """
    cat = alg.cat
    tol = cat.tolerance if tolerance is None else float(tolerance)
    beta_a, beta_1 = alg.specialness()
    ida = blocks.identity(cat, (alg.A,))
    if abs(beta_a) <= tol or abs(beta_1) <= tol:
        raise NotSpecial(f"specialness scalars vanish: "
                         f"beta_A = {beta_a}, beta_1 = {beta_1}")
    if blocks.compose(alg.m, alg.delta).distance(beta_a * ida) > max(tol, tol * abs(beta_a)):
        raise NotSpecial("m o delta is not a multiple of the identity")
    return FrobeniusAlgebra(cat, alg.A, alg.m, alg.eta,
                            alg.delta * (1.0 / beta_a), alg.eps * beta_a,
                            jandl=alg.jandl, name=alg.name,
                            category_ref=alg.category_ref)


# -- constructors ------------------------------------------------------------------


def cardy_algebra(cat, category_ref: str = "") -> FrobeniusAlgebra:
    """The tensor unit with its trivial Frobenius structure."""
    A = SumObject(cat, (0,), name="1")
    one = [(0, 1.0)]
    return FrobeniusAlgebra.from_coefficients(
        cat, A, m_entries=[(0, 0, 0, 0, 1.0)], eta_entries=one,
        delta_entries=[(0, 0, 0, 0, 1.0)], eps_entries=one,
        name=f"{cat.name} cardy" if cat.name else "cardy",
        category_ref=category_ref)


def simple_current_candidate(cat, H, cocycle=None, name: str = "",
                             category_ref: str = "") -> FrobeniusAlgebra:
    """Group algebra of invertible labels, twisted by a normalized 2-cochain.

    Parameters
    ----------
    cat : SkeletalCategory
    H : iterable of int
        Invertible labels closed under fusion and duals; must contain 0.
    cocycle : dict[(int, int), complex] or None
        Optional phases ``omega(g, h)`` on pairs of labels; missing keys
        default to 1.  Must be normalized, ``omega(0, h) = omega(h, 0) = 1``.

    The product is ``m(u, v) = omega(u, v)`` on the unique fusion channel,
    the coproduct is scaled so the candidate is special with ``beta_A = 1``
    and ``beta_1 = |H|``.  The result is a candidate only: run
    :func:`check_algebra` to accept or reject it.
    """
    labels = sorted(int(h) for h in H)
    if not labels or labels[0] != 0:
        raise MalformedTable("H must contain the unit label 0")
    for h in labels:
        if abs(cat.qdim[h] - 1.0) > cat.tolerance:
            raise NotInvertible(f"label {h} has quantum dimension {cat.qdim[h]}")
        if int(cat.dual[h]) not in labels:
            raise MalformedTable(f"H is not closed under duals: missing {cat.dual[h]}")
    prod = {}
    for g in labels:
        for h in labels:
            k = int(np.argmax(cat.ring.N[g, h]))
            if int(cat.ring.N[g, h].sum()) != 1:
                raise NotInvertible(f"label pair ({g}, {h}) does not fuse uniquely")
            if k not in labels:
                raise MalformedTable(f"H is not closed under fusion: {g} x {h} = {k}")
            prod[g, h] = k
    omega = dict(cocycle or {})

    def w(g, h):
        return complex(omega.get((g, h), 1.0))

    for h in labels:
        if w(0, h) != 1.0 or w(h, 0) != 1.0:
            raise MalformedTable("cocycle must be normalized on unit legs")

    idx = {h: i for i, h in enumerate(labels)}
    order = len(labels)
    A = SumObject(cat, labels, name=name or "+".join(str(h) for h in labels))
    m_entries = [(idx[prod[g, h]], idx[g], idx[h], 0, w(g, h))
                 for g in labels for h in labels]
    delta_entries = [(idx[g], idx[h], 0, idx[prod[g, h]], 1.0 / (order * w(g, h)))
                     for g in labels for h in labels]
    return FrobeniusAlgebra.from_coefficients(
        cat, A, m_entries=m_entries, eta_entries=[(0, 1.0)],
        delta_entries=delta_entries, eps_entries=[(0, float(order))],
        name=name or f"{cat.name} " + "+".join(str(h) for h in labels),
        category_ref=category_ref)


# -- reversion (Jandl) ---------------------------------------------------------------


def check_jandl(alg: FrobeniusAlgebra, sigma: BlockMorphism | None = None,
                tolerance: float | None = None) -> ReportDocument:
    """Verify a reversion: unit-preserving map to the opposite algebra squaring to the twist."""
    cat, A = alg.cat, alg.A
    if sigma is None:
        sigma = alg.jandl
    if sigma is None:
        raise ShapeMismatch("no reversion supplied and the algebra stores none")
    if sigma.domain != (A,) or sigma.codomain != (A,):
        raise ShapeMismatch("reversion must be an endomorphism of A")
    tol = cat.tolerance if tolerance is None else float(tolerance)
    checks = []

    def add(name, residual):
        checks.append(CheckResult(name, residual, tol, residual <= tol, ""))

    add("jandl_unit", blocks.compose(sigma, alg.eta).distance(alg.eta))
    add("jandl_algebra_map",
        blocks.compose(sigma, alg.m).distance(
            blocks.compose(alg.m, blocks.compose(
                blocks.braid(cat, (A, A), 0), blocks.tensor(sigma, sigma)))))
    add("jandl_square_twist",
        blocks.compose(sigma, sigma).distance(blocks.twist(cat, (A,))))
    passed = all(c.passed for c in checks)
    return ReportDocument("jandl_check", alg.name or "algebra", passed, tuple(checks))


# -- triangulation networks -----------------------------------------------------------


@dataclass(frozen=True)
class NetworkSpec:
    """A planar composition list over the algebra generators.

    ``ops`` is a sequence of ``(kind, position)`` pairs applied bottom to
    top to a register of parallel A-strands, starting from ``open_strands``
    of them: ``("edge", p)`` inserts ``delta o eta`` at position ``p``,
    ``("vertex2", p)`` contracts two adjacent strands with ``eps o m``, and
    ``("vertex3", p)`` contracts three with ``eps o m o (m x id)``.
    """

    ops: tuple = ()
    open_strands: int = 0
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple((str(k), int(p)) for k, p in self.ops))


def network_morphism(alg: FrobeniusAlgebra, net: NetworkSpec) -> BlockMorphism:
    """The morphism of a composition list, from A^open_strands to the final word."""
    cat, A = alg.cat, alg.A
    edge = blocks.compose(alg.delta, alg.eta)
    vertex2 = blocks.compose(alg.eps, alg.m)
    vertex3 = blocks.compose(vertex2, blocks.tensor(alg.m, blocks.identity(cat, (A,))))
    arity = {"edge": (0, 2, edge), "vertex2": (2, 0, vertex2),
             "vertex3": (3, 0, vertex3)}
    word = (A,) * int(net.open_strands)
    f = blocks.identity(cat, word)
    for kind, p in net.ops:
        if kind not in arity:
            raise ShapeMismatch(f"unknown network op {kind!r}")
        eats, makes, g = arity[kind]
        n = len(word)
        if p < 0 or p + eats > n:
            raise ShapeMismatch(f"op {kind}@{p} does not fit a register of {n} strands")
        step = g
        if p:
            step = blocks.tensor(blocks.identity(cat, word[:p]), step)
        if p + eats < n:
            step = blocks.tensor(step, blocks.identity(cat, word[p + eats:]))
        f = blocks.compose(step, f)
        word = word[:p] + (A,) * makes + word[p + eats:]
    return f


def evaluate_algebra_network(alg: FrobeniusAlgebra, net: NetworkSpec) -> complex:
    """Scalar value of a closed network; raises ShapeMismatch if it stays open."""
    if net.open_strands:
        raise ShapeMismatch("closed networks start from zero open strands")
    return network_morphism(alg, net).scalar()


def _close(env_ops, patch_ops, name):
    return NetworkSpec(tuple(env_ops) + tuple(patch_ops), 0, name)


def pachner_move_pairs() -> list[tuple[str, NetworkSpec, NetworkSpec]]:
    """Closed network pairs related by one Pachner 2-2 or 1-3 move.

    Each pair glues the two sides of the move into a common planar
    environment; equal values for every pair is the triangulation
    invariance of the network evaluation.
    """
    e, v2, v3 = "edge", "vertex2", "vertex3"
    # two triangles across the shared diagonal, both flips, on 4 strands
    flip_a = ((e, 2), (v3, 0), (v3, 0))
    flip_b = ((e, 3), (v3, 1), (v3, 0))
    envs4 = [
        ("nested", ((e, 0), (e, 1))),
        ("stacked", ((e, 0), (e, 0))),
        ("bridged", ((e, 0), (e, 1), (e, 2), (v2, 1))),
        ("bubbled", ((e, 0), (e, 1), (e, 2), (v2, 2))),
    ]
    # one triangle against the star of an interior point, on 3 strands
    star_a = ((v3, 0),)
    star_b = ((e, 2), (e, 1), (v3, 2), (e, 2), (v3, 0), (v3, 0))
    envs3 = [
        ("capped", ((e, 0), (e, 1), (e, 2), (v3, 0))),
        ("looped", ((e, 0), (e, 1), (e, 2), (e, 3), (v3, 0), (v2, 0))),
    ]
    pairs = [(f"flip22_{name}", _close(env, flip_a, f"flip22_{name}_a"),
              _close(env, flip_b, f"flip22_{name}_b")) for name, env in envs4]
    pairs += [(f"star13_{name}", _close(env, star_a, f"star13_{name}_a"),
               _close(env, star_b, f"star13_{name}_b")) for name, env in envs3]
    return pairs


def closed_network_library() -> list[NetworkSpec]:
    """Small closed nets with known values for normalized algebras."""
    e, v2, v3 = "edge", "vertex2", "vertex3"
    return [
        NetworkSpec(((e, 0), (v2, 0)), 0, "theta"),
        NetworkSpec(((e, 0), (e, 1), (e, 2), (v3, 0), (v3, 0)), 0, "sphere2"),
        NetworkSpec(((e, 0), (e, 1), (v2, 1), (v2, 0)), 0, "dumbbell"),
    ]
