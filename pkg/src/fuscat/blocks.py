"""Direct sums of simple objects and block morphisms between their words.

A :class:`SumObject` is a formal direct sum ``S = U_{l_0} + ... + U_{l_{k-1}}``
given by its list of labels (copies may repeat).  A word of SumObjects plays
the role of a tensor product ``S_1 x ... x S_n``; picking one copy per factor
selects a plain tensor word of labels, so a morphism between two such words
decomposes into a dictionary of plain :class:`~fuscat.morphism.Morphism`
blocks indexed by (codomain copy choice, domain copy choice).

All functions mirror the plain diagram engine: :func:`compose`,
:func:`tensor`, :func:`braid`, :func:`twist`, cups and caps, :func:`trace`.
:func:`flatten` assembles, per total charge, one matrix over the direct-sum
basis (copy choices in lexicographic order, fusion trees within each choice);
:func:`unflatten` is its inverse.  This ordering is the contract used by
algebra coefficient files.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import morphism as plain
from .errors import IndexOutOfRange, ShapeMismatch
from .trees import _cache, count_trees

__all__ = [
    "SumObject",
    "BlockMorphism",
    "simple_word",
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
    "trace",
    "dim_hom",
    "word_charges",
    "sector_total",
    "flatten",
    "unflatten",
    "random_block_morphism",
]


class SumObject:
    """A direct sum of simple objects, one label per copy.

    Parameters
    ----------
    cat : SkeletalCategory
    labels : sequence of int
        Label of each copy, in a fixed order; repetitions allowed.
    name : str
        Optional display name.
    """

    __slots__ = ("cat", "labels", "name")

    def __init__(self, cat, labels, name: str = ""):
        labels = tuple(int(l) for l in labels)
        if not labels:
            raise ShapeMismatch("a SumObject needs at least one copy")
        for l in labels:
            if not 0 <= l < cat.n:
                raise IndexOutOfRange(f"label {l} out of range for {cat.n} simples")
        self.cat = cat
        self.labels = labels
        self.name = name

    @classmethod
    def simple(cls, cat, label: int) -> "SumObject":
        return cls(cat, (label,))

    def dual(self) -> "SumObject":
        return SumObject(self.cat, tuple(int(self.cat.dual[l]) for l in self.labels))

    @property
    def dim_q(self) -> float:
        return float(sum(self.cat.qdim[l] for l in self.labels))

    def multiplicity(self, label: int) -> int:
        return self.labels.count(label)

    def __eq__(self, other):
        return (isinstance(other, SumObject) and other.cat is self.cat
                and other.labels == self.labels)

    def __hash__(self):
        return hash(("SumObject", id(self.cat), self.labels))

    def __repr__(self):
        body = self.name or "+".join(str(l) for l in self.labels)
        return f"SumObject({body})"


def simple_word(cat, word) -> tuple:
    """Wrap a plain label word as a tuple of singleton SumObjects."""
    return tuple(SumObject.simple(cat, l) for l in word)


def copy_keys(word):
    """All copy choices of a word of SumObjects, in lexicographic order."""
    return itertools.product(*(range(len(s.labels)) for s in word))


def key_labels(word, key) -> tuple:
    """The plain label word selected by one copy choice."""
    return tuple(word[f].labels[k] for f, k in enumerate(key))


def _word_key(word):
    return tuple(s.labels for s in word)


def _sectors(cat, word):
    """key -> per-charge tree count, plus offsets and totals, cached."""
    ck = ("bsector", _word_key(word))
    cache = _cache(cat)
    out = cache.get(ck)
    if out is None:
        offsets = {}
        totals = {}
        for key in copy_keys(word):
            labs = key_labels(word, key)
            for c in range(cat.n):
                d = count_trees(cat, labs, c)
                if d:
                    offsets[c, key] = totals.get(c, 0)
                    totals[c] = totals.get(c, 0) + d
        out = (offsets, totals)
        cache[ck] = out
    return out


def word_charges(cat, word) -> list[int]:
    """Total charges with a nonzero sector on the given word."""
    return sorted(_sectors(cat, word)[1])


def sector_total(cat, word, c: int) -> int:
    """Dimension of the charge-c multiplicity space of the word."""
    return _sectors(cat, word)[1].get(c, 0)


class BlockMorphism:
    """A morphism between words of SumObjects, stored blockwise.

    Parameters
    ----------
    cat : SkeletalCategory
    domain, codomain : tuple of SumObject
    blocks : dict[(cod_key, dom_key), Morphism]
        Plain morphism between the label words selected by the copy
        choices; zero blocks may be omitted.
    """

    __slots__ = ("cat", "domain", "codomain", "blocks")

    def __init__(self, cat, domain, codomain, blocks):
        domain = tuple(domain)
        codomain = tuple(codomain)
        for s in domain + codomain:
            if not isinstance(s, SumObject) or s.cat is not cat:
                raise ShapeMismatch("factors must be SumObjects over the same category")
        kept = {}
        for (ck, dk), f in blocks.items():
            ck, dk = tuple(ck), tuple(dk)
            if len(ck) != len(codomain) or len(dk) != len(domain):
                raise ShapeMismatch("copy key length does not match the word")
            if f.domain != key_labels(domain, dk) or f.codomain != key_labels(codomain, ck):
                raise ShapeMismatch("block words do not match the copy choice")
            if f.blocks:
                kept[ck, dk] = f
        self.cat = cat
        self.domain = domain
        self.codomain = codomain
        self.blocks = kept

    def block(self, ck, dk):
        """The plain morphism at one copy-choice pair (zero if absent)."""
        f = self.blocks.get((tuple(ck), tuple(dk)))
        if f is None:
            return plain.zero(self.cat, key_labels(self.domain, dk),
                              key_labels(self.codomain, ck))
        return f

    def __add__(self, other):
        self._match(other)
        out = dict(self.blocks)
        for k, f in other.blocks.items():
            out[k] = out[k] + f if k in out else f
        return BlockMorphism(self.cat, self.domain, self.codomain, out)

    def __sub__(self, other):
        return self + (-1.0) * other

    def __neg__(self):
        return (-1.0) * self

    def __mul__(self, a):
        return BlockMorphism(self.cat, self.domain, self.codomain,
                             {k: f * a for k, f in self.blocks.items()})

    __rmul__ = __mul__

    def __matmul__(self, other):
        return compose(self, other)

    def adjoint(self) -> "BlockMorphism":
        return BlockMorphism(self.cat, self.codomain, self.domain,
                             {(dk, ck): f.adjoint()
                              for (ck, dk), f in self.blocks.items()})

    def norm(self) -> float:
        return max((f.norm() for f in self.blocks.values()), default=0.0)

    def distance(self, other) -> float:
        return (self - other).norm()

    def scalar(self) -> complex:
        if self.domain or self.codomain:
            raise ShapeMismatch("scalar() needs empty domain and codomain")
        return self.block((), ()).scalar()

    def _match(self, other):
        if (other.cat is not self.cat or other.domain != self.domain
                or other.codomain != self.codomain):
            raise ShapeMismatch("block morphisms live in different hom spaces")

    def __repr__(self):
        return (f"BlockMorphism({self.domain} -> {self.codomain}, "
                f"{len(self.blocks)} blocks)")


def identity(cat, word) -> BlockMorphism:
    word = tuple(word)
    blocks = {(k, k): plain.identity(cat, key_labels(word, k))
              for k in copy_keys(word)}
    return BlockMorphism(cat, word, word, blocks)


def zero(cat, domain, codomain) -> BlockMorphism:
    return BlockMorphism(cat, domain, codomain, {})


def compose(g: BlockMorphism, f: BlockMorphism) -> BlockMorphism:
    """g after f, summing over middle copy choices."""
    if g.cat is not f.cat:
        raise ShapeMismatch("cannot compose block morphisms over different categories")
    if g.domain != f.codomain:
        raise ShapeMismatch("domain of g does not match codomain of f")
    by_mid: dict[tuple, list] = {}
    for (mk, dk), fb in f.blocks.items():
        by_mid.setdefault(mk, []).append((dk, fb))
    out: dict[tuple, plain.Morphism] = {}
    for (ck, mk), gb in g.blocks.items():
        for dk, fb in by_mid.get(mk, ()):
            h = plain.compose(gb, fb)
            key = (ck, dk)
            out[key] = out[key] + h if key in out else h
    return BlockMorphism(f.cat, f.domain, g.codomain, out)


def tensor(f: BlockMorphism, g: BlockMorphism) -> BlockMorphism:
    if f.cat is not g.cat:
        raise ShapeMismatch("cannot tensor block morphisms over different categories")
    out = {}
    for (ckf, dkf), fb in f.blocks.items():
        for (ckg, dkg), gb in g.blocks.items():
            out[ckf + ckg, dkf + dkg] = plain.tensor(fb, gb)
    return BlockMorphism(f.cat, f.domain + g.domain, f.codomain + g.codomain, out)


def braid(cat, word, pos: int, inverse: bool = False) -> BlockMorphism:
    """Braid adjacent factors of a word of SumObjects, copywise."""
    word = tuple(word)
    if not 0 <= pos < len(word) - 1:
        raise IndexOutOfRange(f"braid position {pos} in a word of {len(word)} factors")
    cod = word[:pos] + (word[pos + 1], word[pos]) + word[pos + 2:]
    blocks = {}
    for k in copy_keys(word):
        ck = k[:pos] + (k[pos + 1], k[pos]) + k[pos + 2:]
        blocks[ck, k] = plain.braid(cat, key_labels(word, k), pos, inverse=inverse)
    return BlockMorphism(cat, word, cod, blocks)


def twist(cat, word) -> BlockMorphism:
    word = tuple(word)
    blocks = {(k, k): plain.twist(cat, key_labels(word, k))
              for k in copy_keys(word)}
    return BlockMorphism(cat, word, word, blocks)


def cup(cat, s: SumObject) -> BlockMorphism:
    """() -> (S, S^dual), the sum of the plain cups of the copies."""
    blocks = {((k, k), ()): plain.cup(cat, l) for k, l in enumerate(s.labels)}
    return BlockMorphism(cat, (), (s, s.dual()), blocks)


def cap(cat, s: SumObject) -> BlockMorphism:
    blocks = {((), (k, k)): plain.cap(cat, l) for k, l in enumerate(s.labels)}
    return BlockMorphism(cat, (s, s.dual()), (), blocks)


def cup_right(cat, s: SumObject) -> BlockMorphism:
    blocks = {((k, k), ()): plain.cup_right(cat, l) for k, l in enumerate(s.labels)}
    return BlockMorphism(cat, (), (s.dual(), s), blocks)


def cap_right(cat, s: SumObject) -> BlockMorphism:
    blocks = {((), (k, k)): plain.cap_right(cat, l) for k, l in enumerate(s.labels)}
    return BlockMorphism(cat, (s.dual(), s), (), blocks)


def trace(f: BlockMorphism) -> complex:
    """Quantum trace of a block endomorphism."""
    if f.domain != f.codomain:
        raise ShapeMismatch("trace needs an endomorphism")
    return sum((plain.trace(b) for (ck, dk), b in f.blocks.items() if ck == dk),
               start=0.0 + 0j)


def dim_hom(cat, domain, codomain) -> int:
    """Dimension of the plain hom space between two words of SumObjects."""
    _, dt = _sectors(cat, tuple(domain))
    _, ct = _sectors(cat, tuple(codomain))
    return sum(d * ct.get(c, 0) for c, d in dt.items())


def flatten(f: BlockMorphism) -> dict[int, np.ndarray]:
    """Per-charge matrices of f over the direct-sum basis."""
    doff, dtot = _sectors(f.cat, f.domain)
    coff, ctot = _sectors(f.cat, f.codomain)
    out = {}
    for (ck, dk), b in f.blocks.items():
        for c, mat in b.blocks.items():
            big = out.get(c)
            if big is None:
                big = out[c] = np.zeros((ctot[c], dtot[c]), dtype=complex)
            r0 = coff[c, ck]
            s0 = doff[c, dk]
            big[r0:r0 + mat.shape[0], s0:s0 + mat.shape[1]] = mat
    return out


def unflatten(cat, domain, codomain, mats: dict[int, np.ndarray]) -> BlockMorphism:
    """Inverse of :func:`flatten`."""
    domain, codomain = tuple(domain), tuple(codomain)
    doff, dtot = _sectors(cat, domain)
    coff, ctot = _sectors(cat, codomain)
    blocks = {}
    for c, big in mats.items():
        if big.shape != (ctot.get(c, 0), dtot.get(c, 0)):
            raise ShapeMismatch(f"charge {c} matrix has shape {big.shape}, "
                                f"expected {(ctot.get(c, 0), dtot.get(c, 0))}")
        for ck in copy_keys(codomain):
            rc = count_trees(cat, key_labels(codomain, ck), c)
            if not rc:
                continue
            for dk in copy_keys(domain):
                sc = count_trees(cat, key_labels(domain, dk), c)
                if not sc:
                    continue
                r0 = coff[c, ck]
                s0 = doff[c, dk]
                sub = big[r0:r0 + rc, s0:s0 + sc]
                if not np.any(sub):
                    continue
                key = (ck, dk)
                b = blocks.get(key)
                if b is None:
                    b = blocks[key] = {}
                b[c] = sub.copy()
    return BlockMorphism(cat, domain, codomain,
                         {key: plain.Morphism(cat, key_labels(domain, key[1]),
                                              key_labels(codomain, key[0]), mats_)
                          for key, mats_ in blocks.items()})


def random_block_morphism(cat, domain, codomain, rng) -> BlockMorphism:
    """Gaussian random block morphism, used for splitting and tests."""
    domain, codomain = tuple(domain), tuple(codomain)
    _, dtot = _sectors(cat, domain)
    _, ctot = _sectors(cat, codomain)
    mats = {}
    for c, d in dtot.items():
        r = ctot.get(c, 0)
        if r:
            mats[c] = (rng.standard_normal((r, d))
                       + 1j * rng.standard_normal((r, d)))
    return unflatten(cat, domain, codomain, mats)
