"""Left-nested fusion trees over a skeletal category.

A word is a tuple of labels ``(a_0, ..., a_{n-1})``; the empty word is the
tensor unit.  A fusion tree of a word into total charge ``c`` is the
left-nested bracketing ``(...((a_0 a_1) a_2)...) -> c`` decorated with its
intermediate charges and fusion-vertex indices:

    tree = ((m_2, mu_1), (m_3, mu_2), ..., (m_n, mu_{n-1})),  m_n = c

with ``m_1 = a_0``, ``m_{k+1}`` a channel of ``m_k x a_k`` and ``mu_k``
ranging over its multiplicity.  Words of length 0 and 1 have the empty tree
``()`` (admissible iff the total is 0, respectively ``a_0``).

Trees are enumerated lexicographically in the flattened tuple
``(m_2, mu_1, m_3, mu_2, ...)``; this order is the documented basis order
shared with the file formats.
"""

from __future__ import annotations

__all__ = [
    "fusion_trees",
    "tree_index",
    "admissible_totals",
    "count_trees",
]


def _cache(cat) -> dict:
    try:
        return cat._tree_cache
    except AttributeError:
        cat._tree_cache = {}
        return cat._tree_cache


def fusion_trees(cat, word, total: int) -> list[tuple]:
    """All fusion trees of ``word`` into ``total``, lexicographically ordered."""
    word = tuple(word)
    key = ("trees", word, total)
    cache = _cache(cat)
    out = cache.get(key)
    if out is not None:
        return out

    n = len(word)
    if n == 0:
        out = [()] if total == 0 else []
    elif n == 1:
        out = [()] if word[0] == total else []
    else:
        out = []
        a0, a1 = word[0], word[1]
        rest = word[2:]
        for m2 in cat.channels(a0, a1):
            tails = fusion_trees(cat, (m2,) + rest, total)
            for mu in range(cat.nijk(a0, a1, m2)):
                for tail in tails:
                    out.append(((m2, mu),) + tail)
    cache[key] = out
    return out


def tree_index(cat, word, total: int) -> dict[tuple, int]:
    """Map tree -> position in :func:`fusion_trees`, cached."""
    word = tuple(word)
    key = ("index", word, total)
    cache = _cache(cat)
    out = cache.get(key)
    if out is None:
        out = {t: i for i, t in enumerate(fusion_trees(cat, word, total))}
        cache[key] = out
    return out


def admissible_totals(cat, word) -> list[int]:
    """Total charges with at least one fusion tree, ascending."""
    word = tuple(word)
    key = ("totals", word)
    cache = _cache(cat)
    out = cache.get(key)
    if out is None:
        out = [c for c in range(cat.n) if fusion_trees(cat, word, c)]
        cache[key] = out
    return out


def count_trees(cat, word, total: int) -> int:
    return len(fusion_trees(cat, word, total))
