"""Text file formats for categories and algebras.

Both formats are line-oriented, diffable, and written in a canonical form so
that ``save(load(text)) == text``.  Numbers are decimal with full
shortest-round-trip precision; complex values are explicit ``re im`` pairs.

Category files (``.cat``)::

    [meta]           name, optional note, tolerance
    [labels]         index name            (0 is the unit)
    [fusion]         i j k N               (all nonzero entries)
    [duals]          i dual(i)             (checked against the fusion table)
    [thetas]         i re im
    [qdims]          i d
    [F]              i j k l  p a b  q g d  re im
    [R]              i j k  a b  re im

Entries of F and R with a unit-label leg are the identity and are neither
written nor accepted.  Tree-vertex indices (a, b, g, d) enumerate fusion
multiplicities and are all 0 for multiplicity-free data.

Algebra files (``.alg``)::

    [meta]           name, category (file reference), optional note
    [object]         copy label            (underlying object, one line per copy)
    [m]              w u v mu re im        (coefficient of copy w in m(u, v; mu))
    [eta]            w re im               (unit;   only label-0 copies)
    [delta]          u v mu w re im        (coproduct coefficients)
    [eps]            w re im               (counit; only label-0 copies)
    [jandl]          wout win re im        (optional reversion sigma: A -> A)

The documented fusion-tree basis of ``Hom(A x A, A)`` indexes rows by the
codomain copy ``w`` and columns by ``(u, v, mu)`` with ``mu`` the fusion
vertex of ``label(u) x label(v) -> label(w)``.
"""

from __future__ import annotations

import pathlib

import numpy as np

from .category import SkeletalCategory
from .errors import MalformedTable, ParseError
from .fusion_ring import FusionRing

__all__ = [
    "load_category",
    "parse_category",
    "save_category",
    "write_category",
    "load_algebra",
    "parse_algebra",
    "save_algebra",
    "write_algebra",
    "bundled_path",
    "bundled_names",
]

_CAT_SECTIONS = ("meta", "labels", "fusion", "duals", "thetas", "qdims", "F", "R")
_ALG_SECTIONS = ("meta", "object", "m", "eta", "delta", "eps", "jandl")


def _split_sections(text: str, allowed) -> dict[str, list[str]]:
    sections: dict[str, list[str]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            if current not in allowed:
                raise ParseError(f"line {lineno}: unknown section [{current}]")
            if current in sections:
                raise ParseError(f"line {lineno}: duplicate section [{current}]")
            sections[current] = []
            continue
        if current is None:
            raise ParseError(f"line {lineno}: content before any [section]")
        sections[current].append(line)
    return sections


def _parse_meta(lines: list[str]) -> dict[str, str]:
    meta = {}
    for line in lines:
        if "=" not in line:
            raise ParseError(f"malformed meta line: {line!r}")
        key, _, val = line.partition("=")
        meta[key.strip()] = val.strip()
    return meta


def _ints(parts, count, line):
    if len(parts) < count:
        raise ParseError(f"too few fields in line: {line!r}")
    try:
        return [int(p) for p in parts[:count]]
    except ValueError:
        raise ParseError(f"expected integers in line: {line!r}") from None


def _floats(parts, line):
    try:
        return [float(p) for p in parts]
    except ValueError:
        raise ParseError(f"expected decimals in line: {line!r}") from None


def parse_category(text: str, tolerance: float | None = None) -> SkeletalCategory:
    """Parse category file text into a verified-shape :class:`SkeletalCategory`.

    ``tolerance`` overrides the file's declared tolerance when given.
    Raises :class:`ParseError` for malformed text and :class:`MalformedTable`
    for structurally inconsistent data.
    """
    sections = _split_sections(text, _CAT_SECTIONS)
    for required in ("labels", "fusion", "thetas", "qdims"):
        if required not in sections:
            raise ParseError(f"missing required section [{required}]")
    meta = _parse_meta(sections.get("meta", []))
    name = meta.get("name", "")
    tol = tolerance
    if tol is None:
        try:
            tol = float(meta.get("tolerance", "1e-9"))
        except ValueError:
            raise ParseError("meta tolerance is not a decimal") from None

    labels: dict[int, str] = {}
    for line in sections["labels"]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"labels line must be 'index name': {line!r}")
        (idx,) = _ints(parts, 1, line)
        labels[idx] = parts[1]
    n = len(labels)
    if sorted(labels) != list(range(n)):
        raise ParseError("label indices must be dense 0..n-1")

    N = np.zeros((n, n, n), dtype=np.int64)
    for line in sections["fusion"]:
        parts = line.split()
        i, j, k, mult = _ints(parts, 4, line)
        if not all(0 <= x < n for x in (i, j, k)):
            raise ParseError(f"label out of range in fusion line: {line!r}")
        N[i, j, k] = mult
    ring = FusionRing(N)

    if "duals" in sections:
        declared = np.zeros(n, dtype=np.int64)
        seen = np.zeros(n, dtype=bool)
        for line in sections["duals"]:
            i, d = _ints(line.split(), 2, line)
            declared[i] = d
            seen[i] = True
        if not seen.all():
            raise ParseError("duals section must cover every label")
        if not np.array_equal(declared, ring.dual):
            raise MalformedTable("declared duals disagree with the fusion table")

    theta = np.zeros(n, dtype=complex)
    seen = np.zeros(n, dtype=bool)
    for line in sections["thetas"]:
        parts = line.split()
        (i,) = _ints(parts, 1, line)
        re, im = _floats(parts[1:3], line)
        theta[i] = re + 1j * im
        seen[i] = True
    if not seen.all():
        raise ParseError("thetas section must cover every label")

    qdim = np.zeros(n, dtype=float)
    seen = np.zeros(n, dtype=bool)
    for line in sections["qdims"]:
        parts = line.split()
        (i,) = _ints(parts, 1, line)
        (d,) = _floats(parts[1:2], line)
        qdim[i] = d
        seen[i] = True
    if not seen.all():
        raise ParseError("qdims section must cover every label")

    # A shape-only instance provides the tree-channel bases for sizing F/R.
    shape = SkeletalCategory(ring, {}, {}, theta, qdim, tolerance=tol)

    F: dict[tuple, np.ndarray] = {}
    for line in sections.get("F", []):
        parts = line.split()
        i, j, k, l, p, a, b, q, g, d = _ints(parts, 10, line)
        re, im = _floats(parts[10:12], line)
        key = (i, j, k, l)
        if key not in F:
            rows, cols = shape.f_bases(*key)
            if not rows:
                raise ParseError(f"F entry for inadmissible tuple {key}")
            F[key] = np.zeros((len(rows), len(cols)), dtype=complex)
        rows, cols = shape.f_bases(*key)
        if (p, a, b) not in rows or (q, g, d) not in cols:
            raise ParseError(f"F channel out of range in line: {line!r}")
        F[key][rows[p, a, b], cols[q, g, d]] = re + 1j * im

    R: dict[tuple, np.ndarray] = {}
    for line in sections.get("R", []):
        parts = line.split()
        i, j, k, a, b = _ints(parts, 5, line)
        re, im = _floats(parts[5:7], line)
        m = ring.N[i, j, k]
        if m == 0:
            raise ParseError(f"R entry for inadmissible tuple {(i, j, k)}")
        if not (0 <= a < m and 0 <= b < m):
            raise ParseError(f"R vertex index out of range in line: {line!r}")
        if (i, j, k) not in R:
            R[i, j, k] = np.zeros((int(m), int(m)), dtype=complex)
        R[i, j, k][a, b] = re + 1j * im

    names = [labels[i] for i in range(n)]
    cat = SkeletalCategory(ring, F, R, theta, qdim, tolerance=tol, name=name,
                           label_names=names)
    if "note" in meta:
        cat.note = meta["note"]
    return cat


def _fmt(x: float) -> str:
    """Shortest round-trip decimal, with integral values kept compact."""
    x = float(x)
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return repr(x)


def save_category(cat: SkeletalCategory) -> str:
    """Canonical text form of a category; inverse of :func:`parse_category`."""
    out = ["[meta]", f"name = {cat.name}"]
    note = getattr(cat, "note", "")
    if note:
        out.append(f"note = {note}")
    out.append(f"tolerance = {_fmt(cat.tolerance) if cat.tolerance != 1e-9 else '1e-09'}")
    out.append("")
    out.append("[labels]")
    for i, nm in enumerate(cat.label_names):
        out.append(f"{i} {nm}")
    out.append("")
    out.append("[fusion]")
    for i in range(cat.n):
        for j in range(cat.n):
            for k in range(cat.n):
                if cat.N[i, j, k]:
                    out.append(f"{i} {j} {k} {int(cat.N[i, j, k])}")
    out.append("")
    out.append("[duals]")
    for i in range(cat.n):
        out.append(f"{i} {int(cat.dual[i])}")
    out.append("")
    out.append("[thetas]")
    for i in range(cat.n):
        out.append(f"{i} {_fmt(cat.theta[i].real)} {_fmt(cat.theta[i].imag)}")
    out.append("")
    out.append("[qdims]")
    for i in range(cat.n):
        out.append(f"{i} {_fmt(cat.qdim[i])}")
    out.append("")
    out.append("[F]")
    for key in sorted(cat.F):
        rows, cols = cat.f_bases(*key)
        mat = cat.F[key]
        for (p, a, b), r in rows.items():
            for (q, g, d), c in cols.items():
                v = mat[r, c]
                out.append(f"{key[0]} {key[1]} {key[2]} {key[3]}  {p} {a} {b}  "
                           f"{q} {g} {d}  {_fmt(v.real)} {_fmt(v.imag)}")
    out.append("")
    out.append("[R]")
    for key in sorted(cat.R):
        mat = cat.R[key]
        for a in range(mat.shape[0]):
            for b in range(mat.shape[1]):
                v = mat[a, b]
                out.append(f"{key[0]} {key[1]} {key[2]}  {a} {b}  "
                           f"{_fmt(v.real)} {_fmt(v.imag)}")
    out.append("")
    return "\n".join(out)


def load_category(path, tolerance: float | None = None) -> SkeletalCategory:
    """Load a ``.cat`` file.  See :func:`parse_category`."""
    path = pathlib.Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_category(text, tolerance=tolerance)


def write_category(cat: SkeletalCategory, path) -> None:
    pathlib.Path(path).write_text(save_category(cat))


# -- algebra files -------------------------------------------------------------


def parse_algebra(text: str, cat: SkeletalCategory):
    """Parse algebra file text into a :class:`~fuscat.algebra.FrobeniusAlgebra`.

    The category must be supplied by the caller (the file's ``category``
    meta field names the category file it expects).
    """
    from .algebra import FrobeniusAlgebra
    from .blocks import SumObject

    sections = _split_sections(text, _ALG_SECTIONS)
    for required in ("object", "m", "eta", "delta", "eps"):
        if required not in sections:
            raise ParseError(f"missing required section [{required}]")
    meta = _parse_meta(sections.get("meta", []))

    copies: dict[int, int] = {}
    for line in sections["object"]:
        w, lab = _ints(line.split(), 2, line)
        copies[w] = lab
    k = len(copies)
    if sorted(copies) != list(range(k)):
        raise ParseError("object copies must be indexed densely 0..k-1")
    labs = [copies[w] for w in range(k)]
    if any(not 0 <= lab < cat.n for lab in labs):
        raise ParseError("object label out of range for the category")
    A = SumObject(cat, labs)

    m_entries = []
    for line in sections["m"]:
        parts = line.split()
        w, u, v, mu = _ints(parts, 4, line)
        re, im = _floats(parts[4:6], line)
        m_entries.append((w, u, v, mu, re + 1j * im))
    eta_entries = []
    for line in sections["eta"]:
        parts = line.split()
        (w,) = _ints(parts, 1, line)
        re, im = _floats(parts[1:3], line)
        eta_entries.append((w, re + 1j * im))
    delta_entries = []
    for line in sections["delta"]:
        parts = line.split()
        u, v, mu, w = _ints(parts, 4, line)
        re, im = _floats(parts[4:6], line)
        delta_entries.append((u, v, mu, w, re + 1j * im))
    eps_entries = []
    for line in sections["eps"]:
        parts = line.split()
        (w,) = _ints(parts, 1, line)
        re, im = _floats(parts[1:3], line)
        eps_entries.append((w, re + 1j * im))
    jandl_entries = None
    if "jandl" in sections:
        jandl_entries = []
        for line in sections["jandl"]:
            parts = line.split()
            wout, win = _ints(parts, 2, line)
            re, im = _floats(parts[2:4], line)
            jandl_entries.append((wout, win, re + 1j * im))

    return FrobeniusAlgebra.from_coefficients(
        cat, A, m_entries, eta_entries, delta_entries, eps_entries,
        jandl_entries, name=meta.get("name", ""),
        category_ref=meta.get("category", ""))


def save_algebra(alg) -> str:
    """Canonical text form of an algebra; inverse of :func:`parse_algebra`."""
    out = ["[meta]", f"name = {alg.name}"]
    if alg.category_ref:
        out.append(f"category = {alg.category_ref}")
    out.append("")
    out.append("[object]")
    for w, lab in enumerate(alg.A.labels):
        out.append(f"{w} {lab}")
    out.append("")
    for sec, entries in (("m", alg.m_coefficients()),
                         ("eta", alg.eta_coefficients()),
                         ("delta", alg.delta_coefficients()),
                         ("eps", alg.eps_coefficients())):
        out.append(f"[{sec}]")
        for row in entries:
            idx, v = row[:-1], row[-1]
            out.append(" ".join(str(x) for x in idx)
                       + f" {_fmt(v.real)} {_fmt(v.imag)}")
        out.append("")
    if alg.jandl is not None:
        out.append("[jandl]")
        for wout, win, v in alg.jandl_coefficients():
            out.append(f"{wout} {win} {_fmt(v.real)} {_fmt(v.imag)}")
        out.append("")
    return "\n".join(out)


def load_algebra(path, cat: SkeletalCategory | None = None):
    """Load an ``.alg`` file.

    When ``cat`` is None the ``category`` meta reference is resolved relative
    to the algebra file's directory.
    """
    path = pathlib.Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    if cat is None:
        sections = _split_sections(text, _ALG_SECTIONS)
        meta = _parse_meta(sections.get("meta", []))
        ref = meta.get("category")
        if not ref:
            raise ParseError(f"{path} does not name its category file")
        cat = load_category(path.parent / ref)
    return parse_algebra(text, cat)


def write_algebra(alg, path) -> None:
    pathlib.Path(path).write_text(save_algebra(alg))


# -- bundled data ---------------------------------------------------------------


def bundled_path(name: str) -> pathlib.Path:
    """Path of a bundled data file, by bare name or file name."""
    root = pathlib.Path(__file__).parent / "data"
    for candidate in (name, f"{name}.cat", f"{name}.alg"):
        p = root / candidate
        if p.exists():
            return p
    raise ParseError(f"no bundled file named {name!r}")


def bundled_names() -> list[str]:
    root = pathlib.Path(__file__).parent / "data"
    return sorted(p.name for p in root.iterdir() if p.suffix in (".cat", ".alg"))
