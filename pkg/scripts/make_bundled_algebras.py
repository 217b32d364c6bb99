"""Generate the bundled .alg files from verified constructors.

Every file is written only after check_algebra (and check_jandl, when a
reversion is attached) passes, so the data's provenance is the verifier
itself.  Run from the repository root:

    python3 scripts/make_bundled_algebras.py
"""

from __future__ import annotations

import pathlib
import sys

import numpy as np

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from fuscat import blocks
from fuscat.algebra import (FrobeniusAlgebra, cardy_algebra, check_algebra,
                            check_jandl, evaluate_algebra_network,
                            closed_network_library, simple_current_candidate)
from fuscat.data_io import load_category, save_algebra
from fuscat.morphism import Morphism

DATA = pathlib.Path(__file__).resolve().parents[1] / "src" / "fuscat" / "data"


def diag_sigma(alg, phases):
    """Copywise diagonal reversion candidate."""
    cat, A = alg.cat, alg.A
    bl = {((w,), (w,)): Morphism(cat, (l,), (l,), {l: np.array([[p]], dtype=complex)})
          for w, (l, p) in enumerate(zip(A.labels, phases))}
    return blocks.BlockMorphism(cat, (A,), (A,), bl)


def with_jandl(alg, phases):
    return FrobeniusAlgebra(alg.cat, alg.A, alg.m, alg.eta, alg.delta, alg.eps,
                            jandl=diag_sigma(alg, phases), name=alg.name,
                            category_ref=alg.category_ref)


def emit(alg, fname):
    rep = check_algebra(alg)
    assert rep.passed, (fname, [(c.name, c.residual) for c in rep.checks if not c.passed])
    if alg.jandl is not None:
        jrep = check_jandl(alg)
        assert jrep.passed, (fname, [(c.name, c.residual) for c in jrep.checks])
    theta = evaluate_algebra_network(alg, closed_network_library()[0])
    assert abs(theta - alg.dim_q) < 1e-9, (fname, theta)
    (DATA / fname).write_text(save_algebra(alg))
    print(f"wrote {fname}: dim = {alg.dim_q:g}")


def main():
    w = np.exp(2j * np.pi / 3)
    cats = {name: load_category(DATA / f"{name}.cat")
            for name in ("trivial", "z2_semion", "z3_anyons", "fibonacci",
                         "ising", "toric_code", "su2_4")}
    for name, cat in cats.items():
        alg = cardy_algebra(cat, category_ref=f"{name}.cat")
        emit(with_jandl(alg, [1.0]), f"{name}_cardy.alg")

    def current(catname, H, name, phases):
        alg = simple_current_candidate(cats[catname], H, name=name,
                                       category_ref=f"{catname}.cat")
        return with_jandl(alg, phases)

    emit(current("toric_code", (0, 1), "toric_code 1+e", [1, 1]),
         "toric_code_one_e.alg")
    emit(current("toric_code", (0, 2), "toric_code 1+m", [1, 1]),
         "toric_code_one_m.alg")
    emit(current("toric_code", (0, 3), "toric_code 1+f", [1, 1j]),
         "toric_code_one_f.alg")
    emit(current("su2_4", (0, 4), "su2_4 0+4", [1, 1]), "su2_4_even.alg")
    emit(current("ising", (0, 1), "ising 1+psi", [1, 1j]), "ising_one_psi.alg")
    emit(current("z3_anyons", (0, 1, 2), "z3_anyons group", [1, w**2, w**2]),
         "z3_group.alg")


if __name__ == "__main__":
    main()
