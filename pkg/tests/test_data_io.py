"""Category file parsing, canonical serialization, and error reporting."""

from __future__ import annotations

import numpy as np
import pytest

from fuscat import MalformedTable, ParseError
from fuscat.data_io import (
    bundled_names,
    bundled_path,
    load_category,
    parse_category,
    save_category,
)

MINIMAL = """\
[meta]
name = z2_boson
tolerance = 1e-09

[labels]
0 1
1 b

[fusion]
0 0 0 1
0 1 1 1
1 0 1 1
1 1 0 1

[duals]
0 0
1 1

[thetas]
0 1 0
1 1 0

[qdims]
0 1
1 1

[F]
1 1 1 1  0 0 0  0 0 0  1 0

[R]
1 1 0  0 0  1 0
"""


def test_parse_minimal():
    cat = parse_category(MINIMAL)
    assert cat.name == "z2_boson"
    assert cat.n == 2
    assert cat.label_names == ["1", "b"]
    assert cat.f_matrix(1, 1, 1, 1)[0, 0] == 1.0
    assert cat.r_matrix(1, 1, 0)[0, 0] == 1.0


def test_roundtrip_bundled():
    # canonical form: save(load(text)) == text, bit for bit
    for name in bundled_names():
        if not name.endswith(".cat"):
            continue
        path = bundled_path(name)
        text = path.read_text()
        assert save_category(load_category(path)) == text, name


def test_tolerance_override():
    cat = parse_category(MINIMAL, tolerance=1e-4)
    assert cat.tolerance == 1e-4
    assert parse_category(MINIMAL).tolerance == 1e-9


def test_unknown_section_rejected():
    with pytest.raises(ParseError):
        parse_category(MINIMAL + "\n[bogus]\n1 2 3\n")


def test_duplicate_section_rejected():
    with pytest.raises(ParseError):
        parse_category(MINIMAL + "\n[R]\n1 1 0  0 0  1 0\n")


def test_missing_section_rejected():
    text = MINIMAL.replace("[thetas]\n0 1 0\n1 1 0\n", "")
    with pytest.raises(ParseError):
        parse_category(text)


def test_sparse_labels_rejected():
    text = MINIMAL.replace("1 b", "2 b")
    with pytest.raises(ParseError):
        parse_category(text)


def test_wrong_duals_rejected():
    text = MINIMAL.replace("[duals]\n0 0\n1 1", "[duals]\n0 0\n1 0")
    with pytest.raises((ParseError, MalformedTable)):
        parse_category(text)


def test_inadmissible_f_rejected():
    # b x b x b cannot reach the unit in Z_2
    text = MINIMAL.replace("[F]\n", "[F]\n1 1 1 0  1 0 0  1 0 0  1 0\n")
    with pytest.raises(ParseError):
        parse_category(text)


def test_malformed_numbers_rejected():
    with pytest.raises(ParseError):
        parse_category(MINIMAL.replace("0 1 0", "0 one 0"))


def test_content_before_section_rejected():
    with pytest.raises(ParseError):
        parse_category("0 0 0 1\n" + MINIMAL)


def test_comments_and_blank_lines_ignored():
    text = "# a comment\n" + MINIMAL.replace("[fusion]", "[fusion]\n# inline table note")
    cat = parse_category(text)
    assert cat.n == 2


def test_load_missing_file_raises(tmp_path):
    with pytest.raises(ParseError):
        load_category(tmp_path / "nope.cat")


def test_bundled_path_unknown():
    with pytest.raises(ParseError):
        bundled_path("not_a_category")


def test_bundled_library_complete():
    names = bundled_names()
    for required in ("trivial.cat", "z2_semion.cat", "z3_anyons.cat",
                     "fibonacci.cat", "ising.cat", "toric_code.cat",
                     "su2_4.cat"):
        assert required in names


def test_su2_4_values():
    cat = load_category(bundled_path("su2_4"))
    np.testing.assert_allclose(cat.qdim, [1, np.sqrt(3), 2, np.sqrt(3), 1],
                               atol=1e-12)
    h = np.array([0, 3 / 24, 8 / 24, 15 / 24, 1]) / 1.0
    np.testing.assert_allclose(cat.theta, np.exp(2j * np.pi * h), atol=1e-12)
    assert list(cat.dual) == [0, 1, 2, 3, 4]
