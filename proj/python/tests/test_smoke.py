import json
from fractions import Fraction
from pathlib import Path

import pytest

import liemod

FIXTURES = Path(__file__).resolve().parents[2] / "data" / "fixtures.json"


def aff1():
    # [e1, e2] = e2
    return liemod.LieAlgebra.from_brackets(2, [(0, 1, [0, 1])])


def test_bracket_is_exact():
    g = liemod.LieAlgebra.from_brackets(2, [(0, 1, ["1/3", 0])])
    assert g.bracket([1, 0], [0, 1]) == [Fraction(1, 3), 0]
    assert g.bracket([0, 1], [1, 0]) == [Fraction(-1, 3), 0]


def test_o_operator_and_graph_oracle_agree():
    rep = liemod.adjoint(aff1())
    for t in ([[0, 0], [1, 0]], [[1, 0], [0, 0]], [[1, 1], [0, 1]], [[0, 1], [0, 0]]):
        assert liemod.is_o_operator(rep, t) == liemod.graph_check(rep, t)
    assert liemod.is_o_operator(rep, [[0, 0], [1, 0]])
    assert not liemod.is_o_operator(rep, [[1, 0], [0, 1]])
    assert not liemod.o_check(rep, [[1, 0], [0, 1]])["ok"]


def test_r_matrix():
    h3 = liemod.fixture_algebra("h3")
    assert liemod.is_r_matrix(h3, [[0, 0, 1], [0, 0, 0], [-1, 0, 0]])
    assert not liemod.is_r_matrix(h3, [[0, 1, 0], [-1, 0, 0], [0, 0, 0]])


def test_complex_structure_on_abelian():
    g = liemod.LieAlgebra.abelian(2)
    assert liemod.is_complex_structure(g, [[0, -1], [1, 0]])
    assert not liemod.is_complex_structure(g, [[1, 0], [0, 1]])


def test_errors_raise_liemod_error():
    with pytest.raises(liemod.LiemodError):
        liemod.is_r_matrix(aff1(), [[1, 0], [0, 0]])


def test_fixture_bundle_validates():
    rows = liemod.validate_text(FIXTURES.read_text())
    assert rows and all(r["status"] == "valid" for r in rows)


def test_cli_report_is_deterministic():
    a = liemod.run_cli(["report", str(FIXTURES), "--seed", "3"])
    b = liemod.run_cli(["report", str(FIXTURES), "--seed", "3", "--threads", "2"])
    assert a[0] == 0 and a[1] == b[1]
    assert json.loads(a[1])["summary"]["suites_failed"] == 0
