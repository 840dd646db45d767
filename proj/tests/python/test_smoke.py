from fractions import Fraction
from pathlib import Path as FsPath

import pytest

specta = pytest.importorskip("specta")

DATA = FsPath(__file__).resolve().parent.parent / "data"


def complex_file(name):
    return specta.CellComplex.parse((DATA / name).read_text())


def test_disk_decomposition():
    d = specta.decompose("x^2 + y^2 < 1")
    assert d.shear == 0
    assert d.cell_count == 13
    assert len(d.complex) == 5
    assert d.contains(0, 0)
    assert not d.contains(1, 0)
    assert specta.contains_point("x^2 + y^2 < 1", Fraction(3, 5), Fraction(3, 5))


def test_serialization_round_trip():
    k = specta.decompose("x^2 + y^2 <= 1 OR (y = 0 AND x^2 - 2x <= 0)").complex
    again = specta.CellComplex.parse(k.serialize())
    assert again.serialize() == k.serialize()
    assert specta.analysis_report(again, records=True) == specta.analysis_report(k, records=True)


def test_interval_fingerprints():
    closed = specta.fingerprint(complex_file("closed_interval.complex"))
    half = specta.fingerprint(complex_file("half_open_interval.complex"))
    assert closed["minus_eta"] == half["minus_eta"]
    assert closed["base"]["compact"] and not half["base"]["compact"]
    assert specta.eta(complex_file("closed_interval.complex")) == [0, 1]


def test_rho_sequence_and_bricks():
    k = complex_file("open_disk_plus_point.complex")
    assert specta.rho_sequence(k)["rho1"] == [0]
    assert specta.bricks(k) == [(2, [0, 4])]


def test_compare_rows():
    rows = specta.compare(complex_file("half_open_interval.complex"), complex_file("open_interval.complex"))
    verdicts = {relation: verdict for relation, verdict, _ in rows}
    assert verdicts["S*(M1) ~ S*(M2)"] == "CONSISTENT"
    assert verdicts["S(M1) ~ S*(M2)"] == "RULED_OUT"


def test_factorial_path_separator():
    alpha = specta.Path.factorial()
    assert specta.separate(alpha, "t, 2t^2+6t^3", kmax=12) == (4, Fraction(576, 577))
    assert specta.ideal_membership(specta.Function.separator(5), alpha, "m_star")["status"] == "IN_IDEAL_UP_TO_T"
    assert specta.constant_term("x2/x1^2", alpha, T=6) == 2


def test_series_evaluation():
    s = specta.eval_on_path("x2/x1^2", specta.Path.factorial(), T=5)
    assert s.order == 0
    assert not s.exact
    assert s.precision == 3
    assert s.terms == {0: 2, 1: 6, 2: 24}
    assert str(s) == "2 + 6*t + 24*t^2 + O(t^3)"


def test_neighborhood_and_bound():
    member, f, _ = specta.neighborhood_membership(specta.Path.factorial(), 2, 1, "t, 0")
    assert not member
    assert f.terms[4] == -4
    assert specta.positivity_bound("x1, x2", "t, t^3 - t^4") == 4


def test_errors_are_raised():
    with pytest.raises(specta.SpectaError, match="ParseError"):
        specta.decompose("x^+1 > 0")
    with pytest.raises(specta.SpectaError, match="UnboundedInput"):
        specta.decompose("y > x^2")


def test_cli_entry_point():
    code, out, err = specta.run_cli(["path", str(DATA / "factorial-demo.path"), "separate", "--mu", "t, 2t^2+6t^3"])
    assert code == 0, err
    assert "576/577" in out
