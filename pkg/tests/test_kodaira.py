import json
import re
from dataclasses import replace
from fractions import Fraction
from importlib import resources

import pytest

from conftest import ROOT
from fspectrum.errors import UnknownFiberError
from fspectrum.kodaira import (
    FiberKind,
    FiberType,
    Monodromy,
    enumerate_records,
    engine_charged_dims,
    fiber_record,
    milnor_contributions,
    validate_record_against_engine,
)
from fspectrum.liealg import LieAlgebraId, RepKind, RepLabel, parse_rep, so, sp, su

NON_SIMPLY_LACED = {"sp", "g2", "f4"}


def _non_simply_laced(a: LieAlgebraId) -> bool:
    f = a.family.value
    return f in NON_SIMPLY_LACED or (f == "so" and a.param % 2 == 1)


def test_i0star_g2():
    rec = fiber_record(FiberType(FiberKind.I_STAR, 0), Monodromy.NON_SPLIT)
    assert rec.algebra == LieAlgebraId("g2")
    assert rec.rho0 == parse_rep("dim7_g2")
    assert rec.rhoQ1 is None and rec.rhoQ2 is None


def test_i5_su5():
    rec = fiber_record("I5", "split")
    assert rec.algebra == su(5)
    assert rec.rhoQ1 == (RepLabel(RepKind.LAMBDA2),)
    assert rec.rhoQ2 == (RepLabel(RepKind.FUND),)


def test_ii_star_e8_has_no_matter():
    rec = fiber_record("II*")
    assert rec.algebra == LieAlgebraId("e8")
    assert (rec.rho0, rec.rhoQ1, rec.rhoQ2) == (None, None, None)


def test_milnor_contribution_examples():
    assert milnor_contributions("I1") == (0, 1)
    for k in range(1, 7):
        assert milnor_contributions(FiberType(FiberKind.I, 2 * k + 1), "non-split") == (1, 0)
    assert milnor_contributions("IV*", "split") == (0, 0)


def test_blank_milnor_cells_are_zero():
    for fiber, mono in [("I2", None), ("III", None), ("I3", "split"), ("I8", "non-split")]:
        assert milnor_contributions(fiber, mono) == (0, 0)


def test_fiber_parsing_forms():
    assert FiberType.parse("I_{2}^*") == FiberType(FiberKind.I_STAR, 2)
    assert FiberType.parse("I*3") == FiberType(FiberKind.I_STAR, 3)
    assert FiberType.parse("I_12") == FiberType(FiberKind.I, 12)
    assert FiberType.parse("IV*") == FiberType(FiberKind.IV_STAR)


@pytest.mark.parametrize("bad", ["I0", "V", "I*-1", ""])
def test_unknown_fiber_symbols(bad):
    with pytest.raises(UnknownFiberError):
        FiberType.parse(bad)


def test_invalid_combinations():
    with pytest.raises(UnknownFiberError):
        fiber_record("I2", "non-split")
    with pytest.raises(UnknownFiberError):
        fiber_record("I0*")  # three monodromy classes, none chosen
    with pytest.raises(UnknownFiberError):
        fiber_record("IV", "sideways")


def test_monodromy_classes_select_rows():
    assert fiber_record("I0*", "non-split").algebra == LieAlgebraId("g2")
    assert fiber_record("I0*", "semi-split").algebra == so(7)
    assert fiber_record("I0*", "split").algebra == so(8)
    assert fiber_record("I6", "non-split").algebra == sp(3)
    assert fiber_record("I7", "non-split").algebra == sp(3)
    assert fiber_record("IV", "non-split").algebra == sp(1)
    assert fiber_record("IV", "split").algebra == su(3)
    assert fiber_record("I5*", "non-split").algebra == so(17)
    assert fiber_record("I5*", "split").algebra == so(18)


def test_engine_agreement_examples():
    assert validate_record_against_engine(fiber_record("I1*", "split")) == []
    rec = fiber_record("I4", "non-split")
    assert rec.algebra == sp(2)
    assert validate_record_against_engine(rec) == []
    assert engine_charged_dims(rec)[1] == 4


def test_corrupted_record_gives_one_discrepancy():
    rec = fiber_record("I3", "split")
    bad = replace(rec, table_charged_dims=(Fraction(7),) + rec.table_charged_dims[1:])
    problems = validate_record_against_engine(bad)
    assert len(problems) == 1
    assert "adjoint" in problems[0]


ALL_RECORDS = list(enumerate_records(max_n=12, max_k=6, include_extra=True))


@pytest.mark.parametrize("rec", ALL_RECORDS, ids=lambda r: f"{r.fiber}-{r.algebra}")
def test_every_record_matches_engine(rec):
    assert validate_record_against_engine(rec) == []


@pytest.mark.parametrize("rec", ALL_RECORDS, ids=lambda r: f"{r.fiber}-{r.algebra}")
def test_rho0_only_on_non_simply_laced(rec):
    assert (rec.rho0 is not None) == _non_simply_laced(rec.algebra)


@pytest.mark.parametrize("rec", ALL_RECORDS, ids=lambda r: f"{r.fiber}-{r.algebra}")
def test_lookup_returns_enumerated_record(rec):
    assert fiber_record(rec.fiber, rec.monodromy) == rec


def test_enumeration_bounds():
    recs = list(enumerate_records(max_n=12, max_k=6))
    sp_even = [r for r in recs if r.algebra.family.value == "sp"
               and r.fiber.kind is FiberKind.I and r.fiber.n % 2 == 0]
    assert sorted(r.fiber.n for r in sp_even) == [4, 6, 8, 10, 12]
    su_n = [r for r in recs if r.algebra.family.value == "su" and (r.fiber.n or 0) >= 4]
    assert sorted(r.fiber.n for r in su_n) == list(range(4, 13))
    assert not any(r.fiber.kind is FiberKind.II for r in recs)


def test_cusp_fiber_is_trivial_extra_record():
    rec = fiber_record("II")
    assert rec.algebra.family.value == "trivial"
    assert not rec.in_table


# -- shipped table data against the published LaTeX table ----------------------------

def _published_rows():
    text = (ROOT / "paper.md").read_text("utf-8")
    start = text.index(r"\begin{tabular}")
    body = text[start:text.index(r"\end{tabular}", start)]
    rows = [r for r in body.split(r"\hline")[2:] if "&" in r]
    return [[c.strip() for c in r.split("&")] for r in rows]


def _norm(cell: str) -> str:
    s = re.sub(r"\\(operatorname|mathfrak|mathbf|mathfrak)\s*", "", cell)
    s = s.replace(r"\frac12", "1/2").replace(r"\times", "x").replace(r"\{e\}", "e")
    s = re.sub(r"[\s${}\\]", "", s).replace("g_", "g").replace("f_", "f").replace("e_", "e")
    return s


def test_shipped_cells_reproduce_published_numbers():
    data = json.loads(resources.files("fspectrum").joinpath("data/kodaira_table.json")
                      .read_text("utf-8"))
    shipped = [r for r in data["records"] if r["in_table"]]
    published = _published_rows()
    assert len(shipped) == len(published)
    for rec, row in zip(shipped, published):
        cells = rec["cells"]
        assert _norm(row[0]) == _norm(cells["type"])
        assert _norm(row[1]) == _norm(cells["g"])
        # the numeric columns, read right-aligned, survive even in garbled rows
        ours = [_norm(cells[k]) for k in ("adj_ch", "rho0_ch", "rhoQ1_ch")]
        joined = "".join(_norm(c) for c in row)
        pos = 0
        for value in ours:
            if value in ("", "--"):
                continue
            found = joined.find(value, pos)
            assert found >= 0, (rec["cells"]["type"], value)
            pos = found + len(value)
