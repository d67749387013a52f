from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from builders import fixture, model
from fspectrum.anomaly import (
    anomaly_report,
    geom_residual,
    geometric_residual,
    grav_residual,
    gravitational_residual,
    solve,
)
from fspectrum.errors import SolveError
from fspectrum.spectrum import Regime, full_spectrum

GRAV_COEFFICIENTS = {"H": 1, "V": -1, "T": 29, "correction": 1}
GEOM_COEFFICIENTS = {"K2": 30, "chi_top": Fraction(1, 2), "sum_m": Fraction(-1, 2), "H_ch": -1,
                     "dim_minus_rank": 1}


def test_gravitational_examples():
    assert grav_residual(H=273, V=0, T=0) == 0
    assert grav_residual(H=492, V=248, T=1) == 0
    assert grav_residual(H=300, V=0, T=0) == 27


def test_gravitational_residual_from_spectra():
    for name in ("p2_generic", "f12_e8", "enriques", "example_7_6", "p2_su5_line", "p2_nodal"):
        assert gravitational_residual(full_spectrum(fixture(name))) == 0, name


def test_geometric_examples():
    assert geom_residual(K2=9, chi_top=-540, sum_m=0, H_ch=0, dim_minus_rank=0) == 0
    assert geom_residual(K2=0, chi_top=0, sum_m=0, H_ch=0, dim_minus_rank=0) == 0
    assert geom_residual(K2=8, chi_top=-480, sum_m=1, H_ch=0, dim_minus_rank=0) == Fraction(-1, 2)


def test_geometric_residual_from_models():
    for name in ("p2_generic", "f12_e8", "enriques", "example_7_6", "p2_su5_line", "p2_nodal",
                 "quotient_a1"):
        m = fixture(name)
        assert geometric_residual(m, full_spectrum(m)) == 0, name


def test_geometric_needs_chi():
    m = model(chi_top=None)
    assert geometric_residual(m, full_spectrum(m)) is None
    assert anomaly_report(m, full_spectrum(m)).equations_used == ("gravitational",)


def test_multiple_fiber_conventions():
    m = fixture("quotient_a1")
    spec = full_spectrum(m)
    rep = anomaly_report(m, spec)
    assert rep.grav_residual == 0
    # the two readings differ by the count times (1 + 29 m)
    assert rep.grav_residual_alt == 1 * (1 + 29 * 1)
    assert rep.equations_used[0] == "gravitational-multiple-fibers"


def test_alt_convention_absent_outside_multiple_fibers():
    m = fixture("f12_e8")
    assert anomaly_report(m, full_spectrum(m)).grav_residual_alt is None
    assert gravitational_residual(full_spectrum(m), "b") == gravitational_residual(full_spectrum(m), "a")


def test_geometric_equation_is_regime_independent():
    m = fixture("p2_generic")
    a = geometric_residual(m, full_spectrum(m, regime=Regime.SMOOTH))
    b = geometric_residual(m, full_spectrum(m, regime=Regime.TERMINAL))
    assert a == b == 0


def test_report_echoes_inputs():
    m = fixture("f12_e8")
    rep = anomaly_report(m, full_spectrum(m))
    assert rep.inputs["gravitational"] == {"H": 492, "V": 248, "T": 1, "correction": 0}
    assert rep.inputs["geometric"]["K2"] == 8


# -- solving ---------------------------------------------------------------------------------

def test_solve_examples():
    assert solve("grav", "H_unch", {"V": 248, "T": 1, "H_ch": 0}) == 492
    assert solve("geom", "chi_top", {"K2": 9, "H_ch": 0, "dim_minus_rank": 0, "sum_m": 0}) == -540
    # 302 + 29 T = 273
    assert solve("grav", "T", {"V": 0, "H": 302}) == -1
    assert solve("grav", "T", {"V": 0, "H": 244}) == 1


def test_solve_aliases():
    assert solve("geom", "K²", {"chi": -540, "H_ch": 0, "dim_minus_rank": 0, "Σm": 0}) == 9


@pytest.mark.parametrize("equation,unknown,knowns", [
    ("grav", "K2", {"V": 0, "T": 0}),
    ("geom", "V", {"K2": 9}),
    ("grav", "V", {"T": 0}),
    ("grav", "V", {"T": 0, "H": 1, "H_ch": 2}),
    ("grav", "H_unch", {"V": 0, "T": 0}),
    ("geom", "chi_top", {"K2": 9, "H_ch": 0, "dim_minus_rank": 0}),
    ("geom", "chi_top", {"K2": 9, "H_ch": 0, "dim_minus_rank": 0, "sum_m": 0, "chi_top": 1}),
    ("grav", "V", {"T": 0, "H": 1, "chi_top": 3}),
    ("spin", "V", {}),
])
def test_solve_rejects_bad_requests(equation, unknown, knowns):
    with pytest.raises(SolveError):
        solve(equation, unknown, knowns)


q = st.fractions(min_value=-1000, max_value=1000, max_denominator=6)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(["H", "V", "T", "correction"]), st.fixed_dictionaries(
    {"H": q, "V": q, "T": q, "correction": q}))
def test_grav_solve_round_trip(unknown, values):
    knowns = {k: v for k, v in values.items() if k != unknown}
    values[unknown] = solve("grav", unknown, knowns)
    assert grav_residual(**values) == 0


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(["H_unch", "H_ch"]), st.fixed_dictionaries(
    {"H_unch": q, "H_ch": q, "V": q, "T": q}))
def test_grav_solve_parts_round_trip(unknown, values):
    knowns = {k: v for k, v in values.items() if k != unknown}
    values[unknown] = solve("grav", unknown, knowns)
    assert grav_residual(values["H_unch"] + values["H_ch"], values["V"], values["T"]) == 0


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(sorted(GEOM_COEFFICIENTS)), st.fixed_dictionaries(
    {k: q for k in GEOM_COEFFICIENTS}))
def test_geom_solve_round_trip(unknown, values):
    knowns = {k: v for k, v in values.items() if k != unknown}
    values[unknown] = solve("geom", unknown, knowns)
    assert geom_residual(**values) == 0


@settings(max_examples=100, deadline=None)
@given(st.fixed_dictionaries({"H": q, "V": q, "T": q, "correction": q}),
       st.sampled_from(sorted(GRAV_COEFFICIENTS)))
def test_grav_residual_is_affine(values, field):
    bumped = dict(values, **{field: values[field] + 1})
    assert grav_residual(**bumped) - grav_residual(**values) == GRAV_COEFFICIENTS[field]


@settings(max_examples=100, deadline=None)
@given(st.fixed_dictionaries({k: q for k in GEOM_COEFFICIENTS}),
       st.sampled_from(sorted(GEOM_COEFFICIENTS)))
def test_geom_residual_is_affine(values, field):
    bumped = dict(values, **{field: values[field] + 1})
    assert geom_residual(**bumped) - geom_residual(**values) == GEOM_COEFFICIENTS[field]
