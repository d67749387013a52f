from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from builders import fixture, model
from fspectrum.errors import InconsistencyError
from fspectrum.kodaira import enumerate_records
from fspectrum.model import MatterPoint
from fspectrum.spectrum import (
    Regime,
    full_spectrum,
    h_charged,
    h_uncharged,
    jacobian_cxdef,
    tensor_multiplets,
    vector_multiplets,
)


def e8_dim_minus_rank():
    roots = oracles.e8_roots()
    return len(roots)  # dim - rank = number of roots


# -- vector and tensor multiplets -------------------------------------------------------

def test_vectors_f12_e8():
    assert vector_multiplets(fixture("f12_e8")) == 11 - 2 - 1 + e8_dim_minus_rank() == 248


def test_vectors_p2_generic():
    assert vector_multiplets(fixture("p2_generic")) == 0


def test_vectors_abelian_only():
    m = fixture("example_7_6")
    assert vector_multiplets(m) == m.h11_x - m.base.h11 - 1 == 10


def test_tensors():
    assert tensor_multiplets(fixture("p2_generic")) == (0, 0)
    assert tensor_multiplets(model(base={"kind": "Hirzebruch", "n": 3}, h11_x=3)) == (1, 0)
    two_a3 = model(base={"kind": "rational_with_quotient_points", "h11": 5, "k2": 5,
                         "quotient_points": [{"m": 3, "count": 2}]},
                   h11_x=6, multiple_fibers_disjoint=True)
    assert tensor_multiplets(two_a3)[1] == 6


# -- hypermultiplets -----------------------------------------------------------------------

def test_uncharged_examples():
    assert h_uncharged(fixture("f12_e8")) == (492, 0)
    assert h_uncharged(model(b3_x=4)) == (2, 0)


def test_uncharged_counts_quotient_points():
    m = model(base={"kind": "rational_with_quotient_points", "h11": 5, "k2": 5,
                    "quotient_points": [{"m": 3, "count": 2}, {"m": 1, "count": 4}]},
              h11_x=6, b3_x=10, multiple_fibers_disjoint=True)
    assert h_uncharged(m) == (5, 6)


def test_charged_g2_with_folding_cover():
    m = model(components=[{"id": "S", "genus": 2, "cover_genus": 4, "fiber": "I0*",
                           "monodromy": "non-split"}], h11_x=4, b3_x=100)
    total, breakdown = h_charged(m)
    assert total == 2 * 12 + 2 * 6 == 36
    assert [(e.term, e.value) for e in breakdown] == [("adjoint", 24), ("rho0", 12)]


def test_charged_generic_weierstrass_is_zero():
    assert h_charged(fixture("p2_generic")) == (0, ())


def test_charged_su5_matter():
    fund = oracles.su_fund_weights(5)
    lam2 = oracles.charged(oracles.antisymmetric_square(fund))
    assert lam2 == 10
    m = model(components=[{"id": "L", "genus": 0, "fiber": "I5", "monodromy": "split"}],
              matter=[{"id": "a", "on": ["L"], "rep": "Q1", "count": 3},
                      {"id": "f", "on": ["L"], "rep": "Q2", "count": 7}], h11_x=6, b3_x=300)
    assert h_charged(m)[0] == 3 * lam2 + 7 * oracles.charged(fund) == 65


def test_charged_c_q_term():
    total, breakdown = h_charged(fixture("example_7_6"))
    assert total == 10
    assert [(e.source, e.term) for e in breakdown] == [("Q", "c_Q")]


def test_half_hypers_count_half_the_weights():
    m = model(components=[{"id": "S", "genus": 0, "fiber": "I5", "monodromy": "non-split"}],
              matter=[{"id": "h", "on": ["S"], "rep": "Q1", "count": 1}], h11_x=5, b3_x=300)
    spec = full_spectrum(m)
    assert spec.H_ch == len(oracles.sp_fund_weights(2)) // 2
    m = model(components=[{"id": "S", "genus": 0, "fiber": "III*"}],
              matter=[{"id": "h", "on": ["S"], "rep": "Q1", "count": 1}], h11_x=9, b3_x=300)
    spec = full_spectrum(m)
    assert spec.H_ch == len(oracles.e7_56_weights()) // 2 == 28
    assert not spec.warnings


def test_half_integral_total_is_flagged():
    # parity is a validation rule; the spectrum itself only warns
    m = model(b3_x=545)
    spec = full_spectrum(m)
    assert spec.H_unch_base == Fraction(545, 2)
    assert len(spec.warnings) == 1


# -- full spectrum -------------------------------------------------------------------------

def test_full_p2_generic():
    s = full_spectrum(fixture("p2_generic"))
    assert (s.V, s.T, s.H_unch_base, s.H_ch) == (0, 0, 273, 0)
    assert s.regime is Regime.SMOOTH


def test_full_f12_e8():
    s = full_spectrum(fixture("f12_e8"))
    assert (s.V, s.T, s.H_unch_base, s.H_ch) == (248, 1, 492, 0)
    assert s.cxdef == 491


def test_full_enriques():
    m = fixture("enriques")
    s = full_spectrum(m)
    assert (s.V, s.T, s.H_ch) == (m.h11_x - 11, 9, 0)


def test_regime_detection():
    assert full_spectrum(fixture("p2_nodal")).regime is Regime.TERMINAL
    assert full_spectrum(fixture("quotient_a1")).regime is Regime.MULTIPLE_FIBERS


def test_forced_regimes_must_be_consistent():
    with pytest.raises(InconsistencyError):
        full_spectrum(fixture("p2_nodal"), regime=Regime.SMOOTH)
    with pytest.raises(InconsistencyError):
        full_spectrum(fixture("quotient_a1"), regime=Regime.TERMINAL)


def test_ledger_sums_to_total():
    s = full_spectrum(fixture("p2_su5_line"))
    assert s.H_ch == sum(e.value for e in s.breakdown) == 125


def test_simply_laced_genus_zero_has_no_rho0_term():
    for rec in enumerate_records(max_n=12, max_k=6):
        if rec.rho0 is not None:
            continue
        comps = [{"id": "S", "genus": 0, "fiber": str(rec.fiber),
                  **({"monodromy": rec.monodromy.value} if rec.monodromy else {})}]
        m = model(components=comps, h11_x=40, b3_x=300)
        assert not [e for e in h_charged(m)[1] if e.term == "rho0"]


@st.composite
def smooth_models(draw):
    comps, matter = [], []
    for i in range(draw(st.integers(0, 3))):
        fiber, mono = draw(st.sampled_from([("I2", None), ("I5", "split"), ("I4", "non-split"),
                                            ("I1*", "split"), ("IV*", "split")]))
        comps.append({"id": f"c{i}", "genus": draw(st.integers(0, 3)), "fiber": fiber,
                      **({"monodromy": mono} if mono else {})})
    for j in range(draw(st.integers(0, 3))):
        if comps:
            matter.append({"id": f"m{j}", "on": [draw(st.sampled_from(comps))["id"]],
                           "rep": draw(st.sampled_from(["Q1", "Q2"])), "count": draw(st.integers(1, 4)),
                           "c_q": draw(st.integers(0, 2))})
    return model(base={"kind": "Hirzebruch", "n": draw(st.integers(0, 12))}, components=comps,
                 matter=matter, h11_x=30, b3_x=2 * draw(st.integers(0, 400)))


@settings(max_examples=60, deadline=None)
@given(smooth_models())
def test_smooth_and_terminal_paths_agree(m):
    a = full_spectrum(m, regime=Regime.SMOOTH)
    b = full_spectrum(m, regime=Regime.TERMINAL)
    assert replace(a, regime=Regime.TERMINAL) == b


@settings(max_examples=60, deadline=None)
@given(smooth_models())
def test_ledger_property(m):
    total, breakdown = h_charged(m)
    assert total == sum(e.value for e in breakdown)


@settings(max_examples=60, deadline=None)
@given(smooth_models(), st.data())
def test_adding_charged_matter_increases_h_ch(m, data):
    if not m.components:
        return
    comp = data.draw(st.sampled_from(m.components))
    slot = "Q2" if comp.record.rhoQ2 is not None else "Q1"
    if comp.record.slot(slot) is None:
        return
    extra = MatterPoint("new", (comp.id,), slot, data.draw(st.integers(1, 3)), 0)
    bigger = replace(m, matter=m.matter + (extra,))
    assert h_charged(bigger)[0] > h_charged(m)[0]


# -- genus-one fibrations -------------------------------------------------------------------

def test_jacobian_cxdef():
    assert jacobian_cxdef(272, 10) == 262
    assert jacobian_cxdef(491, 0) == 491
    with pytest.raises(InconsistencyError):
        jacobian_cxdef(3, 5)
