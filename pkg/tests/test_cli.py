import json
import shutil
import subprocess
import sys

import pytest

from conftest import FIXTURES
from fspectrum.cli import main

BROKEN = FIXTURES / "broken"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


# -- spectrum ---------------------------------------------------------------------------------

def test_spectrum_p2_generic(capsys):
    code, out, _ = run(capsys, "spectrum", FIXTURES / "p2_generic.json")
    assert code == 0
    assert out.splitlines()[0] == "V=0 T=0 H=273"


def test_spectrum_f12_e8(capsys):
    code, out, _ = run(capsys, "spectrum", FIXTURES / "f12_e8.json")
    assert code == 0
    assert out.splitlines()[0] == "V=248 T=1 H=492"


def test_spectrum_malformed(capsys):
    code, _, err = run(capsys, "spectrum", BROKEN / "malformed.json")
    assert code == 1
    assert err


def test_spectrum_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "spectrum", tmp_path / "absent.json")
    assert code == 1 and "cannot read" in err


def test_spectrum_json_fields(capsys):
    code, out, _ = run(capsys, "spectrum", "--json", FIXTURES / "p2_su5_line.json")
    report = json.loads(out)
    assert code == 0
    s = report["spectrum"]
    assert (s["V"], s["H_ch"], s["regime"]) == (24, 125, "smooth")
    assert {"source", "term", "value"} == set(s["breakdown"][0])
    assert report["input_digest"].startswith("sha256:")


# -- check ---------------------------------------------------------------------------------------

@pytest.mark.parametrize("path,code", [
    (FIXTURES / "enriques.json", 0),
    (FIXTURES / "f12_e8.json", 0),
    (FIXTURES / "quotient_a1.json", 0),
    (BROKEN / "p2_tampered_h.json", 2),
    (BROKEN / "torsion_5_5.json", 3),
    (BROKEN / "mw_rank_25_p2.json", 3),
    (BROKEN / "enriques_g2.json", 1),
    (BROKEN / "quotient_not_disjoint.json", 1),
    (BROKEN / "malformed.json", 1),
    (BROKEN / "multisection_7.json", 0),
])
def test_check_exit_codes(capsys, path, code):
    assert run(capsys, "check", path)[0] == code


def test_strict_turns_warnings_into_failures(capsys):
    assert run(capsys, "check", "--strict", BROKEN / "multisection_7.json")[0] == 3


def test_convention_selection(capsys):
    path = FIXTURES / "quotient_a1.json"
    assert run(capsys, "check", "--convention", "a", path)[0] == 0
    assert run(capsys, "check", "--convention", "b", path)[0] == 2
    assert run(capsys, "check", "--convention", "both", path)[0] == 2


def test_mirror_flag(capsys, tmp_path):
    doc = json.loads((FIXTURES / "p2_generic.json").read_text())
    doc["topology"]["h11_x"] = 492
    path = tmp_path / "big.json"
    path.write_text(json.dumps(doc))
    code, _, _ = run(capsys, "check", path)
    assert code == 2  # V changes with h11, so the anomaly no longer balances
    code, out, _ = run(capsys, "bounds", "--mirror-section", path)
    assert code == 3 and "mirror-h11" in out


def test_check_inconclusive_germ(capsys, tmp_path):
    doc = json.loads((FIXTURES / "p2_generic.json").read_text())
    doc["singularities"] = [{"id": "bad", "poly": "x^2*y"}]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "check", "--degree-cap", "8", path)
    assert code == 4 and "not certified" in err


def test_check_json_is_byte_identical(capsys):
    path = FIXTURES / "p2_nodal.json"
    _, first, _ = run(capsys, "check", "--json", path)
    _, second, _ = run(capsys, "check", "--json", path)
    assert first == second
    keys = list(json.loads(first))
    assert keys == sorted(keys)


def test_check_json_rationals_as_strings(capsys, tmp_path):
    doc = json.loads((FIXTURES / "p2_generic.json").read_text())
    doc["topology"]["chi_top"] = -541
    path = tmp_path / "odd_chi.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "check", "--json", path)
    assert code == 2
    assert json.loads(out)["anomaly"]["geom_residual"] == "-1/2"


# -- bounds -----------------------------------------------------------------------------------------

def test_bounds_json(capsys):
    code, out, _ = run(capsys, "bounds", "--json", FIXTURES / "f12_e8.json")
    verdicts = {v["rule"]: v for v in json.loads(out)}
    assert code == 0
    assert verdicts["cxdef"]["at_boundary"] is True
    assert verdicts["cxdef"]["lhs"] == 491


def test_bounds_seeded(capsys):
    code, out, _ = run(capsys, "bounds", BROKEN / "seeded_violations.json")
    assert code == 3
    violated = [line.split()[0] for line in out.splitlines() if " violated " in line]
    assert violated == ["mw-rank", "mw-torsion"]


# -- milnor -------------------------------------------------------------------------------------------

def test_milnor_a4(capsys):
    code, out, _ = run(capsys, "milnor", "--poly", "x^2+y^2+z^5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "4"
    assert "agrees" in lines[-1]


def test_milnor_node(capsys):
    code, out, _ = run(capsys, "milnor", "--poly", "x^2+y^2+z^2+w^2")
    assert (code, out.splitlines()[0]) == (0, "1")


def test_milnor_non_isolated(capsys):
    assert run(capsys, "milnor", "--poly", "x^2*y", "--degree-cap", "16")[0] == 4


def test_milnor_parse_error(capsys):
    code, _, err = run(capsys, "milnor", "--poly", "x^2 + + y")
    assert code == 1 and "position" in err


def test_milnor_reports_both_variants(capsys):
    code, out, _ = run(capsys, "milnor", "--poly", "x^5 + y^5 + x^2*y^2")
    assert code == 0
    assert out.splitlines()[0] == "10"
    assert "Jacobian ideal alone gives 11" in out
    code, out, _ = run(capsys, "milnor", "--jacobian-ideal-only", "--json", "--poly", "x^5 + y^5 + x^2*y^2")
    data = json.loads(out)
    assert (data["milnor"], data["ideal_with_f"], data["product_formula"]) == (11, 10, None)


def test_milnor_from_file(capsys, tmp_path):
    path = tmp_path / "germ.txt"
    path.write_text("x^3 + y^4 + z^2\n")
    assert run(capsys, "milnor", "--file", path)[1].splitlines()[0] == "6"


# -- batch ----------------------------------------------------------------------------------------------

def test_batch_empty_directory(capsys, tmp_path):
    code, out, _ = run(capsys, "batch", tmp_path)
    assert code == 0
    assert out.strip() == "0 file(s), 0 passed, 0 failed"


def test_batch_fixtures_all_pass(capsys):
    code, out, _ = run(capsys, "batch", FIXTURES)
    assert code == 0
    assert out.splitlines()[-1] == "7 file(s), 7 passed, 0 failed"


def test_batch_mixed_directory(capsys, tmp_path):
    for name in ("p2_generic.json", "enriques.json"):
        shutil.copy(FIXTURES / name, tmp_path / name)
    for name in ("torsion_5_5.json", "malformed.json"):
        shutil.copy(BROKEN / name, tmp_path / name)
    code, out, _ = run(capsys, "batch", tmp_path)
    lines = out.splitlines()
    assert code == 3
    assert [line.split()[0] for line in lines[:-1]] == ["0", "1", "0", "3"]
    assert lines[-1] == "4 file(s), 2 passed, 2 failed"


def test_batch_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "batch", "--json", BROKEN)
    _, parallel, _ = run(capsys, "batch", "--json", "--jobs", "3", BROKEN)
    assert serial == parallel
    assert json.loads(serial)["exit_code"] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fspectrum", "spectrum", str(FIXTURES / "enriques.json")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("V=0 T=9 H=12")
