import math
import os
import subprocess

import numpy as np
import pytest

import twinbeam as tb


def test_click_conditioning_matches_closed_form():
    twb = tb.TwinBeam.from_photons(1.0)
    dim = twb.default_dim()
    r = tb.conditional_state(twb, tb.onoff_povm(0.8, dim, 1))
    assert r.probability == pytest.approx(tb.oracle("click_probability", N=1.0, eta=0.8), abs=1e-10)
    rho = r.state
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-10)
    w0 = tb.wigner(rho, 0j)
    assert w0 == pytest.approx(tb.oracle("onoff_wigner_origin", N=1.0, eta=0.8), abs=1e-10)
    assert w0 < 0


def test_homodyne_conditional_is_squeezed_coherent_state():
    twb = tb.TwinBeam.from_photons(5.0)
    dim = twb.default_dim(1e-14)
    rho = tb.conditional_state(twb, tb.homodyne_povm(0.6, 1.0, dim)).state
    sq = tb.oracle("conditional_squeezing", N=5.0, x=0.6)
    ref = tb.squeezed_state(sq["alpha"], sq["zeta"], dim)
    assert tb.fidelity(rho, ref) > 1 - 1e-8


def test_teleport_pipeline_equals_channel():
    vac = tb.state("vacuum")
    k = tb.effective_K(1.0)
    a = tb.teleport_via_conditioning(vac, 1.0, dim=30)
    b = tb.teleport_state(vac, k, 30)
    assert tb.trace_distance(a, b) < 1e-6
    assert tb.mean_photon_number(b) == pytest.approx(2 - math.sqrt(3), abs=1e-9)


def test_validation_errors():
    with pytest.raises(ValueError):
        tb.onoff_povm(1.5, 10, 1)
    with pytest.raises(ValueError):
        tb.oracle("g", eta=0.8)
    code, _, err = tb.run("onoff", {"N": 1.0, "bogus": 1.0})
    assert code == 2 and "bogus" in err


def test_run_sweep_reports_threshold():
    code, out, _ = tb.run("sweep-squeezing", {"N": 20, "eta": 0.7, "delta": 0.25}, format="json")
    assert code == 0
    assert '"x_delta": 5.16' in out


@pytest.mark.skipif("TWINBEAM_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes(tmp_path):
    cli = os.environ["TWINBEAM_CLI"]
    ok = subprocess.run([cli, "homodyne", "--N", "1", "--eta", "0.8", "--x", "0.6", "--max-n", "6",
                         "-o", str(tmp_path / "h.csv")])
    assert ok.returncode == 0
    lines = [l for l in (tmp_path / "h.csv").read_text().splitlines() if not l.startswith("#")]
    assert lines[0] == "n,m,re,im" and len(lines) == 1 + 49
    bad = subprocess.run([cli, "homodyne", "--N", "-1"], capture_output=True)
    assert bad.returncode == 2
