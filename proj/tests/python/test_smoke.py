import math

import pytest

import greenchain as gc


def test_special_functions():
    assert gc.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert gc.bessel_k(0, 1.0) == pytest.approx(0.421024438240708, rel=1e-12)
    j, y = gc.bessel_jy(0, 2.404825557695773)
    assert abs(j) < 1e-9
    assert gc.pcf_d(1.0, 2.0) == pytest.approx(2.0 * math.exp(-1.0), rel=1e-13)
    sign, log_mag = gc.pcf_d_signlog(0.0, 1.0)
    assert sign == 1 and log_mag == pytest.approx(-0.25)
    with pytest.raises(gc.DomainError):
        gc.gamma(-2.0)
    with pytest.raises(gc.DomainError):
        gc.pcf_d(300.0, 0.0)


def test_free_greens():
    assert gc.g0_rect(1.0, 0.0, 1.0) == pytest.approx(math.exp(-1.0) / 2.0)
    g = gc.FreeGreens.spherical(0)
    assert g(1.0, 2.0, 1.0) == pytest.approx(math.sinh(1.0) * math.exp(-2.0) / 2.0, rel=1e-12)
    assert g.weight(2.0) == 4.0


def test_chain_evaluation():
    g0 = gc.FreeGreens.rectangular()
    one = gc.DeltaChain.rescaled(gc.Geometry.rectangular, [0.0], [2.0])
    assert gc.greens_finite(one, g0, 0.0, 0.0, 1.0) == pytest.approx(0.25, rel=1e-14)

    box = gc.DeltaChain.impenetrable(gc.Geometry.rectangular, [0.0, 1.0])
    assert abs(gc.greens_strong(box, g0, 0.0, 0.4, 1.0)) < 1e-12
    sign, log_mag = gc.char_func(box, g0, 1.0)
    assert sign == 1
    assert math.exp(log_mag) == pytest.approx((1.0 - math.exp(-2.0)) / 4.0, rel=1e-12)
    assert len(box) == 2 and box.all_infinite


def test_spectra():
    levels = gc.oscillator_spectrum(1.0, 6)
    reference = [4.951, 19.774, 44.452, 78.996, 123.410, 177.693]
    assert [round(l.energy, 2) for l in levels] == [round(r, 2) for r in reference]
    assert all(abs(l.energy - r) <= 0.01 for l, r in zip(levels, reference))
    assert levels[0].root.classification == gc.RootClass.even_bracket

    box = gc.box_spectrum_rect(1.0, 3)
    assert box[0].energy == pytest.approx(math.pi ** 2 / 2, rel=1e-10)
    cyl = gc.cyl_dirichlet_spectrum(1.0, 0, 1)
    assert cyl[0].value == pytest.approx(2.404825557695773, rel=1e-10)
    well = gc.delta_well_bound_state(-1.0)
    assert well.energy == pytest.approx(-0.5, rel=1e-12)
    assert gc.delta_well_bound_state(1.0) is None
    root = gc.brent(math.sin, 3.0, 3.3)
    assert root.value == pytest.approx(math.pi, abs=1e-12)


def test_cli_and_config(tmp_path):
    code, out, err = gc.run_cli(["spectrum", "--geometry", "box", "--n-roots", "2"])
    assert code == 0
    assert out.splitlines()[0] == "index,root_param,energy,residual,classification"
    assert gc.run_cli(["table1", "--tol", "1e-6"])[0] == 2

    cfg = tmp_path / "chain.json"
    cfg.write_text('{"geometry": "rectangular", "positions": [0], "couplings": [1]}')
    chain, g0 = gc.load_chain(str(cfg))
    assert chain.lambdas == [2.0]
    assert gc.greens_finite(chain, g0, 0.0, 0.0, 1.0) == pytest.approx(0.25)
    bad = tmp_path / "bad.json"
    bad.write_text('{"geometry": "rectangular", "positions": [0], "couplings": [1], "x": 1}')
    with pytest.raises(gc.ConfigError):
        gc.load_chain(str(bad))
