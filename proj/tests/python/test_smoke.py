import json
import math
import pathlib

import pytest

import bcapprox as bc

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def test_idempotent_units():
    assert bc.e1 * bc.e2 == bc.Bicomplex()
    assert bc.e1 * bc.e1 == bc.e1
    assert bc.j * bc.j == bc.Bicomplex(-1)
    assert bc.is_zero_divisor(bc.e1)
    with pytest.raises(bc.NullConeError):
        bc.invert(bc.e2)


def test_arithmetic_and_conjugation():
    z = bc.Bicomplex(1 + 2j, -0.5 + 1j)
    w = bc.Bicomplex(0.3, 2 - 1j)
    p = z * w
    assert abs(p.z1 - (z.z1 * w.z1 - z.z2 * w.z2)) < 1e-14
    assert abs(p.z2 - (z.z1 * w.z2 + z.z2 * w.z1)) < 1e-14
    q = p / w
    assert abs(q.beta1 - z.beta1) < 1e-14 and abs(q.beta2 - z.beta2) < 1e-14
    for kind in ("bar", "dagger", "star"):
        assert bc.conjugate(bc.conjugate(z, kind), kind) == z
    n1, n2 = bc.norm_k(z)
    assert n1 == pytest.approx(abs(z.beta1)) and n2 == pytest.approx(abs(z.beta2))


def test_moebius_infinity_images():
    one = bc.Bicomplex(1)
    f = bc.MoebiusMap(one, bc.Bicomplex(), bc.e1, one)
    assert f.pole_pattern == "pole_e1"
    assert f((-1, 0.5)) == (None, 0.5)
    assert f((None, 0.5)) == (1, 0.5)
    g = f.compose(f.inverse())
    assert g((0.25, 3j))[0] == pytest.approx(0.25)


def test_series_functionals():
    f = bc.koebe_rotation_series(bc.Bicomplex(1), 32)
    report = bc.bieberbach_check(f)
    assert report["trace"]["a2"]["b1"] == [-2.0, 0.0]
    assert report["holds"]
    g = bc.sqrt_transform(f)
    h = bc.inversion_transform(g)
    assert h.coefficient(1) == bc.Bicomplex(1)
    a1, a2 = bc.gronwall_area_sum(bc.Series("laurent", [bc.Bicomplex(1), bc.Bicomplex(), bc.e1 - bc.e2]))
    assert (a1, a2) == (1.0, 1.0)
    cover = bc.koebe_covering(bc.koebe_rotation_series(bc.Bicomplex(1), 64))
    assert abs(cover["value"]["a1"] - bc.koebe_radius_bound(0.99)) < 5e-3


def test_approximate_and_cli(tmp_path):
    function = json.loads((DATA / "inv_exp.json").read_text())
    region = json.loads((DATA / "annulus_disk.json").read_text())
    rep = bc.approximate(function, region, 1e-10)
    assert rep["class"] == "T2"
    assert rep["achieved"]
    assert rep["pole_markers"][0]["b2"] == "inf"

    out = tmp_path / "verify.json"
    code, _, _ = bc.run_cli(["verify", "--series", str(DATA / "koebe64.json"), "--bieberbach", "--out", str(out)])
    assert code == 0
    assert json.loads(out.read_text())["holds"]
    code, _, err = bc.run_cli(["approx", "--region", str(DATA / "malformed_region.json")])
    assert code == 2 and "error" in json.loads(err)
    assert math.isfinite(rep["sup_error"]["a1"])
