"""Minimal-basis H2 models: integrals, CI, energies, natural orbitals."""
import math

import numpy as np
import pytest

from entropart.density import contracted_overlap
from entropart.models import (boys_f0, build_model, fci_model, hf_model,
                              hl_model, hydrogen_atom_energy, integral_engine,
                              natural_orbitals, sto6g_hydrogen)
from entropart.quadrature import build_molecular_grid, integrate, radial_grid

E_ATOM = -0.4710390541780927


def test_boys_f0_limits():
    assert boys_f0(0.0) == 1.0
    # small-t series vs the erf form on both sides of the switch
    assert boys_f0(1e-14) == pytest.approx(1.0 - 1e-14 / 3.0, rel=1e-13)
    assert boys_f0(1e-12) == pytest.approx(1.0 - 1e-12 / 3.0, rel=1e-13)
    # large-t asymptote 0.5*sqrt(pi/t)
    assert boys_f0(400.0) == pytest.approx(0.5 * math.sqrt(math.pi / 400.0),
                                           rel=1e-12)


def test_integrals_at_reference_separation():
    ints = integral_engine(sto6g_hydrogen(), 1.4)
    assert ints.S == pytest.approx(0.65917616847521, abs=1e-11)
    assert ints.h_AA == pytest.approx(-1.12462776332783, abs=1e-10)
    assert ints.h_AB == pytest.approx(-0.96107864286746, abs=1e-10)
    assert ints.eri_aaaa == pytest.approx(0.77499852133346, abs=1e-10)
    assert ints.eri_aabb == pytest.approx(0.56967545598241, abs=1e-10)
    assert ints.eri_abab == pytest.approx(0.29672024037779, abs=1e-10)
    assert ints.eri_aaab == pytest.approx(0.44392613234157, abs=1e-10)


def test_one_center_repulsion_against_radial_quadrature():
    """(AA|AA) equals the electrostatic self-energy of the AA distribution.

    Independent route: for an s-type charge density p(r) the repulsion is
    int p(r1) p(r2) / max(r1, r2), evaluated with nested radial rules.
    """
    phi = sto6g_hydrogen()
    r, w = radial_grid(400, 0.661404)
    p = phi.value(r) ** 2 * (4.0 * math.pi)   # radial shell density
    inv = 1.0 / np.maximum.outer(r, r)
    oracle = float(w @ (inv * p[None, :] * p[:, None]) @ w)
    ints = integral_engine(phi, 1.4)
    assert ints.eri_aaaa == pytest.approx(oracle, abs=1e-4)


def test_hydrogen_atom_energy():
    assert hydrogen_atom_energy() == pytest.approx(E_ATOM, abs=1e-12)


def test_model_energies_at_equilibrium_region():
    assert hf_model(1.4).energy == pytest.approx(-1.1253243671759416, abs=1e-10)
    assert hl_model(1.4).energy == pytest.approx(-1.1329611888190625, abs=1e-8)
    assert fci_model(1.4).energy == pytest.approx(-1.145929244971406, abs=1e-10)


def test_fci_below_other_models():
    for separation in (1.0, 1.4, 2.0, 4.0, 8.0, 50.0):
        e_hf = hf_model(separation).energy
        e_hl = hl_model(separation).energy
        e_fci = fci_model(separation).energy
        assert e_fci <= e_hf + 1e-12
        assert e_fci <= e_hl + 1e-12


def test_dissociation_energies():
    # the correlated models reach two free atoms; the mean-field one does not
    assert fci_model(50.0).energy == pytest.approx(2 * E_ATOM, abs=1e-6)
    assert hl_model(50.0).energy == pytest.approx(2 * E_ATOM, abs=1e-6)
    assert hf_model(50.0).energy - 2 * E_ATOM > 0.05


def test_ci_coefficients():
    model = fci_model(1.4)
    c1, c2 = model.ci
    assert c1 == pytest.approx(0.993620769681, abs=1e-9)
    assert c2 == pytest.approx(-0.112773073287, abs=1e-9)
    assert c1 * c1 + c2 * c2 == pytest.approx(1.0, rel=1e-14)
    # far out the two configurations contribute equally
    c1, c2 = fci_model(50.0).ci
    assert abs(c1) == pytest.approx(1 / math.sqrt(2), abs=1e-6)
    assert abs(c2) == pytest.approx(1 / math.sqrt(2), abs=1e-6)


def test_pair_coefficient_forms():
    separation = 1.4
    phi = sto6g_hydrogen()
    S = contracted_overlap(phi, phi, separation)
    hf = hf_model(separation).pair_coefficients
    np.testing.assert_allclose(hf, np.ones((2, 2)) / (1.0 + S), rtol=1e-14)
    hl = hl_model(separation).pair_coefficients
    np.testing.assert_allclose(
        hl, np.array([[1.0, S], [S, 1.0]]) / (1.0 + S * S), rtol=1e-14)
    c1, c2 = fci_model(separation).ci
    fci = fci_model(separation).pair_coefficients
    caa = c1 * c1 / (1.0 + S) + c2 * c2 / (1.0 - S)
    cab = c1 * c1 / (1.0 + S) - c2 * c2 / (1.0 - S)
    np.testing.assert_allclose(
        fci, np.array([[caa, cab], [cab, caa]]), rtol=1e-12)


def test_ci_override_reproduces_mean_field_density():
    forced = fci_model(1.4, ci_override=(1.0, 0.0))
    np.testing.assert_allclose(forced.pair_coefficients,
                               hf_model(1.4).pair_coefficients, rtol=1e-14)


def test_degenerate_ci_solution():
    # forcing an exactly degenerate 2x2 problem must still give a unit vector
    model = fci_model(200.0)
    c1, c2 = model.ci
    assert c1 * c1 + c2 * c2 == pytest.approx(1.0, rel=1e-14)
    assert c1 > 0


def test_model_field_normalization():
    for method in ("hf", "hl", "fci"):
        model = build_model(method, 1.4)
        grid = build_molecular_grid(model.molecule())
        n = integrate(model.field().density(grid.points), grid)
        assert n == pytest.approx(2.0, abs=1e-6)


def test_build_model_validation():
    with pytest.raises(ValueError, match="unknown method"):
        build_model("mp2", 1.4)
    with pytest.raises(ValueError, match="distance must be positive"):
        build_model("hf", 0.0)


def test_natural_orbital_occupations():
    phi = sto6g_hydrogen()
    S = contracted_overlap(phi, phi, 1.4)
    (n_g, _, g), (n_u, _, u) = natural_orbitals(hf_model(1.4))
    assert n_g == pytest.approx(2.0, rel=1e-13)
    assert n_u == pytest.approx(0.0, abs=1e-13)
    (n_g, _, _), (n_u, _, _) = natural_orbitals(hl_model(1.4))
    assert n_g == pytest.approx((1 + S) ** 2 / (1 + S * S), rel=1e-12)
    assert n_u == pytest.approx((1 - S) ** 2 / (1 + S * S), rel=1e-12)
    model = fci_model(1.4)
    c1, c2 = model.ci
    (n_g, _, _), (n_u, _, _) = natural_orbitals(model)
    assert n_g == pytest.approx(2 * c1 * c1, rel=1e-12)
    assert n_u == pytest.approx(2 * c2 * c2, rel=1e-12)
    assert n_g + n_u == pytest.approx(2.0, rel=1e-13)


def test_natural_orbitals_rebuild_density(rng):
    model = fci_model(1.4)
    field = model.field()
    (n_g, _, g), (n_u, _, u) = natural_orbitals(model)
    c = n_g * np.outer(g, g) + n_u * np.outer(u, u)
    np.testing.assert_allclose(c, field.dm.coefficients, rtol=0, atol=1e-13)
    pts = rng.normal(scale=2.0, size=(200, 3))
    phi = field.basis.evaluate(pts)
    rho_no = n_g * (g @ phi) ** 2 + n_u * (u @ phi) ** 2
    np.testing.assert_allclose(rho_no, field.density(pts), rtol=1e-10,
                               atol=1e-16)
