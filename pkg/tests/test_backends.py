"""Compiled and pure-Python kernels must be interchangeable."""
import os
import subprocess
import sys

import numpy as np
import pytest

from entropart.backends import (active_backend_name, get_backend, reference,
                                set_backend)


try:
    from entropart.backends import _fastkern
    HAVE_COMPILED = True
except ImportError:
    HAVE_COMPILED = False

needs_compiled = pytest.mark.skipif(not HAVE_COMPILED,
                                    reason="compiled extension not built")


def test_active_backend_known():
    assert active_backend_name() in ("python", "compiled")
    assert get_backend() is not None


def test_set_backend_switches_and_restores():
    original = active_backend_name()
    mod = set_backend("python")
    assert mod is reference
    assert active_backend_name() == "python"
    set_backend("auto")
    assert active_backend_name() == original


def test_unknown_backend_rejected():
    with pytest.raises(ValueError, match="ENTROPART_BACKEND"):
        set_backend("fortran")


def test_env_override_selects_python():
    code = ("from entropart.backends import active_backend_name; "
            "print(active_backend_name())")
    env = dict(os.environ, ENTROPART_BACKEND="python")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True)
    assert out.stdout.strip() == "python"


def _kernel_inputs(rng):
    centers = np.array([[0.0, 0.0, 0.0], [0.0, 0.0, 1.4], [1.0, 0.8, 0.3]])
    radii = np.array([0.66, 0.66, 1.32])   # mixed: equal and 2:1 pairs
    pts = rng.normal(scale=2.0, size=(400, 3))
    return pts, centers, radii


@needs_compiled
def test_becke_kernel_parity(rng):
    pts, centers, radii = _kernel_inputs(rng)
    for stiffness in (1, 3, 5):
        for size_adjust in (False, True):
            a = reference.becke_weights_kernel(pts, centers, radii,
                                               stiffness, size_adjust)
            b = _fastkern.becke_weights_kernel(pts, centers, radii,
                                               stiffness, size_adjust)
            np.testing.assert_allclose(b, a, rtol=1e-13, atol=1e-15)


@needs_compiled
def test_primitive_kernel_parity(rng):
    # every supported angular type on one center
    nprim = 20
    centers = np.zeros((nprim, 3))
    centers[:, 2] = np.linspace(-0.5, 0.5, nprim)
    exps = rng.uniform(0.2, 3.0, size=nprim)
    norms = rng.uniform(0.5, 2.0, size=nprim)
    pows = np.array([[i % 4, (i // 2) % 3, i % 3] for i in range(nprim)],
                    dtype=np.int64)
    pts = rng.normal(scale=1.5, size=(300, 3))
    a = reference.eval_primitives(pts, centers, exps, norms, pows)
    b = _fastkern.eval_primitives(pts, centers, exps, norms, pows)
    np.testing.assert_allclose(b, a, rtol=1e-13, atol=1e-300)


@needs_compiled
def test_quad_form_parity(rng):
    n, npts = 12, 500
    c = rng.normal(size=(n, n))
    c = 0.5 * (c + c.T)
    g = rng.normal(size=(n, npts))
    a = reference.quad_form(c, g)
    b = _fastkern.quad_form(c, g)
    np.testing.assert_allclose(b, a, rtol=1e-12, atol=1e-14)
    rows_a = np.array([0, 1, 2, 3], dtype=np.int64)
    rows_b = np.array([4, 5, 6, 7, 8], dtype=np.int64)
    a = reference.quad_form_block(c, g, rows_a, rows_b)
    b = _fastkern.quad_form_block(c, g, rows_a, rows_b)
    np.testing.assert_allclose(b, a, rtol=1e-12, atol=1e-14)


@needs_compiled
def test_full_analysis_parity():
    from entropart import analyze_model
    try:
        set_backend("python")
        py = analyze_model("fci", 1.4, alphas=(2.0,))
        set_backend("compiled")
        cy = analyze_model("fci", 1.4, alphas=(2.0,))
    finally:
        set_backend("auto")
    a, b = py.analysis, cy.analysis
    assert b.shannon.density.total == pytest.approx(a.shannon.density.total,
                                                    abs=1e-10)
    assert b.shannon.density.nadd == pytest.approx(a.shannon.density.nadd,
                                                   abs=1e-10)
    assert b.renyi[2.0].totals.density == pytest.approx(
        a.renyi[2.0].totals.density, abs=1e-10)
    pa = a.renyi[2.0].net_terms.p_atom
    pb = b.renyi[2.0].net_terms.p_atom
    for key in pa:
        assert pb[key] == pytest.approx(pa[key], abs=1e-12)


def test_backend_has_required_kernels():
    mod = get_backend()
    for name in ("becke_weights_kernel", "eval_primitives", "quad_form",
                 "quad_form_block"):
        assert hasattr(mod, name)
