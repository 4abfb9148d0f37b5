"""Shared fixtures.

Grid construction and field evaluation dominate test runtime, so analyses
are cached per (method, separation, grid, alphas) for the whole session.
"""
import numpy as np
import pytest

from entropart import (AtomicGridSpec, analyze_model, hydrogen_reference,
                       hl_model, hf_model, fci_model, natural_orbitals)
from entropart.wfnio import build_document, write_wfn

STANDARD_ALPHAS = (0.5, 2.0, 3.0)


@pytest.fixture(scope="session")
def model_analysis():
    """Memoized analyze_model; default grid, standard alpha set."""
    cache = {}

    def get(method, separation, alphas=STANDARD_ALPHAS, spec=None):
        key = (method, separation, tuple(alphas), spec)
        if key not in cache:
            cache[key] = analyze_model(method, separation, spec=spec,
                                       alphas=alphas)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def atom_ref():
    return hydrogen_reference(alphas=STANDARD_ALPHAS)


@pytest.fixture(scope="session")
def reference_spec():
    # densest supported grid; used where stated tolerances demand it
    return AtomicGridSpec(n_radial=1000, lebedev_order=434)


def _single_gaussian_document():
    """One He-like center, one s primitive, one doubly occupied orbital.

    With a single normalized primitive g and MO coefficient 1 the density
    is 2 g(r)^2, which has a closed-form Shannon entropy.
    """
    from entropart.density import PrimitiveBasis
    from entropart.molecule import Molecule

    mol = Molecule([("He", (0.0, 0.0, 0.0))])
    basis = PrimitiveBasis(mol, center_index=[0], type_codes=[1],
                           exponents=[0.8])
    return build_document(mol, basis, [(2.0, -0.5, [1.0])],
                          title="single gaussian")


def _h2_document(method, separation=1.4):
    model = {"hf": hf_model, "hl": hl_model, "fci": fci_model}[method](separation)
    mol = model.molecule()
    basis = model.field().basis
    mos = natural_orbitals(model)
    doc = build_document(mol, basis, mos, title=f"H2 {method} R={separation}",
                         total_energy=model.energy, virial=2.0)
    return doc


@pytest.fixture(scope="session")
def wfn_fixtures(tmp_path_factory):
    """Three wavefunction files written by the package's own serializer."""
    root = tmp_path_factory.mktemp("wfn")
    docs = {
        "gaussian": _single_gaussian_document(),
        "h2_hf": _h2_document("hf"),
        "h2_fci": _h2_document("fci"),
    }
    paths = {}
    for name, doc in docs.items():
        p = root / f"{name}.wfn"
        p.write_text(write_wfn(doc))
        paths[name] = p
    return {"paths": paths, "docs": docs}


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
