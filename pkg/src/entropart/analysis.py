"""One-stop analysis: evaluate a field once, decompose everything.

Couples the pair partition to the Shannon and Renyi modules, and builds
the isolated-atom reference data used by infinite-separation checks.
"""

import dataclasses
import math

from .density import PairDensityField
from .models import atom_field, build_model, hydrogen_atom_energy
from .quadrature import AtomicGridSpec, MolecularGrid, build_molecular_grid, integrate
from .renyi import (RenyiDecomposition, RenyiTotals, asymptotic_renyi_reference,
                    renyi_decompose, renyi_total)
from .shannon import (ShannonDecomposition, asymptotic_shannon_reference,
                      check_normalization, safe_log, shannon_from_arrays)

# row-level identity tolerances used by reporting tools
CLOSURE_TOLERANCE = 1e-8    # add - nadd = total, both entropy families
SCALING_TOLERANCE = 1e-10   # density/shape total relations
LIMIT_TOLERANCE = 1e-4      # infinite-separation references


@dataclasses.dataclass(frozen=True)
class FieldAnalysis:
    """Shannon and Renyi decompositions of one field on one grid."""

    n_declared: float
    n_grid: float
    shannon: ShannonDecomposition
    renyi: dict

    def identity_residuals(self) -> dict:
        """Internal consistency residuals; all should be near zero."""
        res = {
            "shannon_closure": self.shannon.density.closure_residual,
            "shannon_closure_shape": self.shannon.shape.closure_residual,
            "shannon_scaling": self.shannon.scaling_residual,
        }
        n = self.n_grid
        for alpha, dec in self.renyi.items():
            label = f"{alpha:g}"
            expected_gap = (alpha / (alpha - 1.0)) * math.log(n)
            res[f"renyi{label}_scaling"] = (
                dec.totals.shape - dec.totals.density - expected_gap)
            if dec.pair_partition is not None:
                res[f"renyi{label}_closure"] = dec.pair_partition.closure_residual
                res[f"renyi{label}_p4_sum"] = (
                    math.fsum(dec.pair_partition.p4.values()) - 1.0)
        return res

    def identities_ok(self, closure_tol: float = CLOSURE_TOLERANCE,
                      scaling_tol: float = SCALING_TOLERANCE) -> bool:
        for name, value in self.identity_residuals().items():
            tol = closure_tol if "closure" in name else scaling_tol
            if not (abs(value) <= tol):
                return False
        return True


def analyze_field(field: PairDensityField, grid: MolecularGrid,
                  alphas=(), block_size: int = 32768) -> FieldAnalysis:
    """Evaluate the field once and run every requested decomposition."""
    rho, pairs = field.pair_fields(grid.points, block_size=block_size)
    n_grid = integrate(rho, weights=grid.weights)
    check_normalization(n_grid, field.n_electrons)
    shannon = shannon_from_arrays(rho, pairs, grid.weights,
                                  field.n_electrons, field.diagnostics)
    renyi = {float(a): renyi_decompose(rho, pairs, grid.weights, float(a), n_grid)
             for a in alphas}
    return FieldAnalysis(n_declared=field.n_electrons, n_grid=n_grid,
                         shannon=shannon, renyi=renyi)


@dataclasses.dataclass(frozen=True)
class ModelAnalysis:
    """A built-in dissociation model analyzed at one separation."""

    method: str
    separation: float
    energy: float
    ci: tuple
    analysis: FieldAnalysis


def analyze_model(method: str, separation: float, spec: AtomicGridSpec = None,
                  alphas=()) -> ModelAnalysis:
    model = build_model(method, separation)
    grid = build_molecular_grid(model.molecule(), spec)
    analysis = analyze_field(model.field(), grid, alphas=alphas)
    return ModelAnalysis(method=method, separation=separation,
                         energy=model.energy, ci=model.ci, analysis=analysis)


@dataclasses.dataclass(frozen=True)
class AtomReference:
    """Isolated-atom constants entering the infinite-separation limits.

    For a one-electron atom the density and shape entropies coincide and
    every molecular limit below is a function of these numbers alone.
    """

    energy: float
    n_grid: float
    shannon: float
    renyi: dict  # alpha -> RenyiTotals

    def shannon_limits(self, n_atoms: int = 2):
        """(density, shape) Shannon limits for n_atoms well-separated copies."""
        return asymptotic_shannon_reference([self.shannon] * n_atoms,
                                            [1.0] * n_atoms)

    def renyi_limits(self, alpha: float, n_atoms: int = 2):
        """(density, shape) order-alpha limits for n_atoms separated copies."""
        totals = self.renyi[float(alpha)]
        return asymptotic_renyi_reference(
            alpha, [totals.density] * n_atoms, [totals.moment] * n_atoms,
            [1.0] * n_atoms)


def hydrogen_reference(spec: AtomicGridSpec = None, alphas=(),
                       basis=None) -> AtomReference:
    """Entropies and energy of one ground-state hydrogen atom.

    Uses the built-in six-Gaussian s contraction unless another basis
    is supplied.
    """
    field = atom_field(basis)
    grid = build_molecular_grid(field.molecule, spec)
    rho = field.density(grid.points)
    n_grid = integrate(rho, weights=grid.weights)
    check_normalization(n_grid, 1.0)
    shannon = -integrate(rho * safe_log(rho), weights=grid.weights)
    renyi = {float(a): renyi_total(rho, grid.weights, float(a), n_grid)
             for a in alphas}
    return AtomReference(energy=hydrogen_atom_energy(basis), n_grid=n_grid,
                         shannon=shannon, renyi=renyi)
