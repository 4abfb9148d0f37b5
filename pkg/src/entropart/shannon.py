"""Shannon entropy of a density and its atom-pair decomposition.

All entropies are in nats. The decomposition splits the total into
atomic net terms, interatomic overlap terms, and a nonadditive part,
with the additive part equal to net + overlap by construction.
"""

import dataclasses
import math

import numpy as np

from .density import ClampDiagnostics, PairDensityField
from .quadrature import MolecularGrid, integrate

# the grid must reproduce the electron count this well before entropies
# are trusted at all
NORMALIZATION_TOLERANCE = 1e-4


def safe_log(x):
    """log|x| elementwise, with the value 0 assigned at x = 0."""
    x = np.asarray(x, dtype=float)
    out = np.zeros(x.shape)
    nz = x != 0
    out[nz] = np.log(np.abs(x[nz]))
    return out


@dataclasses.dataclass(frozen=True)
class ShannonPointTerms:
    """Integrands of the decomposition, evaluated per point."""

    total: np.ndarray   # -rho log rho
    add: np.ndarray     # additive integrand, summed over ordered pairs
    nadd: np.ndarray    # nonadditive integrand, summed over ordered pairs


def shannon_point_terms(rho, pairs) -> ShannonPointTerms:
    """Pointwise integrands from a (rho, pairs) field evaluation.

    The additive and nonadditive integrands close pointwise:
    add - nadd = total wherever rho > 0.
    """
    rho = np.asarray(rho, dtype=float)
    total = -rho * safe_log(rho)
    add = np.zeros(rho.shape)
    nadd = np.zeros(rho.shape)
    denom = np.where(rho > 0, rho, 1.0)
    for (a, b), x in pairs.items():
        mult = 1.0 if a == b else 2.0
        q = np.where(rho > 0, x / denom, 0.0)
        add += mult * (-x * safe_log(x))
        nadd += mult * (-x * safe_log(q))
    return ShannonPointTerms(total=total, add=add, nadd=nadd)


@dataclasses.dataclass(frozen=True)
class ShannonTerms:
    """One complete Shannon decomposition (density or shape variant)."""

    total: float
    add: float
    nadd: float
    net: dict
    overlap: dict

    @property
    def closure_residual(self) -> float:
        """add - nadd - total; small when the pair partition is consistent."""
        return self.add - self.nadd - self.total


def _decompose_arrays(rho, pairs, weights) -> ShannonTerms:
    log_rho = safe_log(rho)
    total = -integrate(rho * log_rho, weights=weights)
    denom = np.where(rho > 0, rho, 1.0)
    net = {}
    overlap = {}
    nadd_parts = []
    for (a, b), x in sorted(pairs.items()):
        log_x = safe_log(x)
        q = np.where(rho > 0, x / denom, 0.0)
        one_sided = -integrate(x * log_x, weights=weights)
        nadd_ab = -integrate(x * safe_log(q), weights=weights)
        if a == b:
            net[a] = one_sided
            nadd_parts.append(nadd_ab)
        else:
            overlap[(a, b)] = 2.0 * one_sided
            nadd_parts.append(2.0 * nadd_ab)
    add = math.fsum(list(net.values()) + list(overlap.values()))
    return ShannonTerms(total=total, add=add, nadd=math.fsum(nadd_parts),
                        net=net, overlap=overlap)


@dataclasses.dataclass(frozen=True)
class ShannonDecomposition:
    """Density and shape-function Shannon decompositions on one grid."""

    n_declared: float
    n_grid: float
    density: ShannonTerms
    shape: ShannonTerms
    diagnostics: ClampDiagnostics

    @property
    def scaling_residual(self) -> float:
        """S_rho - (N S_sigma - N ln N) with N the grid electron count."""
        n = self.n_grid
        return self.density.total - (n * self.shape.total - n * math.log(n))


def check_normalization(n_grid: float, n_declared: float) -> None:
    """Reject grids that fail to reproduce the electron count."""
    if abs(n_grid - n_declared) > NORMALIZATION_TOLERANCE:
        raise ValueError(
            f"grid integrates the density to {n_grid!r}, expected "
            f"{n_declared!r}; the quadrature is inadequate for this system")


def shannon_from_arrays(rho, pairs, weights, n_declared: float,
                        diagnostics: ClampDiagnostics) -> ShannonDecomposition:
    """Decomposition from an already evaluated (rho, pairs) field.

    The shape-function variant divides the density and every pair term by
    the grid electron count pointwise before taking logarithms, so the
    scaling identity between the two totals holds to rounding.
    """
    n_grid = integrate(rho, weights=weights)
    check_normalization(n_grid, n_declared)
    density = _decompose_arrays(rho, pairs, weights)
    sigma = rho / n_grid
    sigma_pairs = {k: v / n_grid for k, v in pairs.items()}
    shape = _decompose_arrays(sigma, sigma_pairs, weights)
    return ShannonDecomposition(
        n_declared=n_declared, n_grid=n_grid,
        density=density, shape=shape, diagnostics=diagnostics)


def shannon_decompose(field: PairDensityField, grid: MolecularGrid,
                      block_size: int = 32768) -> ShannonDecomposition:
    """Decompose the Shannon entropy of a field over a molecular grid."""
    rho, pairs = field.pair_fields(grid.points, block_size=block_size)
    return shannon_from_arrays(rho, pairs, grid.weights,
                               field.n_electrons, field.diagnostics)


def asymptotic_shannon_reference(atom_entropies, electron_counts):
    """Infinite-separation Shannon entropies from isolated-fragment data.

    atom_entropies holds each fragment's density entropy S^A and
    electron_counts its electron number N_A. Returns the pair
    (density_limit, shape_limit): the density entropy tends to the plain
    sum of fragment entropies, while the shape entropy acquires mixing
    terms in the electron fractions N_A / N.
    """
    s_frag = [float(s) for s in atom_entropies]
    counts = [float(n) for n in electron_counts]
    if len(s_frag) != len(counts):
        raise ValueError("one electron count per fragment entropy is required")
    if any(n <= 0 for n in counts):
        raise ValueError("fragment electron counts must be positive")
    n_total = math.fsum(counts)
    density_limit = math.fsum(s_frag)
    # fragment shape entropies follow from the exact scaling identity
    shape_frag = [(s + n * math.log(n)) / n for s, n in zip(s_frag, counts)]
    fractions = [n / n_total for n in counts]
    shape_limit = math.fsum(f * s for f, s in zip(fractions, shape_frag)) \
        - math.fsum(f * math.log(f) for f in fractions)
    return density_limit, shape_limit
