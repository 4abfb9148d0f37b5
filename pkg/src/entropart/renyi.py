"""Renyi entropies of a density and their atom-pair decomposition.

All entropies are in nats. The order-2 entropy admits a full pair-pair
partition with weights over ordered atom 4-tuples; every order admits
atomic net and intra-atomic nonadditive terms.
"""

import dataclasses
import math

import numpy as np

from .density import NEGATIVE_CLAMP
from .quadrature import integrate
from .shannon import safe_log

# orders this close to 1 are rejected; the Shannon module is the limit
ALPHA_ONE_GUARD = 1e-9


def _validate_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not math.isfinite(alpha) or alpha <= 0:
        raise ValueError("order alpha must be a positive finite number")
    if abs(alpha - 1.0) <= ALPHA_ONE_GUARD:
        raise ValueError(
            "order alpha is numerically 1; use the Shannon entropy instead")
    return alpha


def _alpha_power(x, alpha: float, name: str):
    """x**alpha with the sign rules used throughout the decomposition.

    Integer orders keep the sign of negative lobes. Fractional orders are
    undefined for negative values, so anything below the clamp threshold
    raises and tiny negatives are treated as zero.
    """
    x = np.asarray(x, dtype=float)
    if float(alpha).is_integer():
        return x ** int(round(alpha))
    if (x < NEGATIVE_CLAMP).any():
        raise ValueError(
            f"{name} reaches values below {NEGATIVE_CLAMP}; a fractional "
            f"order alpha={alpha} is undefined there")
    return np.maximum(x, 0.0) ** alpha


@dataclasses.dataclass(frozen=True)
class RenyiTotals:
    """Total Renyi entropy of the density and of its shape function."""

    alpha: float
    moment: float    # integral of rho**alpha
    density: float
    shape: float


def renyi_total(rho, weights, alpha: float, n_grid: float) -> RenyiTotals:
    """Order-alpha Renyi entropy of a density sampled on a grid.

    The shape value is computed from sigma = rho / n_grid pointwise,
    where n_grid is the grid integral of the density.
    """
    alpha = _validate_alpha(alpha)
    rho = np.asarray(rho, dtype=float)
    moment = integrate(_alpha_power(rho, alpha, "the density"), weights=weights)
    if moment <= 0 or not math.isfinite(moment):
        raise ValueError(f"integral of rho**alpha is {moment!r}; "
                         "cannot take its logarithm")
    sigma_moment = integrate(
        _alpha_power(rho / n_grid, alpha, "the shape function"), weights=weights)
    pref = 1.0 / (1.0 - alpha)
    return RenyiTotals(alpha=alpha, moment=moment,
                       density=pref * math.log(moment),
                       shape=pref * math.log(sigma_moment))


@dataclasses.dataclass(frozen=True)
class Renyi2Partition:
    """Order-2 partition over ordered atom 4-tuples.

    p4 maps (a, b, c, d) to the fraction of the rho**2 integral carried
    by the pair-pair product rho^ab rho^cd; the fractions sum to 1.
    """

    p4: dict
    add: float
    nadd: float
    total: float

    @property
    def closure_residual(self) -> float:
        return self.add - self.nadd - self.total


def renyi2_partition(pairs, weights) -> Renyi2Partition:
    """Pair-pair partition of the order-2 entropy from pair-term arrays."""
    keys = sorted(pairs.keys())
    index = {k: i for i, k in enumerate(keys)}
    nat = max(b for _, b in keys) + 1
    gram = np.empty((len(keys), len(keys)))
    for i, ki in enumerate(keys):
        for j, kj in enumerate(keys[i:], start=i):
            gram[i, j] = gram[j, i] = integrate(
                pairs[ki] * pairs[kj], weights=weights)

    def unique(a, b):
        return index[(a, b) if a <= b else (b, a)]

    tuples = [(a, b, c, d)
              for a in range(nat) for b in range(nat)
              for c in range(nat) for d in range(nat)]
    integrals = {t: gram[unique(t[0], t[1]), unique(t[2], t[3])]
                 for t in tuples}
    norm = math.fsum(integrals.values())
    if norm <= 0 or not math.isfinite(norm):
        raise ValueError(f"ordered pair-pair integrals sum to {norm!r}")
    p4 = {t: v / norm for t, v in integrals.items()}

    def log0(v):
        return math.log(abs(v)) if v != 0 else 0.0

    add = -math.fsum(p4[t] * log0(integrals[t]) for t in tuples)
    nadd = -math.fsum(p4[t] * log0(p4[t]) for t in tuples)
    return Renyi2Partition(p4=p4, add=add, nadd=nadd, total=-math.log(norm))


@dataclasses.dataclass(frozen=True)
class RenyiNetTerms:
    """Atomic net and intra-atomic nonadditive terms at one order."""

    alpha: float
    p_atom: dict
    net: float
    nadd_intra: float


def renyi_net_nadd_intra(rho, pairs, weights, alpha: float) -> RenyiNetTerms:
    """Atomic-density contributions to the order-alpha entropy.

    p_atom[A] is the share of the rho**alpha integral carried by the
    atomic diagonal term (rho^AA)**alpha.
    """
    alpha = _validate_alpha(alpha)
    moment = integrate(_alpha_power(rho, alpha, "the density"), weights=weights)
    if moment <= 0 or not math.isfinite(moment):
        raise ValueError(f"integral of rho**alpha is {moment!r}; "
                         "cannot take its logarithm")
    pref = 1.0 / (1.0 - alpha)
    p_atom = {}
    atom_moments = {}
    for (a, b), x in sorted(pairs.items()):
        if a != b:
            continue
        m = integrate(_alpha_power(x, alpha, f"the net density of atom {a}"),
                      weights=weights)
        atom_moments[a] = m
        p_atom[a] = m / moment

    def log0(v):
        return math.log(abs(v)) if v != 0 else 0.0

    net = pref * math.fsum(p_atom[a] * log0(atom_moments[a]) for a in p_atom)
    nadd_intra = pref * math.fsum(p_atom[a] * log0(p_atom[a]) for a in p_atom)
    return RenyiNetTerms(alpha=alpha, p_atom=p_atom, net=net,
                         nadd_intra=nadd_intra)


@dataclasses.dataclass(frozen=True)
class RenyiDecomposition:
    """All order-alpha results for one field on one grid."""

    alpha: float
    totals: RenyiTotals
    net_terms: RenyiNetTerms
    pair_partition: Renyi2Partition | None


def renyi_decompose(rho, pairs, weights, alpha: float,
                    n_grid: float) -> RenyiDecomposition:
    """Full order-alpha analysis from one field evaluation.

    The ordered pair-pair partition exists only at alpha = 2; for other
    orders pair_partition is None.
    """
    alpha = _validate_alpha(alpha)
    totals = renyi_total(rho, weights, alpha, n_grid)
    net_terms = renyi_net_nadd_intra(rho, pairs, weights, alpha)
    partition = renyi2_partition(pairs, weights) if alpha == 2.0 else None
    return RenyiDecomposition(alpha=alpha, totals=totals,
                              net_terms=net_terms, pair_partition=partition)


def asymptotic_renyi_reference(alpha, atom_entropies, atom_moments,
                               electron_counts):
    """Infinite-separation Renyi entropies from isolated-fragment data.

    atom_entropies holds each fragment's order-alpha entropy, atom_moments
    the fragment integrals of rho_A**alpha (which fix the mixing fractions),
    and electron_counts the fragment electron numbers. Returns the pair
    (density_limit, shape_limit).
    """
    alpha = _validate_alpha(alpha)
    s_frag = [float(s) for s in atom_entropies]
    moments = [float(m) for m in atom_moments]
    counts = [float(n) for n in electron_counts]
    if not (len(s_frag) == len(moments) == len(counts)):
        raise ValueError("fragment entropies, moments, and electron counts "
                         "must have matching lengths")
    if any(m <= 0 for m in moments):
        raise ValueError("fragment moments must be positive")
    if any(n <= 0 for n in counts):
        raise ValueError("fragment electron counts must be positive")
    total_moment = math.fsum(moments)
    n_total = math.fsum(counts)
    fractions = [m / total_moment for m in moments]
    pref = 1.0 / (1.0 - alpha)
    density_limit = math.fsum(p * s for p, s in zip(fractions, s_frag)) \
        - pref * math.fsum(p * math.log(p) for p in fractions)
    shape_limit = density_limit + (alpha * pref) * math.fsum(
        p * math.log(n / n_total) for p, n in zip(fractions, counts))
    return density_limit, shape_limit
