"""Minimal-basis two-electron models of H2: restricted HF, Heitler-London,
and the 2x2 full CI, all over one contracted s function per center.

Every model reduces to a symmetric pair-coefficient matrix C over the two
atomic functions, so the density is
    rho(r) = C_AA phi_A^2 + 2 C_AB phi_A phi_B + C_BB phi_B^2 ,
normalized to 2 electrons at every distance. The CI matrix elements are
assembled with Slater-Condon rules for the two closed-shell determinants
sigma_g^2 and sigma_u^2.
"""
from __future__ import annotations

import dataclasses
import math

import numpy as np

from .density import ContractedS, DensityMatrix, PairDensityField, PrimitiveBasis
from .molecule import Molecule

# STO-6G for hydrogen, zeta = 1.24 scaling (Basis Set Exchange).
# Coefficients multiply unit-normalized s primitives.
STO6G_H_EXPONENTS = (
    35.52322122, 6.513143725, 1.822142904,
    0.6259552659, 0.2430767471, 0.1001124280,
)
STO6G_H_COEFFICIENTS = (
    0.9163596281e-2, 0.4936149294e-1, 0.1685383049,
    0.3705627997, 0.4164915298, 0.1303340841,
)


def sto6g_hydrogen() -> ContractedS:
    return ContractedS(STO6G_H_EXPONENTS, STO6G_H_COEFFICIENTS)


def boys_f0(t: float) -> float:
    """Zeroth Boys function F0(t) = (1/2) sqrt(pi/t) erf(sqrt(t))."""
    if t < 0:
        raise ValueError("Boys argument must be nonnegative")
    if t < 1e-13:
        return 1.0 - t / 3.0
    st = math.sqrt(t)
    return 0.5 * math.sqrt(math.pi / t) * math.erf(st)


@dataclasses.dataclass(frozen=True)
class IntegralSet:
    """One- and two-electron integrals over {phi_A, phi_B} at distance R.

    Two-electron values use chemists' notation (ij|kl); only the four
    classes that survive permutational symmetry for two s functions are
    stored.
    """
    R: float
    S: float
    T_AA: float
    T_AB: float
    VA_AA: float
    VB_AA: float
    VA_AB: float
    VB_AB: float
    eri_aaaa: float  # (AA|AA)
    eri_aabb: float  # (AA|BB)
    eri_abab: float  # (AB|AB)
    eri_aaab: float  # (AA|AB)

    @property
    def h_AA(self) -> float:
        return self.T_AA + self.VA_AA + self.VB_AA

    @property
    def h_AB(self) -> float:
        return self.T_AB + self.VA_AB + self.VB_AB


def integral_engine(basis: ContractedS, R: float) -> IntegralSet:
    """All integrals needed by the models, for two copies of ``basis``
    placed R bohr apart. Closed forms for s Gaussians via F0."""
    if not isinstance(basis, ContractedS):
        raise TypeError("integral engine supports s-type contractions only")
    if R <= 0:
        raise ValueError("internuclear distance must be positive")
    exps = basis.exponents
    ncf = basis.ncoef
    A = np.zeros(3)
    B = np.array([0.0, 0.0, R])
    L = len(exps)

    def one_electron(Ri, Rj):
        s = t = va = vb = 0.0
        R2 = float(((Ri - Rj) ** 2).sum())
        for i in range(L):
            for j in range(L):
                a, b = exps[i], exps[j]
                p = a + b
                K = math.exp(-a * b / p * R2)
                base = ncf[i] * ncf[j] * (math.pi / p) ** 1.5 * K
                s += base
                t += base * a * b / p * (3.0 - 2.0 * a * b / p * R2)
                P = (a * Ri + b * Rj) / p
                pref = ncf[i] * ncf[j] * 2.0 * math.pi / p * K
                va -= pref * boys_f0(p * float(((P - A) ** 2).sum()))
                vb -= pref * boys_f0(p * float(((P - B) ** 2).sum()))
        return s, t, va, vb

    def eri(Ri, Rj, Rk, Rl):
        # (ij|kl) over the contraction; s-type Gaussian product theorem + F0
        out = 0.0
        for i in range(L):
            for j in range(L):
                p = exps[i] + exps[j]
                P = (exps[i] * Ri + exps[j] * Rj) / p
                Kij = math.exp(-exps[i] * exps[j] / p * float(((Ri - Rj) ** 2).sum()))
                cij = ncf[i] * ncf[j] * Kij
                for k in range(L):
                    for l in range(L):
                        q = exps[k] + exps[l]
                        Q = (exps[k] * Rk + exps[l] * Rl) / q
                        Kkl = math.exp(-exps[k] * exps[l] / q
                                       * float(((Rk - Rl) ** 2).sum()))
                        pref = 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))
                        out += (cij * ncf[k] * ncf[l] * Kkl * pref
                                * boys_f0(p * q / (p + q) * float(((P - Q) ** 2).sum())))
        return out

    S_AA, T_AA, VA_AA, VB_AA = one_electron(A, A)
    S_AB, T_AB, VA_AB, VB_AB = one_electron(A, B)
    del S_AA  # 1 by normalization; the AB value is the overlap of interest
    return IntegralSet(
        R=R, S=S_AB, T_AA=T_AA, T_AB=T_AB,
        VA_AA=VA_AA, VB_AA=VB_AA, VA_AB=VA_AB, VB_AB=VB_AB,
        eri_aaaa=eri(A, A, A, A), eri_aabb=eri(A, A, B, B),
        eri_abab=eri(A, B, A, B), eri_aaab=eri(A, A, A, B),
    )


METHODS = ("hf", "hl", "fci")


@dataclasses.dataclass(frozen=True)
class H2Model:
    method: str
    R: float
    basis: ContractedS
    S: float                      # overlap <phi_A|phi_B>
    ci: tuple                     # (c1, c2); (1, 0) for HF, None-like (1, 0) for HL
    pair_coefficients: np.ndarray  # 2x2 symmetric C over {phi_A, phi_B}
    energy: float                 # total electronic + nuclear repulsion, hartree
    integrals: IntegralSet

    def molecule(self) -> Molecule:
        return Molecule.h2(self.R)

    def field(self) -> PairDensityField:
        """Expand to the primitive-level density matrix."""
        mol = self.molecule()
        nprim = len(self.basis.exponents)
        basis = PrimitiveBasis(
            mol,
            center_index=np.repeat([0, 1], nprim),
            type_codes=np.ones(2 * nprim, dtype=int),
            exponents=np.tile(self.basis.exponents, 2),
        )
        cc = np.outer(self.basis.coefficients, self.basis.coefficients)
        dprim = np.kron(self.pair_coefficients, cc)
        return PairDensityField(basis, DensityMatrix(dprim, n_electrons=2.0))


def _ci_matrix(ints: IntegralSet):
    """2x2 CI matrix in the {sigma_g^2, sigma_u^2} basis (Slater-Condon)."""
    S = ints.S
    h_gg = (ints.h_AA + ints.h_AB) / (1.0 + S)
    h_uu = (ints.h_AA - ints.h_AB) / (1.0 - S)
    J_gg = (ints.eri_aaaa + ints.eri_aabb + 4.0 * ints.eri_aaab
            + 2.0 * ints.eri_abab) / (2.0 * (1.0 + S) ** 2)
    J_uu = (ints.eri_aaaa + ints.eri_aabb - 4.0 * ints.eri_aaab
            + 2.0 * ints.eri_abab) / (2.0 * (1.0 - S) ** 2)
    K_gu = (ints.eri_aaaa - ints.eri_aabb) / (2.0 * (1.0 - S * S))
    return 2.0 * h_gg + J_gg, 2.0 * h_uu + J_uu, K_gu


def hf_model(R: float, basis: ContractedS | None = None) -> H2Model:
    """Restricted HF: both electrons in sigma_g."""
    basis = basis or sto6g_hydrogen()
    ints = integral_engine(basis, R)
    S = ints.S
    C = np.full((2, 2), 1.0 / (1.0 + S))
    a, _, _ = _ci_matrix(ints)
    return H2Model("hf", R, basis, S, (1.0, 0.0), C, a + 1.0 / R, ints)


def hl_model(R: float, basis: ContractedS | None = None) -> H2Model:
    """Heitler-London covalent wavefunction."""
    basis = basis or sto6g_hydrogen()
    ints = integral_engine(basis, R)
    S = ints.S
    C = np.array([[1.0, S], [S, 1.0]]) / (1.0 + S * S)
    E = (2.0 * ints.h_AA + ints.eri_aabb + 2.0 * S * ints.h_AB
         + ints.eri_abab) / (1.0 + S * S) + 1.0 / R
    return H2Model("hl", R, basis, S, (1.0, 0.0), C, E, ints)


def fci_model(R: float, basis: ContractedS | None = None,
              ci_override: tuple | None = None) -> H2Model:
    """Full CI in the minimal basis: c1 sigma_g^2 + c2 sigma_u^2.

    ``ci_override`` forces the CI vector; (1, 0) reproduces the HF density.
    """
    basis = basis or sto6g_hydrogen()
    ints = integral_engine(basis, R)
    S = ints.S
    a, b, c = _ci_matrix(ints)
    if not (math.isfinite(a) and math.isfinite(b) and math.isfinite(c)):
        raise ValueError(f"CI matrix non-finite at R={R}")
    if ci_override is not None:
        c1, c2 = ci_override
        lam = (a * c1 * c1 + b * c2 * c2 + 2.0 * c * c1 * c2)
    else:
        disc = math.sqrt(0.25 * (a - b) ** 2 + c * c)
        lam = 0.5 * (a + b) - disc
        if disc == 0.0:
            # exact degeneracy: equal-weight mixture
            c1, c2 = 1.0 / math.sqrt(2.0), -1.0 / math.sqrt(2.0)
        else:
            v = np.array([c, lam - a])
            n = np.linalg.norm(v)
            if n == 0.0:  # c == 0 and lam == a: ground state is pure sigma_g^2
                v = np.array([1.0, 0.0])
                n = 1.0
            v /= n
            if v[0] < 0:
                v = -v
            c1, c2 = float(v[0]), float(v[1])
    C_AA = c1 * c1 / (1.0 + S) + c2 * c2 / (1.0 - S)
    C_AB = c1 * c1 / (1.0 + S) - c2 * c2 / (1.0 - S)
    C = np.array([[C_AA, C_AB], [C_AB, C_AA]])
    return H2Model("fci", R, basis, S, (c1, c2), C, lam + 1.0 / R, ints)


def natural_orbitals(model: H2Model):
    """Natural orbitals of the model density over the primitive basis.

    Returns ((occ_g, e_g, coeffs_g), (occ_u, e_u, coeffs_u)) with
    coefficients over the 2*nprim normalized primitives of model.field().
    Both gerade and ungerade orbitals are returned even when one carries
    zero occupation. The energy entries are the one-electron expectation
    values; no density quantity depends on them.
    """
    S = model.S
    C = model.pair_coefficients
    occ_g = (C[0, 0] + C[0, 1]) * (1.0 + S)
    occ_u = (C[0, 0] - C[0, 1]) * (1.0 - S)
    c = model.basis.coefficients
    g = np.concatenate([c, c]) / math.sqrt(2.0 * (1.0 + S))
    u = np.concatenate([c, -c]) / math.sqrt(2.0 * (1.0 - S))
    ints = model.integrals
    e_g = (ints.h_AA + ints.h_AB) / (1.0 + S)
    e_u = (ints.h_AA - ints.h_AB) / (1.0 - S)
    return ((occ_g, e_g, g), (occ_u, e_u, u))


def build_model(method: str, R: float, basis: ContractedS | None = None) -> H2Model:
    try:
        builder = {"hf": hf_model, "hl": hl_model, "fci": fci_model}[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}") from None
    return builder(R, basis)


def hydrogen_atom_energy(basis: ContractedS | None = None) -> float:
    """Energy of one electron in the contracted function on a unit charge."""
    basis = basis or sto6g_hydrogen()
    exps = basis.exponents
    ncf = basis.ncoef
    E = 0.0
    for i in range(len(exps)):
        for j in range(len(exps)):
            a, b = exps[i], exps[j]
            p = a + b
            T = ncf[i] * ncf[j] * a * b / p * 3.0 * (math.pi / p) ** 1.5
            V = -ncf[i] * ncf[j] * 2.0 * math.pi / p  # F0(0) = 1
            E += T + V
    return E


def atom_field(basis: ContractedS | None = None) -> PairDensityField:
    """Isolated one-electron atom: N = 1, rho = phi^2."""
    basis = basis or sto6g_hydrogen()
    mol = Molecule([("H", (0.0, 0.0, 0.0))])
    nprim = len(basis.exponents)
    pb = PrimitiveBasis(mol, center_index=np.zeros(nprim, dtype=int),
                        type_codes=np.ones(nprim, dtype=int),
                        exponents=basis.exponents)
    dprim = np.outer(basis.coefficients, basis.coefficients)
    return PairDensityField(pb, DensityMatrix(dprim, n_electrons=1.0))
