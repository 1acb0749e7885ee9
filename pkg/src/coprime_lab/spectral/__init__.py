"""Adjacency spectra: Jacobi eigenvalues and exact multiplicities via modular rank."""

from .jacobi import JacobiConvergenceError, jacobi_eigenvalues
from .matrix import MAX_ORDER, SymmetricIntMatrix
from .modrank import (
    DEFAULT_SEED,
    exact_eigen_multiplicity,
    exact_rank,
    identical_rows,
    is_singular,
    random_primes,
    rank_mod_p,
)
from .spectrum import (
    CLUSTER_TOL,
    Spectrum,
    cluster,
    eigenvalues,
    multiplicity_near,
    spectra_to_csv,
    spectral_radius,
)

__all__ = [
    "CLUSTER_TOL",
    "DEFAULT_SEED",
    "JacobiConvergenceError",
    "MAX_ORDER",
    "Spectrum",
    "SymmetricIntMatrix",
    "cluster",
    "eigenvalues",
    "exact_eigen_multiplicity",
    "exact_rank",
    "identical_rows",
    "is_singular",
    "jacobi_eigenvalues",
    "multiplicity_near",
    "random_primes",
    "rank_mod_p",
    "spectra_to_csv",
    "spectral_radius",
]
