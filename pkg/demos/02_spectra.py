"""Adjacency spectra, with exact multiplicities backing the floating values.

Run: python demos/02_spectra.py
"""

from __future__ import annotations

from coprime_lab.graph import build
from coprime_lab.numtheory import build_prime_tables, dominating_primes, nullity_lower_bound
from coprime_lab.spectral import SymmetricIntMatrix, eigenvalues, exact_eigen_multiplicity, multiplicity_near


def main() -> None:
    tables = build_prime_tables(60)
    print(" n  mult(0) bound  mult(-1) |D|  radius")
    for n in range(4, 31):
        a = SymmetricIntMatrix.adjacency(build(n))
        s = eigenvalues(a)
        z, m = exact_eigen_multiplicity(a, 0), exact_eigen_multiplicity(a, -1)
        # the Jacobi values must cluster the same way the exact ranks say
        assert z == multiplicity_near(s, 0.0) and m == multiplicity_near(s, -1.0)
        print(
            f"{n:2d}  {z:7d} {nullity_lower_bound(tables, n):5d}"
            f"  {m:8d} {len(dominating_primes(tables, n)):3d}  {s.values[-1]:.4f}"
        )

    # Rows of 2 and 4 coincide, so A is singular from n = 4 on.
    a12 = SymmetricIntMatrix.adjacency(build(12))
    print("TCG_12 spectrum:", ", ".join(f"{round(v, 2) + 0.0:.2f}" for v in eigenvalues(a12).values))


if __name__ == "__main__":
    main()
