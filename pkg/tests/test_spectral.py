import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from coprime_lab.graph import build
from coprime_lab.spectral import (
    JacobiConvergenceError,
    SymmetricIntMatrix,
    cluster,
    eigenvalues,
    exact_eigen_multiplicity,
    exact_rank,
    identical_rows,
    is_singular,
    jacobi_eigenvalues,
    multiplicity_near,
    random_primes,
    rank_mod_p,
    spectra_to_csv,
    spectral_radius,
)


def adj(n):
    return SymmetricIntMatrix.adjacency(build(n))


def _sym_int(a):
    return np.triu(a) + np.triu(a, 1).T


def test_matrix_validation():
    with pytest.raises(ValueError):
        SymmetricIntMatrix([[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        SymmetricIntMatrix([[0, 1, 0]])
    with pytest.raises(ValueError):
        SymmetricIntMatrix(np.zeros((5, 5), dtype=int), max_order=4)
    m = adj(4)
    assert m.is_adjacency() and m.order == 4
    with pytest.raises(ValueError):
        m.entries[0, 1] = 5


def test_shifted():
    m = adj(3).shifted(-1)
    assert np.array_equal(m.entries, np.ones((3, 3), dtype=int))


@pytest.mark.parametrize("n", [1, 2, 3, 7, 15, 40, 101])
def test_jacobi_matches_numpy(n):
    a = adj(n).entries
    vals, residual, _ = jacobi_eigenvalues(a)
    assert np.allclose(vals, np.linalg.eigvalsh(a.astype(float)), atol=1e-9)
    assert residual < 1e-12 * max(np.linalg.norm(a), 1)
    # trace and Frobenius invariants
    assert abs(vals.sum()) < 1e-9
    assert np.isclose((vals**2).sum(), 2 * build(n).edge_count)


@settings(max_examples=40, deadline=None)
@given(arrays(np.int64, st.tuples(st.integers(1, 12), st.just(12)).map(lambda s: (s[0], s[0])), elements=st.integers(-5, 5)))
def test_jacobi_random_symmetric(a):
    a = _sym_int(a)
    vals, _, _ = jacobi_eigenvalues(a)
    assert np.allclose(vals, np.linalg.eigvalsh(a.astype(float)), atol=1e-8)


def test_jacobi_nonconvergence_reported():
    with pytest.raises(JacobiConvergenceError):
        jacobi_eigenvalues(adj(40).entries, max_sweeps=1)


def test_tcg3_eigenvalues():
    s = eigenvalues(adj(3))
    assert s.clusters[0][1] == 2 and abs(s.clusters[0][0] + 1) < 1e-12
    assert abs(spectral_radius(s) - 2) < 1e-12


def test_cluster():
    assert cluster([0.0, 1e-7, 1.0, 1.0 + 5e-7, 1.0 + 1e-6, 3.0]) == ((5e-8, 2), (pytest.approx(1.0 + 5e-7), 3), (3.0, 1))


def test_multiplicity_near():
    s = eigenvalues(adj(12))
    assert multiplicity_near(s, 0.0) == 4
    assert multiplicity_near(s, -1.0) == 2


def test_random_primes_reproducible():
    ps = random_primes(7)
    assert ps == random_primes(7) and len(set(ps)) == 3
    assert all(2**60 < p < 2**61 and sympy.isprime(p) for p in ps)
    assert random_primes(8) != ps


@pytest.mark.parametrize("n,rank", [(12, 8), (3, 3), (4, 3), (1, 0), (2, 2)])
def test_exact_rank_examples(n, rank):
    assert exact_rank(adj(n)) == rank


def test_exact_rank_shifted_tcg11():
    assert exact_rank(adj(11).shifted(-1)) == 9


def test_det_tcg3():
    assert round(np.linalg.det(adj(3).entries)) == 2 == sympy.Matrix(adj(3).entries.tolist()).det()


def test_exact_rank_matches_sympy_on_coprime_graphs():
    for n in range(1, 31):
        m = adj(n)
        for lam in (0, -1):
            ref = sympy.Matrix(m.shifted(lam).entries.tolist()).rank()
            assert m.order - exact_eigen_multiplicity(m, lam) == ref


@settings(max_examples=50, deadline=None)
@given(arrays(np.int64, st.integers(1, 8).map(lambda k: (k, k)), elements=st.integers(-3, 3)))
def test_exact_rank_matches_sympy_random(a):
    assert exact_rank(a) == sympy.Matrix(a.tolist()).rank()


def test_rank_mod_small_prime_can_drop():
    # det = 3; rank over GF(3) drops, over a large prime it does not
    a = np.array([[2, 1], [1, 2]])
    assert rank_mod_p(a, 3) == 1 and exact_rank(a) == 2


def test_exact_multiplicity_requires_integer():
    with pytest.raises(ValueError):
        exact_eigen_multiplicity(adj(4), 0.5)


def test_identical_rows_and_singularity():
    m = adj(4)
    assert identical_rows(m, 1, 3)  # vertices 2 and 4
    assert not identical_rows(m, 0, 1)
    assert is_singular(m) and not is_singular(adj(3))


def test_interlacing_consecutive():
    prev = np.array(eigenvalues(adj(2)).values)
    for n in range(3, 40):
        cur = np.array(eigenvalues(adj(n)).values)
        assert np.all(cur[:-1] <= prev + 1e-9) and np.all(prev <= cur[1:] + 1e-9)
        prev = cur


def test_spectral_radius_increasing():
    radii = [spectral_radius(eigenvalues(adj(n))) for n in range(2, 60)]
    assert all(a <= b + 1e-12 for a, b in zip(radii, radii[1:]))


def test_spectrum_serialisation():
    s = eigenvalues(adj(4))
    d = s.to_dict()
    assert len(d["values"]) == 4 and sum(c["multiplicity"] for c in d["clusters"]) == 4
    lines = spectra_to_csv({4: s, 3: eigenvalues(adj(3))}).splitlines()
    assert lines[0] == "3,-1.0000,-1.0000,2.0000"
    assert lines[1].split(",")[0] == "4" and "-0.0000" not in lines[1]
