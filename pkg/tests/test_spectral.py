import math

import numpy as np
import pytest

from spantree.corpus import standard_corpus
from spantree.exact import laplacian, tau_exact
from spantree.generators import complete, cycle, path, random_graph
from spantree.graph import Graph, disjoint_union
from spantree.product import cartesian_product
from spantree.spectral import (
    ConvergenceError,
    Spectrum,
    jacobi_eigenvalues,
    laplacian_spectrum,
    log_tau_product_spectral,
    product_spectrum,
    tau_product_spectral,
    tau_spectral,
)


def test_spectrum_examples():
    np.testing.assert_allclose(laplacian_spectrum(complete(4)).values, [0, 4, 4, 4], atol=1e-9)
    np.testing.assert_allclose(laplacian_spectrum(path(2)).values, [0, 2], atol=1e-9)
    # char. polynomial of Q(C4) is x (x - 2)^2 (x - 4)
    np.testing.assert_allclose(laplacian_spectrum(cycle(4)).values, [0, 2, 2, 4], atol=1e-9)
    assert laplacian_spectrum(Graph(1)).values == (0.0,)


def test_zero_is_clamped():
    s = laplacian_spectrum(disjoint_union(cycle(5), complete(4)))
    assert s.values[:2] == (0.0, 0.0)


def test_jacobi_matches_lapack_on_dense_symmetric():
    rng = np.random.default_rng(0)
    for n in (2, 3, 7, 16, 31):
        a = rng.normal(size=(n, n))
        a = a + a.T
        vals, off = jacobi_eigenvalues(a)
        np.testing.assert_allclose(vals, np.linalg.eigvalsh(a), atol=1e-10)
        assert off <= 1e-12 * np.linalg.norm(a)


def test_jacobi_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        jacobi_eigenvalues([[1.0, 2.0], [0.0, 1.0]])


def test_jacobi_sweep_cap():
    a = np.random.default_rng(1).normal(size=(12, 12))
    with pytest.raises(ConvergenceError) as exc:
        jacobi_eigenvalues(a + a.T, max_sweeps=1)
    assert exc.value.residual > 0


def test_tau_spectral_examples():
    assert tau_spectral(complete(3)) == pytest.approx(3, rel=1e-12)
    assert tau_spectral(disjoint_union(complete(2), complete(2))) == 0.0
    assert tau_spectral(cycle(4)) == pytest.approx(4, rel=1e-12)
    assert tau_spectral(Graph(1)) == 1.0


def test_product_spectrum_examples():
    k2 = Spectrum((0.0, 2.0))
    assert product_spectrum(k2, k2).values == (0.0, 2.0, 2.0, 4.0)
    s = laplacian_spectrum(cycle(5))
    assert product_spectrum(Spectrum((0.0,)), s).values == s.values
    assert product_spectrum(Spectrum((0.0, 3.0, 3.0)), k2).values == (0, 2, 3, 3, 5, 5)
    assert product_spectrum(Spectrum((0.0,), 1e-13), Spectrum((0.0,), 2e-13)).tol == pytest.approx(3e-13)


def test_tau_product_spectral_examples():
    assert tau_product_spectral(complete(2), complete(2)) == pytest.approx(4, rel=1e-12)
    assert tau_product_spectral(complete(3), complete(2)) == pytest.approx(75, rel=1e-12)
    g = random_graph(6, 0.7, 2)
    assert tau_product_spectral(g, Graph(1)) == pytest.approx(tau_spectral(g), rel=1e-12)
    assert tau_product_spectral(disjoint_union(complete(2), complete(2)), complete(3)) == 0.0


def test_tau_product_spectral_overflow_reports_log():
    big = complete(40)
    assert tau_product_spectral(big, big) == math.inf
    expected = math.log(40 ** 38) * 2 + 39 * 39 * math.log(80)
    assert log_tau_product_spectral(big, big) == pytest.approx(expected, rel=1e-12)


def test_spectral_matches_exact_on_corpus():
    graphs = list(standard_corpus().values())
    graphs += [cartesian_product(cycle(5), path(6)), random_graph(50, 0.2, 9), complete(30)]
    for g in graphs:
        t = tau_exact(g)
        assert abs(tau_spectral(g) - t) / max(1, t) <= 1e-9


def test_trace_identity():
    for g in standard_corpus().values():
        s = laplacian_spectrum(g)
        assert math.fsum(s.values) == pytest.approx(2 * g.m, rel=1e-9)
        assert list(s.values) == sorted(s.values)
        assert s.values[0] == 0.0


def test_product_spectrum_matches_product_laplacian():
    for seed in range(5):
        g1, g2 = random_graph(6, 0.5, seed), random_graph(5, 0.6, seed + 50)
        direct = laplacian_spectrum(cartesian_product(g1, g2)).as_array()
        summed = product_spectrum(laplacian_spectrum(g1), laplacian_spectrum(g2)).as_array()
        np.testing.assert_allclose(direct, summed, atol=1e-8)


def test_spectrum_of_laplacian_matrix_is_psd():
    g = random_graph(20, 0.3, 4)
    ref = np.linalg.eigvalsh(np.array(laplacian(g), dtype=float))
    np.testing.assert_allclose(laplacian_spectrum(g).values, np.where(abs(ref) < 1e-9, 0, ref), atol=1e-10)
