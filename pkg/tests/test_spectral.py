"""Laplacian construction and the Jacobi eigensolver against independent oracles."""

from __future__ import annotations

import random

import numpy as np
import pytest
import sympy

from bridgevax.graphs import Graph, connected_components
from bridgevax.spectral import (
    ConvergenceError,
    acr,
    algebraic_connectivity,
    eigenvalues,
    laplacian,
)

from conftest import complete_graph, cycle_graph, path_graph, random_graph, star_graph


# ------------------------------------------------------------- laplacian

def test_laplacian_k2():
    np.testing.assert_array_equal(
        laplacian(complete_graph(2)), [[1.0, -1.0], [-1.0, 1.0]]
    )


def test_laplacian_p3():
    np.testing.assert_array_equal(
        laplacian(path_graph(3)),
        [[1, -1, 0], [-1, 2, -1], [0, -1, 1]],
    )


def test_laplacian_isolated_nodes():
    np.testing.assert_array_equal(laplacian(Graph.from_edges(2, [])), np.zeros((2, 2)))


def test_laplacian_empty_graph():
    assert laplacian(Graph.from_edges(0, [])).shape == (0, 0)


def test_laplacian_row_sums_are_zero():
    rng = random.Random(3)
    for _ in range(20):
        m = laplacian(random_graph(rng, 10))
        if m.size:
            np.testing.assert_array_equal(m.sum(axis=1), np.zeros(m.shape[0]))


# ----------------------------------------------------------- eigenvalues

def test_eigenvalues_k2():
    np.testing.assert_allclose(
        eigenvalues(laplacian(complete_graph(2))), [0.0, 2.0], atol=1e-9
    )


def test_eigenvalues_p3():
    # roots of the characteristic polynomial -x^3 + 4x^2 - 3x: {0, 1, 3}
    np.testing.assert_allclose(
        eigenvalues(laplacian(path_graph(3))), [0.0, 1.0, 3.0], atol=1e-9
    )


def test_eigenvalues_k4():
    np.testing.assert_allclose(
        eigenvalues(laplacian(complete_graph(4))), [0.0, 4.0, 4.0, 4.0], atol=1e-9
    )


def test_eigenvalues_rejects_non_square():
    with pytest.raises(ValueError):
        eigenvalues(np.zeros((2, 3)))


def test_eigenvalues_bit_identical_across_runs():
    m = laplacian(cycle_graph(7))
    first = eigenvalues(m)
    second = eigenvalues(m)
    assert first.tobytes() == second.tobytes()


def charpoly_roots(matrix: np.ndarray) -> list[float]:
    """Exact characteristic-polynomial roots via symbolic determinant."""
    sym = sympy.Matrix(matrix.astype(int))
    lam = sympy.symbols("lam")
    poly = sym.charpoly(lam)
    roots = []
    for root, multiplicity in sympy.roots(poly.as_expr(), lam).items():
        roots.extend([complex(root).real] * multiplicity)
    return sorted(roots)


def test_eigenvalues_match_charpoly_roots_up_to_n4():
    graphs = [
        complete_graph(2), path_graph(3), complete_graph(3), star_graph(3),
        path_graph(4), complete_graph(4), cycle_graph(4),
        Graph.from_edges(4, [(0, 1)]), Graph.from_edges(3, []),
        Graph.from_edges(4, [(0, 1), (2, 3)]),
    ]
    for g in graphs:
        got = eigenvalues(laplacian(g))
        expected = charpoly_roots(laplacian(g))
        np.testing.assert_allclose(got, expected, atol=1e-8)


def test_trace_equals_eigenvalue_sum_on_random_graphs():
    rng = random.Random(17)
    for _ in range(200):
        g = random_graph(rng, 12, edge_prob=rng.random())
        m = laplacian(g)
        if m.shape[0] == 0:
            continue
        evals = eigenvalues(m)
        assert abs(evals.sum() - np.trace(m)) <= 1e-8 * max(1, m.shape[0])


def test_zero_multiplicity_equals_component_count():
    rng = random.Random(29)
    for _ in range(200):
        g = random_graph(rng, 12, edge_prob=rng.random())
        if g.node_count == 0:
            continue
        evals = eigenvalues(laplacian(g))
        zeros = int(np.sum(evals < 1e-6))
        assert zeros == connected_components(g).component_count
        assert np.all(evals >= -1e-9)


# ----------------------------------------------- algebraic connectivity

def test_algebraic_connectivity_k2():
    assert algebraic_connectivity(complete_graph(2)) == pytest.approx(2.0)


def test_algebraic_connectivity_disconnected_is_exactly_zero():
    assert algebraic_connectivity(Graph.from_edges(2, [])) == 0.0


def test_algebraic_connectivity_p3():
    assert algebraic_connectivity(path_graph(3)) == pytest.approx(1.0, abs=1e-9)


def test_algebraic_connectivity_requires_two_nodes():
    with pytest.raises(ValueError):
        algebraic_connectivity(Graph.from_edges(1, []))


def test_zero_iff_disconnected():
    rng = random.Random(41)
    for _ in range(100):
        g = random_graph(rng, 9, edge_prob=rng.random())
        if g.node_count < 2:
            continue
        lam2 = algebraic_connectivity(g)
        disconnected = connected_components(g).component_count > 1
        assert (lam2 == 0.0) == disconnected


# ------------------------------------------------------------------ acr

def test_acr_complete_graph_is_one():
    assert acr(complete_graph(3)) == pytest.approx(1.0)


def test_acr_p3():
    assert acr(path_graph(3)) == pytest.approx(1.0 / 3.0, abs=1e-9)


def test_acr_disconnected_is_zero():
    assert acr(Graph.from_edges(4, [(0, 1), (2, 3)])) == 0.0


def test_acr_bounds_and_completeness():
    rng = random.Random(43)
    for _ in range(100):
        g = random_graph(rng, 9, edge_prob=rng.random())
        if g.node_count < 2:
            continue
        if connected_components(g).component_count != 1:
            continue
        value = acr(g)
        assert 0.0 < value <= 1.0 + 1e-12
        is_complete = g.edge_count == g.node_count * (g.node_count - 1) // 2
        assert (abs(value - 1.0) < 1e-9) == is_complete


def test_convergence_error_carries_residual():
    err = ConvergenceError(residual=1e-3, sweeps=200)
    assert err.residual == 1e-3
    assert "200" in str(err)
