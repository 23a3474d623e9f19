import logging

import numpy as np
import pytest

import helpers
from medusa.ensemble import (
    EnsembleSpec,
    generate_scale_free,
    match_stubs,
    nucleus_scaling,
    sample_degree_sequence,
)
from medusa.fractal import LINEAR, fit_power_law
from medusa.graph import Graph


# ------------------------------------------------------------------ spec

def test_natural_cutoff():
    assert EnsembleSpec(n=10_000, gamma=2.5).max_degree() == 464  # N^(2/3)
    assert EnsembleSpec(n=10, gamma=2.01).max_degree() == 9  # capped at n-1


def test_infeasible_spec_rejected():
    with pytest.raises(ValueError, match="infeasible"):
        EnsembleSpec(n=10, gamma=2.5, k_min=5, cutoff=3)


def test_invalid_parameters_rejected():
    with pytest.raises(ValueError):
        EnsembleSpec(n=100, gamma=2.0)
    with pytest.raises(ValueError):
        EnsembleSpec(n=100, gamma=2.5, k_min=0)
    with pytest.raises(ValueError):
        EnsembleSpec(n=100, gamma=2.5, cutoff=100)


# ------------------------------------------------------------- generator

def test_generator_deterministic():
    spec = EnsembleSpec(n=500, gamma=2.5, k_min=1, seed=13)
    g1 = generate_scale_free(spec)
    g2 = generate_scale_free(spec)
    assert np.array_equal(g1.indptr, g2.indptr)
    assert np.array_equal(g1.indices, g2.indices)
    assert g1.labels == g2.labels


def test_generator_seed_changes_graph():
    g1 = generate_scale_free(EnsembleSpec(n=500, gamma=2.5, seed=1))
    g2 = generate_scale_free(EnsembleSpec(n=500, gamma=2.5, seed=2))
    assert not np.array_equal(g1.indices, g2.indices)


def test_generated_graphs_are_simple():
    for seed in range(3):
        g = generate_scale_free(EnsembleSpec(n=400, gamma=2.3, k_min=1, seed=seed))
        helpers.check_simple_symmetric(g)


def test_degree_sampling_respects_bounds():
    spec = EnsembleSpec(n=2000, gamma=2.5, k_min=3, cutoff=40, seed=0)
    deg = sample_degree_sequence(spec, np.random.default_rng(0))
    assert deg.min() >= 3
    assert deg.max() <= 41  # odd-sum repair may add one
    assert deg.sum() % 2 == 0


def test_ccdf_tail_slope():
    # CCDF of P(k) ~ k^-2.5 decays with exponent gamma-1 = 1.5; fit below
    # the cutoff roll-off
    spec = EnsembleSpec(n=10_000, gamma=2.5, k_min=2, seed=1)
    g = generate_scale_free(spec)
    deg = g.degrees()
    hi = spec.max_degree() // 4
    ks = np.arange(2, hi + 1)
    ccdf = np.array([(deg >= k).mean() for k in ks])
    pts = [(float(k), float(c)) for k, c in zip(ks, ccdf) if c > 0]
    fit = fit_power_law(pts, LINEAR)
    assert abs(fit.exponent - 1.5) < 0.25


def test_erasure_fraction_small_for_moderate_tail():
    spec = EnsembleSpec(n=10_000, gamma=2.5, k_min=2, seed=1)
    rng = np.random.default_rng(spec.seed)
    deg = sample_degree_sequence(spec, rng)
    _, erased = match_stubs(deg, rng)
    assert erased / deg.sum() < 0.05


def test_erasure_warning_logged(caplog):
    spec = EnsembleSpec(n=2000, gamma=2.05, k_min=1, seed=3)  # heavy tail
    with caplog.at_level(logging.WARNING, logger="medusa.ensemble"):
        generate_scale_free(spec)
    assert any("erased" in r.message for r in caplog.records)


def test_match_stubs_even_sum_required():
    rng = np.random.default_rng(0)
    pairs, erased = match_stubs(np.array([2, 2, 2, 2], dtype=np.int64), rng)
    assert 2 * len(pairs) + erased == 8


# --------------------------------------------------------------- scaling

def test_scaling_needs_three_sizes():
    base = EnsembleSpec(n=1000, gamma=2.5)
    with pytest.raises(ValueError):
        nucleus_scaling([1000], base, replicates=2, seed=0)
    with pytest.raises(ValueError):
        nucleus_scaling([1000, 2000, 3000], base, replicates=0, seed=0)


def test_scaling_degenerate_cycle_family():
    # constant k_max family: zero slope, perfectly flat fit
    base = EnsembleSpec(n=100, gamma=2.5)
    result = nucleus_scaling(
        [30, 100, 300], base, replicates=2, seed=0,
        generator=lambda spec: helpers.cycle_graph(spec.n),
    )
    assert result.k_max_fit.slope == pytest.approx(0.0, abs=1e-12)
    assert all(r.k_max == 2 for r in result.rows)
    # cycles are their own nucleus, so nucleus size grows linearly
    assert result.nucleus_size_fit.slope == pytest.approx(1.0, abs=1e-12)


def test_scaling_rows_and_determinism():
    base = EnsembleSpec(n=1000, gamma=2.3, k_min=1)
    a = nucleus_scaling([200, 500, 1000], base, replicates=2, seed=7)
    b = nucleus_scaling([200, 500, 1000], base, replicates=2, seed=7)
    assert a.rows == b.rows
    assert len(a.rows) == 6
    assert {r.n for r in a.rows} == {200, 500, 1000}
    assert a.nucleus_size_fit.as_dict() == b.nucleus_size_fit.as_dict()


def test_scaling_exports_graphs_in_canonical_format(tmp_path):
    g = generate_scale_free(EnsembleSpec(n=200, gamma=2.4, k_min=1, seed=5))
    path = tmp_path / "gen.edges"
    g.write_edge_list(path)
    from medusa.graph import load_edge_list
    g2, _ = load_edge_list(path)
    assert g2.edge_count == g.edge_count
    assert {frozenset(map(str, e)) for e in g.labeled_edges()} == g2.labeled_edges()