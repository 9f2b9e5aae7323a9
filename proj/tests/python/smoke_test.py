"""Smoke tests for the panther_core python module."""

import math
import sys

import panther_core as pc


def test_sample_size():
    assert pc.required_sample_size(epsilon=0.1, delta=0.1, c=0.5, T=5) == 332
    assert pc.required_sample_size(epsilon=0.1, delta=0.1, c=0.5, T=2) == 166
    budget = pc.SamplingBudget(epsilon=0.1, delta=0.1, c=0.5, T=5)
    assert pc.required_sample_size(budget) == 332


def test_graph_basics():
    g = pc.graph_from_edges([("a", "b", 1.0), ("b", "c", 2.0)])
    assert g.vertex_count == 3
    assert g.edge_count == 2
    b = g.vertex_id("b")
    assert g.label(b) == "b"
    assert g.degree(b) == 2
    probs = dict(g.transition_probabilities(b))
    assert abs(sum(probs.values()) - 1.0) < 1e-12
    assert abs(probs[g.vertex_id("c")] - 2.0 / 3.0) < 1e-12


def test_triangle_similarity():
    g = pc.graph_from_edges([("a", "b", 1.0), ("b", "c", 1.0), ("c", "a", 1.0)])
    idx = pc.generate_paths(g, R=100000, T=2, seed=99)
    a, b = g.vertex_id("a"), g.vertex_id("b")
    est = pc.similarity(idx, a, b)
    exact = pc.exact_path_similarity(g, 2, a, b)
    assert abs(exact - 2.0 / 3.0) < 1e-12
    assert abs(est - exact) < 0.01
    top = pc.top_k(g, idx, "a", 2)
    assert {label for label, _ in top} == {"b", "c"}


def test_determinism():
    g = pc.preferential_attachment(80, 2, seed=4)
    idx1 = pc.generate_paths(g, R=5000, T=5, seed=11, threads=1)
    idx2 = pc.generate_paths(g, R=5000, T=5, seed=11, threads=4)
    assert idx1.paths_containing(0) == idx2.paths_containing(0)
    assert pc.top_k(g, idx1, "0", 5) == pc.top_k(g, idx2, "0", 5)


def test_feature_vectors_and_knn():
    g = pc.preferential_attachment(60, 2, seed=8)
    idx = pc.generate_paths(g, R=4000, T=5, seed=21)
    vectors = pc.build_feature_vectors(idx, D=10)
    assert vectors.dimension == 10
    row = vectors.row(0)
    assert all(row[i] >= row[i + 1] for i in range(len(row) - 1))
    index = pc.VectorIndex(vectors)
    top = pc.top_k_pp(g, index, "0", 5)
    assert len(top) == 5
    assert all(label != "0" for label, _ in top)

    assert pc.reciprocal_euclidean([1.0, 0.0], [0.0, 1.0]) == (
        1.0 / math.sqrt(2.0)
    )
    assert math.isinf(pc.reciprocal_euclidean([0.5, 0.5], [0.5, 0.5]))


def test_cross_network():
    g = pc.preferential_attachment(40, 3, seed=6)
    build = lambda seed: pc.VectorIndex(
        pc.build_feature_vectors(pc.generate_paths(g, R=20000, T=5, seed=seed), D=20)
    )
    ia, ib = build(1), build(2)
    hits = 0
    for v in range(40):
        label = g.label(v)
        top = pc.cross_network_top_k(g, ia, g, ib, label, 5)
        if label in {name for name, _ in top}:
            hits += 1
    assert hits >= 30  # counterpart of an identical copy almost always in top-5


def test_errors():
    g = pc.graph_from_edges([("a", "b", 1.0)])
    try:
        pc.generate_paths(g, R=0, T=2, seed=1)
    except Exception:
        pass
    else:
        raise AssertionError("R=0 must raise")


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
