"""Smoke tests for the python bindings: generate, track, score."""

import math

import numpy as np
import pytest

import dualtrack


def test_fitness_matches_numpy_cross_product():
    rng = np.random.default_rng(7)
    for _ in range(200):
        p = rng.uniform(-20, 20, 2)
        d1 = rng.uniform(-20, 20, 2)
        d2 = rng.uniform(-20, 20, 2)
        if np.linalg.norm(d2 - d1) < 0.5:
            d2[0] += 1.0
        expected = abs(np.cross(d2 - d1, p - d1)) / np.linalg.norm(d2 - d1)
        got = dualtrack.fitness(p[0], p[1], d1[0], d1[1], d2[0], d2[1])
        assert got == pytest.approx(expected, abs=1e-12)


def test_overlap_score_basics():
    assert dualtrack.overlap_score(0, 0, 10, 10, 0, 0, 10, 10) == pytest.approx(1.0)
    assert dualtrack.overlap_score(0, 0, 10, 10, 50, 50, 5, 5) == pytest.approx(0.0)
    assert dualtrack.overlap_score(0, 0, 10, 10, 5, 0, 10, 10) == pytest.approx(1 / 3)


def test_synthesize_shapes_and_truth():
    frames, truth = dualtrack.synthesize(width=100, height=80, frames=10, shape_x=10,
                                         shape_y=30, shape_size=12, vx=2, vy=0)
    assert frames.shape == (10, 80, 100)
    assert truth.shape == (10, 4)
    assert truth[0].tolist() == [10, 30, 12, 12]
    assert truth[5][0] == pytest.approx(20)  # 2 px per frame


def test_dominant_points_of_a_square():
    frames, _ = dualtrack.synthesize(width=64, height=64, frames=3, shape_x=20, shape_y=20,
                                     shape_size=16, vx=0, vy=0)
    pts = dualtrack.dominant_points(frames[0], mode="static")
    corners = {(20, 20), (35, 20), (35, 35), (20, 35)}
    got = {(int(x), int(y)) for x, y, _, _ in pts}
    assert got == corners
    for x, y, _, _ in pts:
        assert dualtrack.is_trackable_point(frames[0], x, y)


def test_track_and_evaluate_end_to_end():
    frames, truth = dualtrack.synthesize(frames=40)
    result = dualtrack.track(frames, mode="static", seed=42)
    assert not result["track_lost"]
    boxes = result["boxes"]
    assert boxes.shape[1] == 5
    assert math.isnan(boxes[0][1])  # no box before the first swarm frame

    metrics = dualtrack.evaluate(boxes, truth)
    assert metrics["TD"] >= 90.0
    assert metrics["AOS"] >= 0.5
    assert 0.0 <= metrics["LSM"] <= 1.0


def test_track_determinism():
    frames, _ = dualtrack.synthesize(frames=15)
    a = dualtrack.track(frames, seed=7)
    b = dualtrack.track(frames, seed=7)
    np.testing.assert_array_equal(a["boxes"], b["boxes"])
