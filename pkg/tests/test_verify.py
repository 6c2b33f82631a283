from __future__ import annotations

import random

from coxbasis.verify import (
    euler_suite,
    hodge_suite,
    jacobian_suite,
    random_homogeneous_derivation,
    random_invariant_derivation,
    shift_suite,
)
from coxbasis.coxeter import is_invariant_derivation


def test_random_homogeneous_derivation_shape():
    rng = random.Random(1)
    for degree in (0, 1, 3):
        d = random_homogeneous_derivation(2, degree, rng)
        assert not d.is_zero
        assert d.is_homogeneous()
        assert d.degree() == degree


def test_random_invariant_derivation(pipeline):
    group, _, system = pipeline("B2")
    rng = random.Random(2)
    d = random_invariant_derivation(system, 3, rng)
    assert d is not None
    assert d.degree() == 3
    assert is_invariant_derivation(group, d)
    # B2 has no invariant fields in even coefficient degrees
    assert random_invariant_derivation(system, 2, rng) is None


def test_euler_suite(pipeline):
    group, _, _ = pipeline("A2")
    report = euler_suite(group, samples=10, seed=3)
    assert report["passed"]
    assert report["samples"] == 10
    assert report["failures"] == []
    assert report["suite"] == "euler"
    # the same seed reproduces the same verdict
    assert euler_suite(group, samples=10, seed=3) == report


def test_jacobian_suite(pipeline):
    group, arrangement, system = pipeline("G2")
    report = jacobian_suite(group, arrangement, system)
    assert report["passed"]


def test_shift_suite(pipeline):
    group, arrangement, system = pipeline("B2")
    report = shift_suite(group, arrangement, system, samples=8, seed=5)
    assert report["passed"]
    assert report["orders_checked"] > 0
    assert report["failures"] == []


def test_hodge_suite(pipeline):
    group, arrangement, system = pipeline("A2")
    report = hodge_suite(group, arrangement, system, k=1, source_degrees=[1, 2])
    assert report["passed"]
    assert len(report["entries"]) == 2
