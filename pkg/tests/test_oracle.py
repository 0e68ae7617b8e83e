import numpy as np
import pytest

from conftest import naive_brute
from minsumradius.bench import InstanceSpec, generate
from minsumradius.errors import SizeGuardError
from minsumradius.geometry import meb
from minsumradius.oracle import (
    brute_msr,
    check_disjoint_optimum,
    check_separator_lemma,
    subset_table,
)

TWO_PAIRS = [(0, 0), (1, 0), (10, 0), (11, 0)]
THREE_PAIRS = [(0, 0), (1, 0), (100, 0), (101, 0), (50, 80), (50, 81)]

# Regression fixture, frozen from the oracle's own output.
UNIFORM8_SEED3_K3 = 0.3939038163802366


def test_two_pairs():
    c = brute_msr(TWO_PAIRS, 2)
    assert c.cost == pytest.approx(1.0)
    c.validate(TWO_PAIRS)


def test_k1_is_the_enclosing_radius(rng):
    for _ in range(10):
        pts = rng.normal(size=(int(rng.integers(1, 9)), 2))
        assert brute_msr(pts, 1).cost == pytest.approx(meb(pts)[0].radius, rel=1e-9)


def test_regression_fixture():
    pts = generate(InstanceSpec(8, 2, "uniform", 3))
    assert brute_msr(pts, 3).cost == pytest.approx(UNIFORM8_SEED3_K3, rel=1e-12)


@pytest.mark.parametrize(
    "spec, k",
    [
        (InstanceSpec(8, 2, "uniform", 3), 3),
        (InstanceSpec(9, 2, "uniform", 7), 3),
        (InstanceSpec(12, 2, "uniform", 42), 2),
        (InstanceSpec(10, 3, "gaussian-blobs", 5, blobs=2), 2),
    ],
)
def test_fixtures_agree_with_naive_labelling_enumeration(spec, k):
    pts = generate(spec)
    assert brute_msr(pts, k).cost == pytest.approx(naive_brute(pts, k), rel=1e-9)


def test_random_instances_agree_with_naive_enumeration(rng):
    for _ in range(20):
        n = int(rng.integers(0, 8))
        d = int(rng.integers(2, 4))
        pts = np.round(rng.uniform(size=(n, d)) * 4) / 4
        for k in (1, 2, 3):
            assert brute_msr(pts, k).cost == pytest.approx(naive_brute(pts, k), rel=1e-9, abs=1e-12)


def test_cost_nonincreasing_in_k(rng):
    for _ in range(20):
        pts = rng.uniform(size=(int(rng.integers(1, 10)), 2))
        costs = [brute_msr(pts, k).cost for k in (1, 2, 3)]
        assert costs[0] + 1e-12 >= costs[1] and costs[1] + 1e-12 >= costs[2]


def test_size_guard():
    pts = np.random.default_rng(0).uniform(size=(15, 2))
    with pytest.raises(SizeGuardError):
        brute_msr(pts, 2)
    with pytest.raises(SizeGuardError):
        brute_msr(pts[:11], 3)
    assert brute_msr(pts[:11], 3, force=True).cost > 0


def test_subset_table_singletons_and_pairs():
    table = subset_table([(0, 0), (3, 4), (0, 0)])
    assert table.radius[0b001] == 0.0
    assert table.radius[0b101] == 0.0
    assert table.radius[0b011] == pytest.approx(2.5)


def test_disjoint_lemma_examples():
    assert check_disjoint_optimum(TWO_PAIRS, 2).holds
    report = check_disjoint_optimum([(1, 1)] * 4, 2)
    assert report.holds and report.detail["clusters"] == 1
    pts = generate(InstanceSpec(10, 2, "uniform", 11))
    assert check_disjoint_optimum(pts, 3).holds


def test_separator_lemma_examples():
    report = check_separator_lemma(TWO_PAIRS, 2)
    assert report.holds
    assert report.witness["direction"] == [1.0, 0.0]
    assert report.witness["split"] == 2
    assert check_separator_lemma(THREE_PAIRS, 3).holds


def test_separator_lemma_on_random_instances(rng):
    for trial in range(60):
        n = int(rng.integers(0, 10))
        pts = rng.uniform(size=(n, 2))
        if trial % 3 == 0:
            pts = np.round(pts * 3) / 3
        for k in (2, 3):
            report = check_separator_lemma(pts, k, instance_id=str(trial))
            assert report.holds, report
            assert check_disjoint_optimum(pts, k).holds


def test_report_serializes():
    d = check_separator_lemma(TWO_PAIRS, 2, instance_id="pairs").to_dict()
    assert d["lemma"] == "k2-separator" and d["instance_id"] == "pairs"
