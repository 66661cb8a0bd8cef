"""Fuzzing-layer tests: determinism, constraint wiring, control behavior."""

from __future__ import annotations

import pytest

from minordet.exactmat import det_bareiss
from minordet.identities import compound_minors
from minordet.oracle import (
    DIVISIBILITY_THEOREMS,
    MAX_N_DIVISIBILITY,
    MAX_N_SYLVESTER,
    THEOREMS,
    FuzzPlan,
    fuzz_divisibility,
    fuzz_sylvester,
    negative_control,
    random_instance,
)


def test_plan_validation():
    FuzzPlan("b0", 3, 2, trials=10, seed=0, bound=5)
    with pytest.raises(ValueError):
        FuzzPlan("nope", 3, 2, trials=10, seed=0, bound=5)
    with pytest.raises(ValueError):
        FuzzPlan("b0", -1, 0, trials=10, seed=0, bound=5)
    with pytest.raises(ValueError):
        FuzzPlan("b0", MAX_N_DIVISIBILITY + 1, 2, trials=10, seed=0, bound=5)
    with pytest.raises(ValueError):
        FuzzPlan("sylv", MAX_N_SYLVESTER + 1, 2, trials=10, seed=0, bound=5)
    with pytest.raises(ValueError):
        FuzzPlan("b0", 3, 4, trials=10, seed=0, bound=5)
    with pytest.raises(ValueError):
        FuzzPlan("b0", 3, 2, trials=0, seed=0, bound=5)
    with pytest.raises(ValueError):
        FuzzPlan("b0", 3, 2, trials=10, seed=0, bound=0)
    assert set(DIVISIBILITY_THEOREMS) < set(THEOREMS)


def test_random_instance_is_deterministic():
    plan = FuzzPlan("b0", 3, 1, trials=5, seed=42, bound=30)
    a1, b1 = random_instance(plan, 2)
    a2, b2 = random_instance(plan, 2)
    assert a1 == a2 and b1 == b2
    a3, _ = random_instance(plan, 3)
    assert a3 != a1
    other_seed, _ = random_instance(
        FuzzPlan("b0", 3, 1, trials=5, seed=43, bound=30), 2
    )
    assert other_seed != a1


def test_random_instance_applies_constraints():
    size = 4
    for theorem in DIVISIBILITY_THEOREMS:
        plan = FuzzPlan(theorem, size - 1, 1, trials=1, seed=7, bound=50)
        a, b = random_instance(plan, 0)
        raw_a, raw_b = random_instance(plan, 0, apply_constraints=False)
        assert b.entry(size, size) == 0
        if theorem == "ab0":
            assert a.entry(size, size) == 0
        if theorem == "adb0":
            for j in range(1, size):
                assert a.entry(size, j) == 0
            assert a.entry(size, size) == raw_a.entry(size, size)  # corner kept
        # the unconstrained twin shares every unconstrained entry
        for i in range(1, size + 1):
            for j in range(1, size + 1):
                if (i, j) != (size, size) and not (theorem == "adb0" and i == size):
                    assert a.entry(i, j) == raw_a.entry(i, j)
                if (i, j) != (size, size):
                    assert b.entry(i, j) == raw_b.entry(i, j)


def test_fuzz_divisibility_clean_runs():
    for theorem, n, k in [("b0", 2, 1), ("ab0", 3, 2), ("adb0", 3, 1)]:
        plan = FuzzPlan(theorem, n, k, trials=15, seed=5, bound=25)
        rep = fuzz_divisibility(plan)
        assert rep.failures == 0
        assert rep.passes == 15
        assert rep.first_failure is None
    with pytest.raises(ValueError):
        fuzz_divisibility(FuzzPlan("sylv", 2, 1, trials=5, seed=0, bound=5))


def test_fuzz_divisibility_is_reproducible():
    plan = FuzzPlan("ab0", 2, 1, trials=10, seed=9, bound=40)
    assert fuzz_divisibility(plan).to_json_dict() == fuzz_divisibility(plan).to_json_dict()


def test_fuzz_sylvester_clean_runs():
    for n, k in [(2, 1), (3, 2), (4, 2)]:
        plan = FuzzPlan("sylv", n, k, trials=15, seed=6, bound=25)
        rep = fuzz_sylvester(plan)
        assert rep.failures == 0 and rep.passes == 15
    with pytest.raises(ValueError):
        fuzz_sylvester(FuzzPlan("b0", 2, 1, trials=5, seed=0, bound=5))


def test_zero_corner_kills_compound_det_below_top_k():
    # corner^p with p >= 1 forces the compound determinant to vanish
    plan = FuzzPlan("sylv", 3, 1, trials=1, seed=13, bound=30)
    a, _ = random_instance(plan, 0)
    a.entries[-1] = 0
    for k in (0, 1, 2):
        comp = compound_minors(a, k, det=det_bareiss)
        assert det_bareiss(comp.matrix) == 0


def test_negative_control_detects_missing_constraints():
    plan = FuzzPlan("b0", 2, 1, trials=20, seed=11, bound=50)
    rep = negative_control(plan)
    assert rep.failures == 20
    assert rep.note is None
    assert rep.first_failure is not None
    assert rep.first_failure["divisor"] != 0
    with pytest.raises(ValueError):
        negative_control(FuzzPlan("sylv", 2, 1, trials=5, seed=0, bound=5))


def test_negative_control_vacuous_cases():
    for n, k in [(0, 0), (2, 2)]:
        plan = FuzzPlan("b0", n, k, trials=5, seed=3, bound=10)
        rep = negative_control(plan)
        assert rep.note == "vacuous"
        assert rep.failures == 0  # the single compound entry is det A * det B


def test_negative_control_escalation_paths():
    # bound 1 with one trial can come up clean; the control retries at 10x
    esc = negative_control(FuzzPlan("b0", 1, 0, trials=1, seed=1, bound=1))
    assert esc.note == "escalated"
    assert esc.failures >= 1
    assert esc.plan.bound == 10
    anom = negative_control(FuzzPlan("b0", 1, 0, trials=1, seed=0, bound=1))
    assert anom.note == "anomaly"
    assert anom.failures == 0


def test_report_json_shape():
    plan = FuzzPlan("adb0", 2, 1, trials=5, seed=8, bound=20)
    d = fuzz_divisibility(plan).to_json_dict()
    assert list(d) == [
        "theorem", "n", "k", "trials", "seed", "bound", "passes", "failures", "evidence",
    ]
    assert d["evidence"] == "pointwise"
    ctl = negative_control(FuzzPlan("b0", 2, 1, trials=5, seed=11, bound=50)).to_json_dict()
    assert "first_failure" in ctl and ctl["failures"] >= 1
