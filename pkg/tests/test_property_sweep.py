import pytest

from ed_errors import ElemDivError
from property_sweep import plan_shards, run_sweep

QUAT = {"kind": "QuatPoly"}


def test_shards_split_the_count_evenly():
    tasks = plan_shards("smith", None, seed=3, count=10, bound=64, workers=3)
    assert [t[1][2] for t in tasks] == [4, 3, 3]
    assert [t[1][1] for t in tasks] == [0, 1, 2]


def test_construction_plans_one_shard_per_modulus():
    tasks = plan_shards("construction", None, seed=0, count=1, bound=64, workers=4, max_modulus=5)
    assert tasks == [("construction", (n,)) for n in (2, 3, 4, 5)]


def test_unknown_kind():
    with pytest.raises(ElemDivError):
        plan_shards("hermite", None, 0, 1, 64, 1)


def test_smith_sweep_matches_minors():
    summary = run_sweep("smith", seed=7, count=12, workers=1, show_progress=False)
    assert summary["cases"] == 12
    assert summary["counterexamples"] == []
    assert summary["passed"] == 12


def test_pooled_sweep_is_repeatable():
    first = run_sweep("smith", seed=1, count=6, workers=2, show_progress=False)
    second = run_sweep("smith", seed=1, count=6, workers=2, show_progress=False)
    assert first == second
    assert first["cases"] == 6 and first["counterexamples"] == []


def test_construction_over_small_moduli():
    summary = run_sweep("construction", max_modulus=6, workers=1, show_progress=False)
    assert summary["cases"] > 0
    assert summary["counterexamples"] == []


def test_unit_product_holds_over_integers():
    summary = run_sweep("unit-product", {"kind": "Int"}, seed=2, count=30, workers=1, show_progress=False)
    assert summary["counterexamples"] == []


def test_komarnytsky_violation_is_a_note():
    summary = run_sweep("komarnytsky", QUAT, bound=64, workers=1, show_progress=False)
    assert summary["counterexamples"] == []
    assert len(summary["notes"]) == 1
    assert summary["notes"][0].endswith("x^2 + 1 = (x + i)*(x - i)")
