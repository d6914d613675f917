"""
Bulk property driver behind the `sweep` command.

Cases are split into shards, shards run in a process pool, and results are
merged back in shard order so output does not depend on worker timing.
The seed only drives case sampling; the algorithms under test are
deterministic.
"""
import random
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Any, Dict, List, Optional, Tuple

from attrs import frozen
from tqdm import tqdm

from ed_errors import ElemDivError, HypothesisFailed, IdentityViolation, ReductionFailed
from ed_logger import get_logger
from oracle import minor_gcd_factors
from range_probes import (check_unit_ideal_product, construct_simple_range2_witness,
                          find_komarnytsky_violation, is_two_sided_unimodular)
from reduction import diagonal_reduce
from ring_instances import IntegerModRing, IntegerRing, RingSpec, make_ring
from ring_matrix import Matrix, verify_certificate

SWEEP_KINDS = ("smith", "unit-product", "construction", "komarnytsky")
SMITH_SHAPES = ((2, 2), (2, 3), (3, 3), (3, 4))


@frozen
class SweepOutcome:
    case: str
    status: str     # passed | inconclusive | counterexample
    detail: Optional[str] = None


def _smith_shard(seed: int, shard: int, count: int, entry_bound: int) -> List[SweepOutcome]:
    rng = random.Random(f"{seed}:{shard}")
    ring = IntegerRing()
    outcomes = []
    for _ in range(count):
        rows, cols = rng.choice(SMITH_SHAPES)
        grid = [[rng.randint(-entry_bound, entry_bound) for _ in range(cols)] for _ in range(rows)]
        a = Matrix.from_ints(ring, grid)
        case = f"smith {grid}"
        try:
            cert, report = diagonal_reduce(a)
        except ReductionFailed as e:
            outcomes.append(SweepOutcome(case, "counterexample", str(e)))
            continue
        expected = list(minor_gcd_factors(a).factors)
        got = [ring.canonical(e) for e in report.diagonal]
        if got != expected or not verify_certificate(a, cert):
            outcomes.append(SweepOutcome(case, "counterexample",
                                         f"diagonal {list(map(str, got))} vs minors {list(map(str, expected))}"))
        else:
            outcomes.append(SweepOutcome(case, "passed"))
    return outcomes


def _unit_product_shard(spec_json: Dict[str, Any], seed: int, shard: int, count: int,
                        bound: int) -> List[SweepOutcome]:
    rng = random.Random(f"{seed}:{shard}")
    ring = make_ring(RingSpec.from_json(spec_json))
    pool = [e for e in ring.candidates(bound) if not e.is_zero]
    outcomes = []
    for _ in range(count):
        a, b = rng.choice(pool), rng.choice(pool)
        case = f"unit-product ({a}, {b})"
        if check_unit_ideal_product(a, b):
            outcomes.append(SweepOutcome(case, "passed"))
        else:
            outcomes.append(SweepOutcome(case, "counterexample", f"R*({a * b})*R != R"))
    return outcomes


def _construction_shard(n: int) -> List[SweepOutcome]:
    ring = IntegerModRing(n)
    elems = list(ring.elements())
    outcomes = []
    for a in elems:
        for b in elems:
            for c in elems:
                if c.is_zero or not is_two_sided_unimodular([a, b, c]):
                    continue
                case = f"construction Z/{n} ({a}, {b}, {c})"
                try:
                    construct_simple_range2_witness(a, b, c)
                    outcomes.append(SweepOutcome(case, "passed"))
                except (HypothesisFailed, IdentityViolation) as e:
                    outcomes.append(SweepOutcome(case, "counterexample", str(e)))
    return outcomes


def _komarnytsky_shard(spec_json: Dict[str, Any], bound: int) -> List[SweepOutcome]:
    ring = make_ring(RingSpec.from_json(spec_json))
    violation = find_komarnytsky_violation(ring, bound)
    case = f"komarnytsky {ring.descriptor}"
    if violation is None:
        return [SweepOutcome(case, "inconclusive")]
    # a violation means the ring lacks the condition; reported, not a failure
    return [SweepOutcome(case, "passed",
                         f"{violation.element} = ({violation.factor})*({violation.cofactor})")]


def _run_shard(task: Tuple) -> List[SweepOutcome]:
    kind, args = task
    if kind == "smith":
        return _smith_shard(*args)
    if kind == "unit-product":
        return _unit_product_shard(*args)
    if kind == "construction":
        return _construction_shard(*args)
    return _komarnytsky_shard(*args)


def plan_shards(kind: str, spec_json: Optional[Dict[str, Any]], seed: int, count: int,
                bound: int, workers: int, max_modulus: int = 30) -> List[Tuple]:
    if kind not in SWEEP_KINDS:
        raise ElemDivError(f"unknown sweep kind {kind!r}")
    if kind == "construction":
        return [(kind, (n,)) for n in range(2, max_modulus + 1)]
    if kind == "komarnytsky":
        return [(kind, (spec_json, bound))]
    shards = max(1, workers)
    sizes = [count // shards + (1 if i < count % shards else 0) for i in range(shards)]
    if kind == "smith":
        return [(kind, (seed, i, size, 20)) for i, size in enumerate(sizes) if size]
    return [(kind, (spec_json, seed, i, size, bound)) for i, size in enumerate(sizes) if size]


def run_sweep(kind: str, spec_json: Optional[Dict[str, Any]] = None, seed: int = 0, count: int = 200,
              bound: int = 64, workers: int = 1, max_modulus: int = 30,
              show_progress: bool = True) -> Dict[str, Any]:
    tasks = plan_shards(kind, spec_json, seed, count, bound, workers, max_modulus)
    get_logger().info(f"sweep {kind}: {len(tasks)} shards on {workers} workers")
    results: List[Optional[List[SweepOutcome]]] = [None] * len(tasks)
    if workers <= 1:
        for i, task in enumerate(tqdm(tasks, desc=f"sweep {kind}", disable=not show_progress)):
            results[i] = _run_shard(task)
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(_run_shard, task): i for i, task in enumerate(tasks)}
            for future in tqdm(as_completed(futures), total=len(futures), desc=f"sweep {kind}",
                               disable=not show_progress):
                results[futures[future]] = future.result()

    outcomes = [o for shard in results for o in shard]
    summary = {
        "kind": kind,
        "cases": len(outcomes),
        "passed": sum(o.status == "passed" for o in outcomes),
        "inconclusive": sum(o.status == "inconclusive" for o in outcomes),
        "counterexamples": [f"{o.case}: {o.detail}" for o in outcomes if o.status == "counterexample"],
        "notes": [f"{o.case}: {o.detail}" for o in outcomes if o.status == "passed" and o.detail],
    }
    get_logger().info(f"sweep {kind}: {summary['passed']}/{summary['cases']} passed, "
                      f"{len(summary['counterexamples'])} counterexamples")
    return summary
