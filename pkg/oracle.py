"""
Brute-force oracles for checking the reduction and probe code.

minor_gcd_factors works from determinantal minors only (cofactor expansion,
no elementary operations). exhaustive_witness_oracle enumerates a finite
ring completely and decides ideal membership by additive closure, without
touching the Bezout machinery.
"""
from functools import lru_cache
from itertools import combinations, product
from typing import FrozenSet, List, Sequence, Tuple

from attrs import frozen

from ed_config import get_config
from ed_errors import InvalidParameters, UnsupportedCapability, ZeroInput
from ring_core import Capability, Element, Ring
from ring_matrix import Matrix
from range_probes import SimpleDegreeResult, SimpleRangeWitness, StableRangeWitness

CONDITIONS = ("unimodular", "sr1", "sr2", "simple2", "nsimple")


@frozen
class InvariantFactors:
    factors: Tuple[Element, ...]
    minor_gcds: Tuple[Element, ...]


def _determinant(ring: Ring, grid: List[List[Element]]) -> Element:
    if len(grid) == 1:
        return grid[0][0]
    total = ring.zero
    for j, entry in enumerate(grid[0]):
        if entry.is_zero:
            continue
        minor = [row[:j] + row[j + 1:] for row in grid[1:]]
        term = entry * _determinant(ring, minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def minor_gcd_factors(a: Matrix) -> InvariantFactors:
    ring = a.ring
    if not (ring.commutative and ring.has(Capability.DOMAIN)):
        raise UnsupportedCapability(f"minor oracle needs a commutative domain, got {ring.descriptor}")
    ring.require(Capability.RIGHT_EUCLIDEAN)
    gcds: List[Element] = []
    for k in range(1, min(a.rows, a.cols) + 1):
        minors = [_determinant(ring, [[a[i, j] for j in cols] for i in rows])
                  for rows in combinations(range(a.rows), k)
                  for cols in combinations(range(a.cols), k)]
        gcds.append(ring.right_gcd(minors))

    factors: List[Element] = []
    previous = ring.one
    for g in gcds:
        if g.is_zero:
            factors.append(ring.zero)
            continue
        factors.append(ring.canonical(ring.right_divide(g, previous)))
        previous = g
    return InvariantFactors(factors=tuple(factors), minor_gcds=tuple(gcds))


# --- finite rings ---

def _closure(ring: Ring, generators: FrozenSet[Element]) -> FrozenSet[Element]:
    ideal = {ring.zero}
    frontier = [ring.zero]
    while frontier:
        s = frontier.pop()
        for g in generators:
            t = s + g
            if t not in ideal:
                ideal.add(t)
                frontier.append(t)
    return frozenset(ideal)


@lru_cache(maxsize=4096)
def _right_ideal(ring: Ring, elems: Tuple[Element, ...]) -> FrozenSet[Element]:
    everything = list(ring.elements())
    return _closure(ring, frozenset(e * r for e in elems for r in everything))


@lru_cache(maxsize=4096)
def _two_sided_ideal(ring: Ring, elems: Tuple[Element, ...]) -> FrozenSet[Element]:
    everything = list(ring.elements())
    return _closure(ring, frozenset(u * e * v for e in elems for u in everything for v in everything))


def _is_unit(ring: Ring, x: Element) -> bool:
    return any(x * y == ring.one and y * x == ring.one for y in ring.elements())


def _whole(ideal: FrozenSet[Element], ring: Ring) -> bool:
    return ring.one in ideal


def exhaustive_witness_oracle(ring: Ring, condition: str, inputs: Sequence[Element]):
    """
    Ground truth over a finite ring, or None when no witness exists.

    unimodular (elems) -> True | None; sr1 (a, b); sr2 (a, b, c);
    simple2 (a, b, c); nsimple (a,) searching up to the configured NSIMPLE_MAX.
    """
    if not ring.has(Capability.FINITE):
        raise UnsupportedCapability(f"{ring.descriptor} is infinite; exhaustive oracle unavailable")
    if condition not in CONDITIONS:
        raise InvalidParameters(f"unknown condition {condition!r}, expected one of {', '.join(CONDITIONS)}")
    elems = list(ring.elements())
    inputs = tuple(inputs)
    arity = {"sr1": 2, "sr2": 3, "simple2": 3, "nsimple": 1}.get(condition)
    if arity is not None and len(inputs) != arity:
        raise InvalidParameters(f"{condition} takes {arity} elements, got {len(inputs)}")

    if condition == "unimodular":
        return True if _whole(_right_ideal(ring, inputs), ring) else None

    if condition == "sr1":
        a, b = inputs
        for t in elems:
            if _is_unit(ring, a + b * t):
                return StableRangeWitness(kind="sr1", t=t)
        return None

    if condition == "sr2":
        a, b, c = inputs
        for x, y in product(elems, repeat=2):
            if _whole(_right_ideal(ring, (a + c * x, b + c * y)), ring):
                return StableRangeWitness(kind="sr2", x=x, y=y)
        return None

    if condition == "simple2":
        a, b, c = inputs
        for p, q in product(elems, repeat=2):
            if not _whole(_right_ideal(ring, (p, q)), ring):
                continue
            if _whole(_two_sided_ideal(ring, (p * a + q * b, p * c)), ring):
                return SimpleRangeWitness(p=p, q=q, d=ring.one, d_star_unit=True, source="oracle")
        return None

    (a,) = inputs
    if a.is_zero:
        raise ZeroInput("nsimple oracle on 0")
    single = {}
    for u, v in product(elems, repeat=2):
        single.setdefault(u * a * v, (u, v))
    sums = {k: (pair,) for k, pair in single.items()}
    n_max = get_config().nsimple_max()
    for n in range(1, n_max + 1):
        if ring.one in sums:
            return SimpleDegreeResult(n=n, combination=sums[ring.one], bound=len(elems))
        grown = {}
        for value, combo in sums.items():
            for term, pair in single.items():
                grown.setdefault(value + term, combo + (pair,))
        sums = grown
    return None
