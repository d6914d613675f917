"""
Witness searches and constructive witnesses for the range conditions.

Searches draw candidates from ring.candidates(bound): every element of a
finite ring in ascending order, otherwise the first `bound` elements of the
ring's enumeration. Tuples of candidates are visited level by level (level L
holds the tuples whose largest candidate index is L); inside a level, tuples
with fewer entries at index L come first, then by the position of the first
such entry, then lexicographically. For pairs this is (L, i) for i < L, then
(i, L), then (L, L).

A search that finds nothing returns None. That is an inconclusive outcome,
never a disproof. simple_degree draws u and v from ring.multipliers(bound),
which over an infinite coefficient field adds the first `bound` constants.
"""
from itertools import product
from typing import Dict, Iterator, Optional, Sequence, Tuple

from attrs import frozen

from ed_config import get_config
from ed_errors import (HypothesisFailed, IdentityViolation, InvalidWitness, NotTwoSidedUnimodular,
                       NotUnimodular, ZeroC, ZeroInput)
from ed_logger import get_logger
from ring_core import Capability, Element, Ring
from ring_matrix import Matrix


@frozen
class StableRangeWitness:
    kind: str                      # "sr1" | "sr2"
    t: Optional[Element] = None    # sr1: (a + b*t)R = R
    x: Optional[Element] = None    # sr2: (a + c*x)R + (b + c*y)R = R
    y: Optional[Element] = None


@frozen
class SimpleRangeWitness:
    """pR + qR = R and (pa + qb)R + pcR = dR with RdR = R."""
    p: Element
    q: Element
    d: Element
    d_star_unit: bool
    source: str = "search"


@frozen
class SimpleDegreeResult:
    n: Optional[int]
    combination: Tuple[Tuple[Element, Element], ...]
    bound: int


@frozen
class KomarnytskyViolation:
    """An invariant element with a non-invariant left factor: element = factor * cofactor."""
    element: Element
    factor: Element
    cofactor: Element


def _bound(bound: Optional[int]) -> int:
    return bound if bound is not None else get_config().search_bound()


def _level_order(size: int, length: int) -> Iterator[Tuple[int, ...]]:
    for level in range(size):
        tuples = [t for t in product(range(level + 1), repeat=length) if max(t) == level]
        tuples.sort(key=lambda t: (t.count(level), t.index(level), t))
        yield from tuples


# --- unimodularity ---

def is_unimodular_row(elems: Sequence[Element]) -> bool:
    """a1*R + ... + an*R = R."""
    if not elems:
        raise ZeroInput("empty row")
    ring = elems[0].ring
    g = ring.right_gcd(list(elems))
    return not g.is_zero and ring.is_unit(g)


def is_two_sided_unimodular(elems: Sequence[Element]) -> bool:
    """R*a1*R + ... + R*an*R = R, through the two-sided generator of the right gcd."""
    if not elems:
        raise ZeroInput("empty row")
    ring = elems[0].ring
    g = ring.right_gcd(list(elems))
    return ring.generates_unit_ideal(g)


# --- stable range ---

def reducible(row: Sequence[Element], bound: Optional[int] = None) -> Optional[Tuple[Element, ...]]:
    """
    For a unimodular row (a1, ..., an, c), search t1..tn with
    (a1 + c*t1)R + ... + (an + c*tn)R = R.
    """
    if len(row) < 2:
        raise ZeroInput("a reducible row needs at least two entries")
    if not is_unimodular_row(row):
        raise NotUnimodular(f"row ({', '.join(map(str, row))}) is not unimodular")
    ring = row[0].ring
    head, c = list(row[:-1]), row[-1]
    candidates = ring.candidates(_bound(bound))
    for indices in _level_order(len(candidates), len(head)):
        ts = tuple(candidates[i] for i in indices)
        if is_unimodular_row([a + c * t for a, t in zip(head, ts)]):
            return ts
    return None


def find_stable_range1_witness(a: Element, b: Element,
                               bound: Optional[int] = None) -> Optional[StableRangeWitness]:
    found = reducible([a, b], bound)
    if found is None:
        return None
    return StableRangeWitness(kind="sr1", t=found[0])


def find_stable_range2_witness(a: Element, b: Element, c: Element,
                               bound: Optional[int] = None) -> Optional[StableRangeWitness]:
    found = reducible([a, b, c], bound)
    if found is None:
        return None
    return StableRangeWitness(kind="sr2", x=found[0], y=found[1])


# --- simple range 2 ---

def normalize_witness(p: Element, q: Element) -> Tuple[Element, Element, Element]:
    """pR + qR = tR, p = t*p0, q = t*q0; returns (p0, q0, t)."""
    if p.is_zero and q.is_zero:
        raise ZeroInput("cannot normalize the pair (0, 0)")
    w = p.ring.right_bezout(p, q)
    return w.a1, w.b1, w.g


def to_principal_form(a: Element, b: Element, c: Element, p: Element, q: Element) -> Element:
    """The canonical d with (pa + qb)R + pcR = dR."""
    left, right = p * a + q * b, p * c
    if left.is_zero and right.is_zero:
        raise ZeroInput(f"({p}, {q}) annihilates both (pa + qb) and pc")
    return a.ring.right_bezout(left, right).g


def _try_pair(a, b, c, p, q, source: str) -> Optional[SimpleRangeWitness]:
    ring = a.ring
    if p.is_zero and q.is_zero:
        return None
    p0, q0, _ = normalize_witness(p, q)
    if not is_unimodular_row([p0, q0]):
        return None
    left, right = p0 * a + q0 * b, p0 * c
    if left.is_zero and right.is_zero:
        return None
    d = ring.right_bezout(left, right).g
    if not ring.generates_unit_ideal(d):
        return None
    return SimpleRangeWitness(p=p0, q=q0, d=d, d_star_unit=True, source=source)


def _check_simple_range_input(a: Element, b: Element, c: Element):
    if c.is_zero:
        raise ZeroC("simple range 2 needs c != 0")
    if not is_two_sided_unimodular([a, b, c]):
        raise NotTwoSidedUnimodular(f"RaR + RbR + RcR != R for ({a}, {b}, {c})")


def find_simple_range2_witness(a: Element, b: Element, c: Element,
                               bound: Optional[int] = None) -> Optional[SimpleRangeWitness]:
    """p = 1 with q over the candidates first, then general pairs in level order."""
    _check_simple_range_input(a, b, c)
    ring = a.ring
    candidates = ring.candidates(_bound(bound))
    for q in candidates:
        witness = _try_pair(a, b, c, ring.one, q, "search")
        if witness is not None:
            return witness
    for i, j in _level_order(len(candidates), 2):
        p, q = candidates[i], candidates[j]
        if p == ring.one:
            continue
        witness = _try_pair(a, b, c, p, q, "search")
        if witness is not None:
            return witness
    get_logger().debug(f"simple range 2 search exhausted for ({a}, {b}, {c}) over {ring.descriptor}")
    return None


def validate_simple_range_witness(a: Element, b: Element, c: Element, w: SimpleRangeWitness) -> bool:
    ring = a.ring
    if not is_unimodular_row([w.p, w.q]):
        return False
    left, right = w.p * a + w.q * b, w.p * c
    if left.is_zero and right.is_zero:
        return False
    d = ring.right_bezout(left, right).g
    return d == w.d and ring.generates_unit_ideal(d) and w.d_star_unit


def _assert_identity(holds: bool, identity: str, detail: str = None):
    if not holds:
        raise IdentityViolation(identity, detail)


def construct_simple_range2_witness(a: Element, b: Element, c: Element,
                      bound: Optional[int] = None) -> SimpleRangeWitness:
    """
    Constructive witness p = 1, q = t for a Bezout ring of stable range 1.

    aR + bR = dR with a = d*a1, b = d*b1, a*u + b*v = d; c' = 1 - a1*u - b1*v
    has d*c' = 0. Stable range 2 on (a1, b1, c') gives (lam, mu) and
    a0 = a1 + c'*lam, b0 = b1 + c'*mu with a = d*a0, b = d*b0, a0R + b0R = R.
    Stable range 1 on (a0, b0) gives t with a0 + b0*t a unit, so
    (a + b*t)R = dR and R(a + b*t)R + RcR = RaR + RbR + RcR = R.
    """
    _check_simple_range_input(a, b, c)
    ring = a.ring
    one = ring.one
    if ring.is_unit(a) or (a.is_zero and b.is_zero):
        witness = _try_pair(a, b, c, one, ring.zero, "construction")
        _assert_identity(witness is not None, "R*a*R + R*c*R = R")
        return witness

    w = ring.right_bezout(a, b)
    d, a1, b1, u, v = w.g, w.a1, w.b1, w.s, w.t
    _assert_identity(a * u + b * v == d, "a*u + b*v = d")
    _assert_identity(a == d * a1 and b == d * b1, "a = d*a1, b = d*b1")
    c_prime = one - a1 * u - b1 * v
    _assert_identity((d * c_prime).is_zero, "d*(1 - a1*u - b1*v) = 0", f"d = {d}, c' = {c_prime}")
    _assert_identity(is_unimodular_row([a1, b1, c_prime]), "a1*R + b1*R + c'*R = R")

    sr2 = find_stable_range2_witness(a1, b1, c_prime, bound)
    if sr2 is None:
        raise HypothesisFailed(f"no stable range 2 witness for ({a1}, {b1}, {c_prime}) within bound")
    a0, b0 = a1 + c_prime * sr2.x, b1 + c_prime * sr2.y
    _assert_identity(is_unimodular_row([a0, b0]), "a0*R + b0*R = R")
    _assert_identity(a == d * a0 and b == d * b0, "a = d*a0, b = d*b0")

    sr1 = find_stable_range1_witness(a0, b0, bound)
    if sr1 is None:
        raise HypothesisFailed(f"no stable range 1 witness for ({a0}, {b0}) within bound")
    t = sr1.t
    unit = a0 + b0 * t
    _assert_identity(ring.is_unit(unit), "a0 + b0*t is a unit", str(unit))
    _assert_identity(a + b * t == d * unit, "a + b*t = d*(a0 + b0*t)")

    d_principal = to_principal_form(a, b, c, one, t)
    _assert_identity(ring.generates_unit_ideal(d_principal), "R*(a + b*t)*R + R*c*R = R")
    witness = SimpleRangeWitness(p=one, q=t, d=d_principal, d_star_unit=True, source="construction")
    _assert_identity(validate_simple_range_witness(a, b, c, witness), "witness validates")
    return witness


def witness_from_reduction(a: Element, b: Element, c: Element,
                           bound: Optional[int] = None) -> SimpleRangeWitness:
    """Read (p, q) from the first row of P in a canonical reduction of [[a, c], [b, 0]]."""
    from reduction import canonical_2x2

    _check_simple_range_input(a, b, c)
    ring = a.ring
    if b.is_zero:
        p, q = ring.one, ring.one
    else:
        cert, _ = canonical_2x2(Matrix.of(ring, [[a, c], [b, ring.zero]]), bound)
        p, q = cert.P[0, 0], cert.P[0, 1]
    d = to_principal_form(a, b, c, p, q)
    witness = SimpleRangeWitness(p=p, q=q, d=d, d_star_unit=ring.generates_unit_ideal(d),
                                 source="reduction")
    if not validate_simple_range_witness(a, b, c, witness):
        raise InvalidWitness(f"reduction produced an invalid witness ({p}, {q})")
    return witness


# --- two-sided ideal probes ---

def check_unit_ideal_product(a: Element, b: Element) -> bool:
    """RaR = R and RbR = R imply RabR = R."""
    ring = a.ring
    ring.require(Capability.TWO_SIDED_GENERATOR_COMPUTABLE)
    if not (ring.generates_unit_ideal(a) and ring.generates_unit_ideal(b)):
        return True
    return ring.generates_unit_ideal(a * b)


def simple_degree(a: Element, n_max: Optional[int] = None,
                  coeff_bound: Optional[int] = None) -> SimpleDegreeResult:
    """Smallest n with u1*a*v1 + ... + un*a*vn = 1 over the bounded candidates."""
    if a.is_zero:
        raise ZeroInput("simple_degree(0)")
    config = get_config()
    n_max = n_max if n_max is not None else config.nsimple_max()
    coeff_bound = coeff_bound if coeff_bound is not None else config.coeff_bound()
    ring = a.ring
    if ring.is_unit(a):
        return SimpleDegreeResult(n=1, combination=((ring.inverse(a), ring.one),), bound=coeff_bound)
    if ring.commutative:
        # sum u*a*v lies in aR != R
        return SimpleDegreeResult(n=None, combination=(), bound=coeff_bound)

    candidates = ring.multipliers(coeff_bound)
    single: Dict[Element, Tuple[Element, Element]] = {}
    for v in candidates:
        for u in candidates:
            single.setdefault(u * a * v, (u, v))
    one = ring.one
    if one in single:
        return SimpleDegreeResult(n=1, combination=(single[one],), bound=coeff_bound)

    sums: Dict[Element, Tuple[Tuple[Element, Element], ...]] = {k: (pair,) for k, pair in single.items()}
    for n in range(2, n_max + 1):
        for value, combo in sums.items():
            rest = one - value
            if rest in single:
                return SimpleDegreeResult(n=n, combination=combo + (single[rest],), bound=coeff_bound)
        if n == n_max:
            break
        grown: Dict[Element, Tuple[Tuple[Element, Element], ...]] = {}
        for value, combo in sums.items():
            for term, pair in single.items():
                grown.setdefault(value + term, combo + (pair,))
        sums = grown
    return SimpleDegreeResult(n=None, combination=(), bound=coeff_bound)


def find_komarnytsky_violation(ring: Ring, bound: Optional[int] = None) -> Optional[KomarnytskyViolation]:
    """Sample invariant elements and look for a non-invariant left factor among right gcds."""
    ring.require(Capability.INVARIANCE_DECIDABLE)
    if ring.commutative:
        return None
    candidates = [e for e in ring.candidates(_bound(bound)) if not e.is_zero]
    for e in candidates:
        if ring.is_unit(e) or not ring.is_invariant(e):
            continue
        for f in candidates:
            g = ring.right_bezout(e, f).g
            if ring.is_unit(g) or ring.is_associate(g, e):
                continue
            if not ring.is_invariant(g):
                return KomarnytskyViolation(element=e, factor=g, cofactor=ring.right_divide(e, g))
    return None
