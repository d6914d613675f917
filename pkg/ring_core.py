"""
Effective ring contract shared by every concrete ring.

A Ring is an immutable handle described by a RingDescriptor (kind plus
parameters), a capability set and a finite list of algebra generators.
Elements are immutable values owning a reference to their ring; equality
is syntactic on the canonical payload.

Generic procedures built on the Euclidean primitives live here:

- right_bezout / left_bezout: extended Euclid with exact cofactors and
  canonical (unit-normalized) generators.
- is_invariant: aR = Ra is decided on the algebra generators only. If
  r*a is in aR and a*r is in Ra for every generator r, the same holds for
  sums (aR, Ra are additive groups) and for products, since
  r1*r2*a = r1*(a*x) = (r1*a)*x lies in aR and a*r1*r2 = y*a*r2 lies in Ra.
  The prime subring is central, so generators over it suffice.
- two_sided_generator: closure h <- right gcd(h, r*h) over the generators,
  starting from h = a. Each strict update enlarges hR, so the Euclidean
  size of h drops and the loop stops; on exit hR is a two-sided ideal
  containing a and contained in RaR, hence hR = RaR.
"""
from abc import ABC, abstractmethod
from enum import Enum
from itertools import islice
from typing import Any, Dict, Iterator, List, Optional, Tuple

from attrs import frozen

from ed_errors import (DivisionByZero, MixedRings, NotAUnit, RingError,
                       UnsupportedCapability, ZeroInput)


class Capability(str, Enum):
    COMMUTATIVE = "commutative"
    DOMAIN = "domain"
    RIGHT_EUCLIDEAN = "rightEuclidean"
    LEFT_EUCLIDEAN = "leftEuclidean"
    FINITE = "finite"
    INVARIANCE_DECIDABLE = "invarianceDecidable"
    TWO_SIDED_GENERATOR_COMPUTABLE = "twoSidedGeneratorComputable"


DECIDABILITY_FLAGS = (
    Capability.RIGHT_EUCLIDEAN,
    Capability.LEFT_EUCLIDEAN,
    Capability.INVARIANCE_DECIDABLE,
    Capability.TWO_SIDED_GENERATOR_COMPUTABLE,
)


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


@frozen
class RingDescriptor:
    """Ring identity: kind plus sorted (name, value) parameters."""
    kind: str
    params: Tuple[Tuple[str, int], ...] = ()

    def to_spec(self) -> Dict[str, Any]:
        return {"kind": self.kind, "params": dict(self.params)}

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.kind}({inner})"


@frozen(repr=False)
class Element:
    ring: "Ring"
    payload: Any

    @property
    def is_zero(self) -> bool:
        return self.ring.is_zero(self)

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.add(self, other)

    def __radd__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.add(other, self)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.add(self, self.ring.neg(other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.add(other, self.ring.neg(self))

    def __neg__(self):
        return self.ring.neg(self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.mul(other, self)

    def __pow__(self, exponent: int):
        return self.ring.power(self, exponent)

    def __str__(self) -> str:
        return self.ring.format(self)

    def __repr__(self) -> str:
        return f"Element({self.ring.descriptor}, {self})"


@frozen
class BezoutWitness:
    """
    Generator of aR + bR (side RIGHT) or Ra + Rb (side LEFT) with cofactors.

    RIGHT: a*s + b*t = g, a = g*a1, b = g*b1.
    LEFT:  s*a + t*b = g, a = a1*g, b = b1*g.
    """
    g: Element
    s: Element
    t: Element
    a1: Element
    b1: Element
    side: Side = Side.RIGHT

    def holds(self, a: Element, b: Element) -> bool:
        if self.side == Side.RIGHT:
            return (a * self.s + b * self.t == self.g
                    and a == self.g * self.a1 and b == self.g * self.b1)
        return (self.s * a + self.t * b == self.g
                and a == self.a1 * self.g and b == self.b1 * self.g)


@frozen
class TwoSidedGenerator:
    """a_star with RaR = a_star*R = R*a_star, and sum(u*a*v) = a_star."""
    a_star: Element
    combination: Tuple[Tuple[Element, Element], ...]
    right_quotient: Element   # a = a_star * right_quotient
    left_quotient: Element    # a = left_quotient * a_star

    def evaluate(self, a: Element) -> Element:
        total = a.ring.zero
        for u, v in self.combination:
            total = total + u * a * v
        return total

    def holds(self, a: Element) -> bool:
        return (self.evaluate(a) == self.a_star
                and a == self.a_star * self.right_quotient
                and a == self.left_quotient * self.a_star)


def _merge_combination(terms: List[Tuple[Element, Element]]) -> List[Tuple[Element, Element]]:
    """Collect terms sharing a left factor; u*a*v1 + u*a*v2 = u*a*(v1+v2)."""
    merged: Dict[Element, Element] = {}
    for u, v in terms:
        if u.is_zero or v.is_zero:
            continue
        merged[u] = merged[u] + v if u in merged else v
    return [(u, v) for u, v in merged.items() if not v.is_zero]


class Ring(ABC):
    """
    Base class of every effective ring.

    Subclasses provide payload arithmetic, the Euclidean size, both
    divisions with remainder, unit handling, formatting and enumeration.
    """

    def __init__(self, descriptor: RingDescriptor, capabilities):
        self.descriptor = descriptor
        self.capabilities = frozenset(capabilities)
        self._check_capabilities()
        self._zero = self._zero_payload()
        self.zero = Element(self, self._zero)
        self.one = Element(self, self._one_payload())

    def _check_capabilities(self):
        caps = self.capabilities
        if Capability.FINITE in caps and not all(flag in caps for flag in DECIDABILITY_FLAGS):
            raise RingError(f"{self.descriptor}: finite rings must set every decidability flag")
        if Capability.COMMUTATIVE in caps and Capability.INVARIANCE_DECIDABLE not in caps:
            raise RingError(f"{self.descriptor}: commutative rings decide invariance trivially")

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.descriptor == other.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __repr__(self) -> str:
        return f"<Ring {self.descriptor}>"

    # --- capabilities ---

    def has(self, capability: Capability) -> bool:
        return capability in self.capabilities

    def require(self, *capabilities: Capability):
        missing = [c.value for c in capabilities if c not in self.capabilities]
        if missing:
            raise UnsupportedCapability(f"{self.descriptor} lacks {', '.join(missing)}")

    @property
    def commutative(self) -> bool:
        return Capability.COMMUTATIVE in self.capabilities

    # --- payload primitives ---

    @abstractmethod
    def _zero_payload(self) -> Any: ...

    @abstractmethod
    def _one_payload(self) -> Any: ...

    @abstractmethod
    def _add(self, p: Any, q: Any) -> Any: ...

    @abstractmethod
    def _neg(self, p: Any) -> Any: ...

    @abstractmethod
    def _mul(self, p: Any, q: Any) -> Any: ...

    @abstractmethod
    def from_int(self, n: int) -> Element: ...

    @abstractmethod
    def norm(self, a: Element) -> int:
        """Euclidean size; 0 exactly for zero."""

    @abstractmethod
    def _right_divmod(self, a: Element, b: Element) -> Tuple[Element, Element]:
        """(q, r) with a = b*q + r and norm(r) < norm(b)."""

    @abstractmethod
    def _left_divmod(self, a: Element, b: Element) -> Tuple[Element, Element]:
        """(q, r) with a = q*b + r and norm(r) < norm(b)."""

    @abstractmethod
    def is_unit(self, a: Element) -> bool: ...

    @abstractmethod
    def _inverse(self, a: Element) -> Element: ...

    @abstractmethod
    def right_normalizer(self, a: Element) -> Element:
        """Unit u such that a*u is the canonical generator of aR."""

    @abstractmethod
    def left_normalizer(self, a: Element) -> Element:
        """Unit u such that u*a is the canonical generator of Ra."""

    @property
    @abstractmethod
    def generators(self) -> Tuple[Element, ...]: ...

    @property
    @abstractmethod
    def symbols(self) -> Dict[str, Element]: ...

    @abstractmethod
    def format(self, a: Element) -> str: ...

    @abstractmethod
    def enumerate(self) -> Iterator[Element]:
        """Fixed, documented enumeration order used by every search."""

    def from_fraction(self, numerator: int, denominator: int) -> Element:
        raise UnsupportedCapability(f"{self.descriptor} has no rational literals")

    def elements(self) -> Iterator[Element]:
        if not self.has(Capability.FINITE):
            raise UnsupportedCapability(f"{self.descriptor} is not finite")
        return self.enumerate()

    def candidates(self, bound: int) -> List[Element]:
        """Finite rings: every element. Infinite rings: the first `bound` elements."""
        if self.has(Capability.FINITE):
            return list(self.elements())
        return list(islice(self.enumerate(), bound))

    def multipliers(self, bound: int) -> List[Element]:
        """Left and right factors for u*a*v searches."""
        return self.candidates(bound)

    # --- arithmetic ---

    def element(self, payload: Any) -> Element:
        return Element(self, payload)

    def _check(self, *elements: Element):
        for e in elements:
            if e.ring != self:
                raise MixedRings(f"{e.ring.descriptor} element used in {self.descriptor}")

    def is_zero(self, a: Element) -> bool:
        return a.payload == self._zero

    def add(self, a: Element, b: Element) -> Element:
        self._check(a, b)
        return Element(self, self._add(a.payload, b.payload))

    def neg(self, a: Element) -> Element:
        self._check(a)
        return Element(self, self._neg(a.payload))

    def mul(self, a: Element, b: Element) -> Element:
        self._check(a, b)
        return Element(self, self._mul(a.payload, b.payload))

    def power(self, a: Element, exponent: int) -> Element:
        if exponent < 0:
            raise ValueError("negative exponent")
        result, base = self.one, a
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self, a: Element) -> Element:
        self._check(a)
        if not self.is_unit(a):
            raise NotAUnit(f"{a} is not a unit of {self.descriptor}")
        return self._inverse(a)

    def is_associate(self, a: Element, b: Element) -> bool:
        """a and b generate the same right ideal."""
        if a.is_zero or b.is_zero:
            return a.is_zero and b.is_zero
        return self.right_divide(a, b) is not None and self.right_divide(b, a) is not None

    # --- division ---

    def right_divmod(self, a: Element, b: Element) -> Tuple[Element, Element]:
        self._check(a, b)
        self.require(Capability.RIGHT_EUCLIDEAN)
        if b.is_zero:
            raise DivisionByZero("right division by zero")
        return self._right_divmod(a, b)

    def left_divmod(self, a: Element, b: Element) -> Tuple[Element, Element]:
        self._check(a, b)
        self.require(Capability.LEFT_EUCLIDEAN)
        if b.is_zero:
            raise DivisionByZero("left division by zero")
        return self._left_divmod(a, b)

    def right_divide(self, a: Element, b: Element) -> Optional[Element]:
        """q with a = b*q, or None."""
        q, r = self.right_divmod(a, b)
        return q if r.is_zero else None

    def left_divide(self, a: Element, b: Element) -> Optional[Element]:
        """q with a = q*b, or None."""
        q, r = self.left_divmod(a, b)
        return q if r.is_zero else None

    # --- Bezout ---

    def right_bezout(self, a: Element, b: Element) -> BezoutWitness:
        self._check(a, b)
        self.require(Capability.RIGHT_EUCLIDEAN)
        if a.is_zero and b.is_zero:
            raise ZeroInput("right_bezout(0, 0)")
        r0, s0, t0 = a, self.one, self.zero
        r1, s1, t1 = b, self.zero, self.one
        while not r1.is_zero:
            q, rem = self._right_divmod(r0, r1)
            r0, s0, t0, r1, s1, t1 = r1, s1, t1, rem, s0 - s1 * q, t0 - t1 * q
        u = self.right_normalizer(r0)
        g, s, t = r0 * u, s0 * u, t0 * u
        a1 = self.right_divide(a, g)
        b1 = self.right_divide(b, g)
        return BezoutWitness(g=g, s=s, t=t, a1=a1, b1=b1, side=Side.RIGHT)

    def left_bezout(self, a: Element, b: Element) -> BezoutWitness:
        self._check(a, b)
        self.require(Capability.LEFT_EUCLIDEAN)
        if a.is_zero and b.is_zero:
            raise ZeroInput("left_bezout(0, 0)")
        r0, s0, t0 = a, self.one, self.zero
        r1, s1, t1 = b, self.zero, self.one
        while not r1.is_zero:
            q, rem = self._left_divmod(r0, r1)
            r0, s0, t0, r1, s1, t1 = r1, s1, t1, rem, s0 - q * s1, t0 - q * t1
        u = self.left_normalizer(r0)
        g, s, t = u * r0, u * s0, u * t0
        a1 = self.left_divide(a, g)
        b1 = self.left_divide(b, g)
        return BezoutWitness(g=g, s=s, t=t, a1=a1, b1=b1, side=Side.LEFT)

    def right_gcd(self, elements: List[Element]) -> Element:
        """Canonical generator of a1*R + ... + an*R (zero when all vanish)."""
        g = self.zero
        for e in elements:
            if g.is_zero and e.is_zero:
                continue
            g = self.right_bezout(g, e).g
        return g

    def canonical(self, a: Element) -> Element:
        if a.is_zero:
            return a
        return a * self.right_normalizer(a)

    # --- invariance and two-sided ideals ---

    def is_invariant(self, a: Element) -> bool:
        self._check(a)
        self.require(Capability.INVARIANCE_DECIDABLE)
        if self.commutative or a.is_zero:
            return True
        for r in self.generators:
            if self.right_divide(r * a, a) is None:
                return False
            if self.left_divide(a * r, a) is None:
                return False
        return True

    def two_sided_generator(self, a: Element) -> TwoSidedGenerator:
        self._check(a)
        self.require(Capability.TWO_SIDED_GENERATOR_COMPUTABLE)
        if a.is_zero:
            raise ZeroInput("two_sided_generator(0)")
        if self.commutative:
            return TwoSidedGenerator(a_star=a, combination=((self.one, self.one),),
                                     right_quotient=self.one, left_quotient=self.one)
        h = a
        combination = [(self.one, self.one)]
        changed = True
        while changed:
            changed = False
            for r in self.generators:
                rh = r * h
                if self.right_divide(rh, h) is not None:
                    continue
                w = self.right_bezout(h, rh)
                combination = _merge_combination(
                    [(u, v * w.s) for u, v in combination]
                    + [(r * u, v * w.t) for u, v in combination])
                h = w.g
                changed = True
        unit = self.right_normalizer(h)
        if unit != self.one:
            h = h * unit
            combination = [(u, v * unit) for u, v in combination]
        if not self.is_invariant(h):
            raise RingError(f"{self.descriptor}: two-sided ideal generator {h} is not invariant")
        return TwoSidedGenerator(
            a_star=h,
            combination=tuple(combination),
            right_quotient=self.right_divide(a, h),
            left_quotient=self.left_divide(a, h),
        )

    def generates_unit_ideal(self, a: Element) -> bool:
        """RaR = R."""
        if a.is_zero:
            return False
        return self.is_unit(self.two_sided_generator(a).a_star)


# Free-function entry points; each dispatches to the owning ring.

def add(a: Element, b: Element) -> Element:
    return a.ring.add(a, b)


def mul(a: Element, b: Element) -> Element:
    return a.ring.mul(a, b)


def neg(a: Element) -> Element:
    return a.ring.neg(a)


def right_divide(a: Element, b: Element) -> Optional[Element]:
    return a.ring.right_divide(a, b)


def left_divide(a: Element, b: Element) -> Optional[Element]:
    return a.ring.left_divide(a, b)


def right_bezout(a: Element, b: Element) -> BezoutWitness:
    return a.ring.right_bezout(a, b)


def left_bezout(a: Element, b: Element) -> BezoutWitness:
    return a.ring.left_bezout(a, b)


def is_unit(a: Element) -> bool:
    return a.ring.is_unit(a)


def is_invariant(a: Element) -> bool:
    return a.ring.is_invariant(a)


def two_sided_generator(a: Element) -> TwoSidedGenerator:
    return a.ring.two_sided_generator(a)
