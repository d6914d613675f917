"""
Concrete effective rings and the RingSpec input boundary.

Instances and their algebra generators (over the prime subring):

- Int: Z, generator 1. Euclidean size |a|.
- IntMod(n): Z/n, generator 1. Euclidean size gcd(a, n), 0 for zero;
  finite, so every decidability flag is set.
- PolyRat: Q[x], generator x (constants are central).
- PolyFp(p): F_p[x], generator x.
- SkewPolyFq(p, n, twist): F_{p^n}[x; sigma] with x*a = sigma(a)*x and
  sigma(a) = a^(p^twist); generators g (primitive root of the stored
  minimal polynomial) and x.
- QuatPoly: H_Q[x], rational quaternion coefficients, x central;
  generators i, j and x (k = i*j).

Polynomial payloads are tuples of coefficients, lowest degree first, with
no trailing zeros. Euclidean size of a polynomial is deg + 1.
"""
from enum import Enum
from itertools import count, islice, product
from math import gcd
from typing import Any, Dict, List, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from sympy import isprime

from coefficient_fields import (CONWAY_POLYNOMIALS, CoefficientField, ExtensionField,
                                PrimeField, QuaternionField, RationalField)
from ed_errors import InvalidParameters
from ring_core import Capability, Element, Ring, RingDescriptor


EUCLIDEAN_CAPABILITIES = (
    Capability.DOMAIN,
    Capability.RIGHT_EUCLIDEAN,
    Capability.LEFT_EUCLIDEAN,
    Capability.INVARIANCE_DECIDABLE,
    Capability.TWO_SIDED_GENERATOR_COMPUTABLE,
)


class IntegerRing(Ring):

    def __init__(self):
        super().__init__(RingDescriptor("Int"),
                         (Capability.COMMUTATIVE,) + EUCLIDEAN_CAPABILITIES)

    def _zero_payload(self):
        return 0

    def _one_payload(self):
        return 1

    def _add(self, p, q):
        return p + q

    def _neg(self, p):
        return -p

    def _mul(self, p, q):
        return p * q

    def from_int(self, n):
        return Element(self, n)

    def norm(self, a):
        return abs(a.payload)

    def _right_divmod(self, a, b):
        q, r = divmod(a.payload, b.payload)
        return Element(self, q), Element(self, r)

    _left_divmod = _right_divmod

    def is_unit(self, a):
        return abs(a.payload) == 1

    def _inverse(self, a):
        return a

    def right_normalizer(self, a):
        return Element(self, -1 if a.payload < 0 else 1)

    left_normalizer = right_normalizer

    @property
    def generators(self):
        return (self.one,)

    @property
    def symbols(self):
        return {}

    def format(self, a):
        return str(a.payload)

    def enumerate(self):
        """0, 1, -1, 2, -2, ..."""
        yield self.zero
        for h in count(1):
            yield Element(self, h)
            yield Element(self, -h)


class IntegerModRing(Ring):

    def __init__(self, n: int):
        self.n = n
        super().__init__(
            RingDescriptor("IntMod", (("n", n),)),
            (Capability.COMMUTATIVE, Capability.FINITE, Capability.RIGHT_EUCLIDEAN,
             Capability.LEFT_EUCLIDEAN, Capability.INVARIANCE_DECIDABLE,
             Capability.TWO_SIDED_GENERATOR_COMPUTABLE))

    def _zero_payload(self):
        return 0

    def _one_payload(self):
        return 1 % self.n

    def _add(self, p, q):
        return (p + q) % self.n

    def _neg(self, p):
        return (-p) % self.n

    def _mul(self, p, q):
        return (p * q) % self.n

    def from_int(self, n):
        return Element(self, n % self.n)

    def norm(self, a):
        return gcd(a.payload, self.n) if a.payload else 0

    def _right_divmod(self, a, b):
        # bR = gR with g = gcd(b, n); the remainder is a mod g, which is
        # either zero or has gcd with n at most itself, below g.
        g = gcd(b.payload, self.n)
        r = a.payload % g
        m = self.n // g
        c = (a.payload - r) // g
        q = (c * pow(b.payload // g, -1, m)) % m if m > 1 else 0
        return Element(self, q), Element(self, r)

    _left_divmod = _right_divmod

    def is_unit(self, a):
        return gcd(a.payload, self.n) == 1

    def _inverse(self, a):
        return Element(self, pow(a.payload, -1, self.n))

    def right_normalizer(self, a):
        """Unit u with a*u = gcd(a, n)."""
        if not a.payload:
            return self.one
        d = gcd(a.payload, self.n)
        m = self.n // d
        base = pow(a.payload // d, -1, m) if m > 1 else 0
        for k in range(d + 1):
            u = base + k * m
            if gcd(u, self.n) == 1:
                return Element(self, u % self.n)
        raise InvalidParameters(f"no unit lift for {a} in {self.descriptor}")

    left_normalizer = right_normalizer

    @property
    def generators(self):
        return (self.one,)

    @property
    def symbols(self):
        return {}

    def format(self, a):
        return str(a.payload)

    def enumerate(self):
        """Ascending representatives 0, 1, ..., n-1."""
        for v in range(self.n):
            yield Element(self, v)


class PolynomialRing(Ring):
    """Polynomials over a coefficient division ring, possibly twisted by sigma."""

    def __init__(self, descriptor: RingDescriptor, coefficients: CoefficientField,
                 generator_names: Tuple[str, ...] = ()):
        self.field = coefficients
        self._generator_names = generator_names
        commutative = coefficients.commutative and coefficients.twist_order == 1
        caps = EUCLIDEAN_CAPABILITIES + ((Capability.COMMUTATIVE,) if commutative else ())
        super().__init__(descriptor, caps)
        self.x = Element(self, (coefficients.zero, coefficients.one))

    # --- payload helpers ---

    def _trim(self, coeffs) -> Tuple[Any, ...]:
        coeffs = list(coeffs)
        while coeffs and self.field.is_zero(coeffs[-1]):
            coeffs.pop()
        return tuple(coeffs)

    def constant(self, c) -> Element:
        return Element(self, self._trim((c,)))

    def monomial(self, c, degree: int) -> Element:
        return Element(self, self._trim((self.field.zero,) * degree + (c,)))

    def degree(self, a: Element) -> int:
        return len(a.payload) - 1

    def leading(self, a: Element):
        return a.payload[-1]

    # --- ring primitives ---

    def _zero_payload(self):
        return ()

    def _one_payload(self):
        return (self.field.one,)

    def _add(self, p, q):
        F = self.field
        if len(p) < len(q):
            p, q = q, p
        out = list(p)
        for i, c in enumerate(q):
            out[i] = F.add(out[i], c)
        return self._trim(out)

    def _neg(self, p):
        return tuple(self.field.neg(c) for c in p)

    def _mul(self, p, q):
        if not p or not q:
            return ()
        F = self.field
        twisted = F.twist_order > 1
        out = [F.zero] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            if F.is_zero(a):
                continue
            # x^i * b = sigma^i(b) * x^i
            shifted = [F.frobenius(b, i) for b in q] if twisted else q
            for j, b in enumerate(shifted):
                if not F.is_zero(b):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return self._trim(out)

    def from_int(self, n):
        return self.constant(self.field.from_int(n))

    def from_fraction(self, numerator, denominator):
        return self.constant(self.field.from_fraction(numerator, denominator))

    def norm(self, a):
        return len(a.payload)

    def _right_divmod(self, a, b):
        F = self.field
        n = self.degree(b)
        lead_inv = F.inv(self.leading(b))
        quotient: Dict[int, Any] = {}
        r = a.payload
        while len(r) - 1 >= n:
            k = len(r) - 1 - n
            # b * (c x^k) leads with beta * sigma^n(c)
            c = F.frobenius(F.mul(lead_inv, r[-1]), -n)
            quotient[k] = c
            r = self._add(r, self._neg(self._mul(b.payload, self.monomial(c, k).payload)))
        return self._from_terms(quotient), Element(self, r)

    def _left_divmod(self, a, b):
        F = self.field
        n = self.degree(b)
        beta = self.leading(b)
        quotient: Dict[int, Any] = {}
        r = a.payload
        while len(r) - 1 >= n:
            k = len(r) - 1 - n
            # (c x^k) * b leads with c * sigma^k(beta)
            c = F.mul(r[-1], F.inv(F.frobenius(beta, k)))
            quotient[k] = c
            r = self._add(r, self._neg(self._mul(self.monomial(c, k).payload, b.payload)))
        return self._from_terms(quotient), Element(self, r)

    def _from_terms(self, terms: Dict[int, Any]) -> Element:
        if not terms:
            return self.zero
        coeffs = [self.field.zero] * (max(terms) + 1)
        for k, c in terms.items():
            coeffs[k] = c
        return Element(self, self._trim(coeffs))

    def is_unit(self, a):
        return len(a.payload) == 1

    def _inverse(self, a):
        return self.constant(self.field.inv(a.payload[0]))

    def right_normalizer(self, a):
        """Constant c with a*c monic: sigma^deg(c) = lc^-1."""
        if a.is_zero:
            return self.one
        F = self.field
        return self.constant(F.frobenius(F.inv(self.leading(a)), -self.degree(a)))

    def left_normalizer(self, a):
        if a.is_zero:
            return self.one
        return self.constant(self.field.inv(self.leading(a)))

    @property
    def generators(self):
        named = tuple(self.constant(self.field.symbols[s]) for s in self._generator_names)
        return named + (self.x,)

    @property
    def symbols(self):
        table = {name: self.constant(c) for name, c in self.field.symbols.items()}
        table["x"] = self.x
        return table

    def format(self, a):
        if a.is_zero:
            return "0"
        F = self.field
        minus_one = F.neg(F.one)
        terms = []
        for e in range(self.degree(a), -1, -1):
            c = a.payload[e]
            if F.is_zero(c):
                continue
            text, compound = F.fmt(c)
            mono = "x" if e == 1 else f"x^{e}"
            if e == 0:
                terms.append(text)
            elif c == F.one:
                terms.append(mono)
            elif c == minus_one:
                terms.append(f"-{mono}")
            elif compound:
                terms.append(f"({text})*{mono}")
            else:
                terms.append(f"{text}*{mono}")
        out = terms[0]
        for term in terms[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def enumerate(self):
        """
        Finite coefficients: degree-lexicographic, leading coefficient first,
        coefficients in field order. Infinite coefficients: by level L, every
        polynomial of degree < L over the first L field elements not seen at
        level L - 1, each level in degree-lexicographic order.
        """
        F = self.field
        yield self.zero
        if F.finite:
            values = list(F.enumerate())
            leads = [c for c in values if not F.is_zero(c)]
            for d in count(0):
                for lead in leads:
                    for rest in product(values, repeat=d):
                        yield Element(self, tuple(reversed(rest)) + (lead,))
            return
        pool = []
        source = F.enumerate()
        for level in count(1):
            pool.append(next(source))
            newest = level - 1
            for d in range(level):
                for lead in range(1, level):
                    for rest in product(range(level), repeat=d):
                        if d != newest and lead != newest and newest not in rest:
                            continue
                        coeffs = tuple(pool[i] for i in reversed(rest)) + (pool[lead],)
                        yield Element(self, coeffs)

    def multipliers(self, bound: int) -> List[Element]:
        """
        Infinite coefficients: candidates(bound) plus the first `bound` constants,
        since the level order never reaches a constant like k/2 within a usable bound.
        """
        out = self.candidates(bound)
        if self.field.finite:
            return out
        seen = set(out)
        for c in islice(self.field.enumerate(), bound):
            e = self.constant(c)
            if e not in seen:
                seen.add(e)
                out.append(e)
        return out


# --- RingSpec: validated input boundary ---

class RingKind(str, Enum):
    INT = "Int"
    INT_MOD = "IntMod"
    POLY_RAT = "PolyRat"
    POLY_FP = "PolyFp"
    SKEW_POLY_FQ = "SkewPolyFq"
    QUAT_POLY = "QuatPoly"


_ALLOWED_PARAMS = {
    RingKind.INT: set(),
    RingKind.INT_MOD: {"n"},
    RingKind.POLY_RAT: set(),
    RingKind.POLY_FP: {"p"},
    RingKind.SKEW_POLY_FQ: {"p", "n", "twist"},
    RingKind.QUAT_POLY: set(),
}


class RingSpec(BaseModel):
    """JSON object {"kind": ..., "params": {...}} naming a ring instance."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: RingKind
    params: Dict[str, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_params(self):
        params = self.params
        unknown = set(params) - _ALLOWED_PARAMS[self.kind]
        if unknown:
            raise ValueError(f"unknown parameters for {self.kind.value}: {sorted(unknown)}")
        if self.kind == RingKind.INT_MOD:
            if params.get("n", 0) < 2:
                raise ValueError("IntMod needs n >= 2")
        elif self.kind == RingKind.POLY_FP:
            if not isprime(params.get("p", 0)):
                raise ValueError(f"PolyFp needs a prime p, got {params.get('p')}")
        elif self.kind == RingKind.SKEW_POLY_FQ:
            p, n = params.get("p", 0), params.get("n", 0)
            if not isprime(p):
                raise ValueError(f"SkewPolyFq needs a prime p, got {p}")
            if (p, n) not in CONWAY_POLYNOMIALS:
                known = ", ".join(f"({a},{b})" for a, b in sorted(CONWAY_POLYNOMIALS))
                raise ValueError(f"no stored minimal polynomial for (p, n) = ({p}, {n}); known: {known}")
            twist = params.get("twist", 1)
            if not 1 <= twist < n:
                raise ValueError(f"twist must be in [1, {n}), got {twist}")
        return self

    @classmethod
    def from_json(cls, data: Union[str, Dict[str, Any]]) -> "RingSpec":
        try:
            if isinstance(data, str):
                return cls.model_validate_json(data)
            return cls.model_validate(data)
        except ValidationError as e:
            raise InvalidParameters(f"invalid ring spec: {e}") from e

    def to_json(self) -> Dict[str, Any]:
        params = dict(sorted(self.params.items()))
        if self.kind == RingKind.SKEW_POLY_FQ:
            params.setdefault("twist", 1)
            params = dict(sorted(params.items()))
        return {"kind": self.kind.value, "params": params}


def make_ring(spec: Union[RingSpec, str, Dict[str, Any]]) -> Ring:
    if not isinstance(spec, RingSpec):
        spec = RingSpec.from_json(spec)
    params = spec.params
    if spec.kind == RingKind.INT:
        return IntegerRing()
    if spec.kind == RingKind.INT_MOD:
        return IntegerModRing(params["n"])
    if spec.kind == RingKind.POLY_RAT:
        return PolynomialRing(RingDescriptor("PolyRat"), RationalField())
    if spec.kind == RingKind.POLY_FP:
        p = params["p"]
        return PolynomialRing(RingDescriptor("PolyFp", (("p", p),)), PrimeField(p))
    if spec.kind == RingKind.SKEW_POLY_FQ:
        p, n, twist = params["p"], params["n"], params.get("twist", 1)
        return PolynomialRing(
            RingDescriptor("SkewPolyFq", (("n", n), ("p", p), ("twist", twist))),
            ExtensionField(p, n, twist), generator_names=("g",))
    return PolynomialRing(RingDescriptor("QuatPoly"), QuaternionField(), generator_names=("i", "j"))


def ring_spec_of(ring: Ring) -> RingSpec:
    return RingSpec.from_json(ring.descriptor.to_spec())
