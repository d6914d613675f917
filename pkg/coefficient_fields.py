"""
Coefficient division rings for the polynomial instances.

Payloads are plain hashable values (Fraction, int, tuples) so that the
polynomial payloads built on them stay canonical and comparable.

Extension fields are F_p[g]/(m(g)) with m taken from CONWAY_POLYNOMIALS,
coefficients stored low degree first. The twist sigma = Frob^twist acts on
them; sigma^k for negative k is reduced modulo the order of Frob (= n).
"""
from abc import ABC, abstractmethod
from fractions import Fraction
from itertools import count, product
from math import gcd
from typing import Any, Dict, Iterator, List, Tuple

from ed_errors import DivisionByZero, InvalidParameters


# Conway polynomials, monic, coefficients low degree first. The root g is
# primitive, so it generates the multiplicative group of F_{p^n}.
CONWAY_POLYNOMIALS: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (2, 2): (1, 1, 1),           # g^2 + g + 1
    (2, 3): (1, 1, 0, 1),        # g^3 + g + 1
    (2, 4): (1, 1, 0, 0, 1),     # g^4 + g + 1
    (3, 2): (2, 2, 1),           # g^2 + 2g + 2
    (3, 3): (1, 2, 0, 1),        # g^3 + 2g + 1
    (5, 2): (2, 4, 1),           # g^2 + 4g + 2
    (7, 2): (3, 6, 1),           # g^2 + 6g + 3
}


class CoefficientField(ABC):
    commutative = True
    finite = False
    twist_order = 1

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @property
    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def add(self, a, b): ...

    @abstractmethod
    def neg(self, a): ...

    @abstractmethod
    def mul(self, a, b): ...

    @abstractmethod
    def inv(self, a): ...

    @abstractmethod
    def from_int(self, n: int): ...

    @abstractmethod
    def fmt(self, a) -> Tuple[str, bool]:
        """Grammar text of a coefficient and whether it has several parts."""

    @abstractmethod
    def enumerate(self) -> Iterator[Any]: ...

    def is_zero(self, a) -> bool:
        return a == self.zero

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def from_fraction(self, numerator: int, denominator: int):
        raise InvalidParameters("rational literals are not available here")

    def frobenius(self, a, k: int):
        return a

    @property
    def symbols(self) -> Dict[str, Any]:
        return {}


def height(r: Fraction) -> int:
    return max(abs(r.numerator), r.denominator)


def rationals_by_height() -> Iterator[Tuple[int, List[Fraction]]]:
    """
    Positive rationals grouped by height max(|p|, q), h = 1, 2, ...
    Within a height: h first, then h/q for q = 2..h-1, then p/h for p = 1..h-1,
    lowest terms only. Every positive rational shows up exactly once.
    """
    for h in count(1):
        values = [Fraction(h)]
        values += [Fraction(h, q) for q in range(2, h) if gcd(h, q) == 1]
        values += [Fraction(p, h) for p in range(1, h) if gcd(p, h) == 1]
        yield h, values


class RationalField(CoefficientField):

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return 1 / a

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, numerator, denominator):
        if denominator == 0:
            raise DivisionByZero("rational literal with zero denominator")
        return Fraction(numerator, denominator)

    def fmt(self, a):
        return str(a), False

    def enumerate(self):
        """0, then r, -r for r in rationals_by_height: 0, 1, -1, 2, -2, 1/2, -1/2, 3, ..."""
        yield Fraction(0)
        for _, values in rationals_by_height():
            for r in values:
                yield r
                yield -r


class PrimeField(CoefficientField):
    finite = True

    def __init__(self, p: int):
        self.p = p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return pow(a, -1, self.p)

    def from_int(self, n):
        return n % self.p

    def fmt(self, a):
        return str(a), False

    def enumerate(self):
        return iter(range(self.p))


class ExtensionField(CoefficientField):
    """F_{p^n} with the twist sigma(a) = a^(p^twist)."""
    finite = True

    def __init__(self, p: int, n: int, twist: int = 1):
        if (p, n) not in CONWAY_POLYNOMIALS:
            raise InvalidParameters(f"no stored minimal polynomial for F_{p}^{n}")
        self.p = p
        self.n = n
        self.twist = twist
        self.modulus = CONWAY_POLYNOMIALS[(p, n)]
        self.twist_order = n // gcd(n, twist)

    @property
    def zero(self):
        return (0,) * self.n

    @property
    def one(self):
        return (1,) + (0,) * (self.n - 1)

    @property
    def generator(self):
        return (0, 1) + (0,) * (self.n - 2)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        p, n = self.p, self.n
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # g^n = -(m_0 + m_1 g + ... + m_{n-1} g^{n-1})
        for d in range(2 * n - 2, n - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i in range(n):
                    prod[d - n + i] = (prod[d - n + i] - c * self.modulus[i]) % p
        return tuple(prod[:n])

    def pow(self, a, e: int):
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if self.is_zero(a):
            raise DivisionByZero("inverse of 0")
        return self.pow(a, self.p ** self.n - 2)

    def from_int(self, n):
        return (n % self.p,) + (0,) * (self.n - 1)

    def frobenius(self, a, k):
        e = (self.twist * k) % self.n
        if e == 0:
            return a
        return self.pow(a, self.p ** e)

    @property
    def symbols(self):
        return {"g": self.generator}

    def fmt(self, a):
        parts = []
        for d in range(self.n - 1, -1, -1):
            c = a[d]
            if not c:
                continue
            if d == 0:
                parts.append(str(c))
                continue
            mono = "g" if d == 1 else f"g^{d}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        if not parts:
            return "0", False
        return " + ".join(parts), len(parts) > 1

    def enumerate(self):
        for value in range(self.p ** self.n):
            digits = []
            for _ in range(self.n):
                value, d = divmod(value, self.p)
                digits.append(d)
            yield tuple(digits)


class QuaternionField(CoefficientField):
    """Rational quaternions a + b*i + c*j + d*k as 4-tuples of Fractions."""
    commutative = False

    @property
    def zero(self):
        return (Fraction(0),) * 4

    @property
    def one(self):
        return (Fraction(1),) + (Fraction(0),) * 3

    def basis(self, name: str):
        index = {"i": 1, "j": 2, "k": 3}[name]
        values = [Fraction(0)] * 4
        values[index] = Fraction(1)
        return tuple(values)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        a1, b1, c1, d1 = a
        a2, b2, c2, d2 = b
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def norm(self, a) -> Fraction:
        return sum(x * x for x in a)

    def inv(self, a):
        n = self.norm(a)
        if n == 0:
            raise DivisionByZero("inverse of 0")
        return (a[0] / n, -a[1] / n, -a[2] / n, -a[3] / n)

    def from_int(self, n):
        return (Fraction(n),) + (Fraction(0),) * 3

    def from_fraction(self, numerator, denominator):
        if denominator == 0:
            raise DivisionByZero("rational literal with zero denominator")
        return (Fraction(numerator, denominator),) + (Fraction(0),) * 3

    @property
    def symbols(self):
        return {name: self.basis(name) for name in ("i", "j", "k")}

    def fmt(self, a):
        parts = []
        for value, unit in zip(a, ("", "i", "j", "k")):
            if value == 0:
                continue
            if not unit:
                parts.append(str(value))
            elif value == 1:
                parts.append(unit)
            elif value == -1:
                parts.append(f"-{unit}")
            else:
                parts.append(f"{value}*{unit}")
        if not parts:
            return "0", False
        text = parts[0]
        for part in parts[1:]:
            text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return text, len(parts) > 1

    def enumerate(self):
        """
        Level h: first r*e and -r*e for every rational r of height h and
        e in 1, i, j, k; then every quaternion with two or more nonzero
        components whose largest component height is h - 1. So 0, 1, -1,
        i, -i, j, -j, k, -k, 2, -2, 2*i, ..., 1/2, -1/2, i/2, ..., then 1 + i.
        """
        yield self.zero
        signed = [Fraction(0)]
        for h, values in rationals_by_height():
            for r in values:
                for index in range(4):
                    for sign in (1, -1):
                        entries = [Fraction(0)] * 4
                        entries[index] = sign * r
                        yield tuple(entries)
            if h > 1:
                for entries in product(signed, repeat=4):
                    if sum(1 for v in entries if v) < 2:
                        continue
                    if max(height(v) for v in entries if v) == h - 1:
                        yield entries
            signed += [s * r for r in values for s in (1, -1)]
