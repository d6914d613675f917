"""
Matrices over an effective ring and certificate-tracked elementary operations.

Row operations multiply on the left, column operations on the right:

    swap(i, j)          rows/cols i and j exchanged
    scale(i, u)         row i <- u*row i      col i <- col i*u      (u a unit)
    add(src, dst, f)    row dst += f*row src  col dst += col src*f

Every operation updates the certificate together with its explicit inverse:
a row op E gives P <- E*P and Pinv <- Pinv*E^-1, where Pinv*E^-1 is the
column op swap / scale(u^-1) / add(dst, src, -f). Column ops mirror this on
Q and Qinv. Inverses are never recomputed from determinants.
"""
from enum import Enum
from functools import reduce
from typing import List, Optional, Sequence, Tuple

from attrs import frozen

from ed_errors import DimensionMismatch, IndexOutOfRange, MixedRings, NotAUnit
from ed_logger import get_logger
from ring_core import Capability, Element, Ring


@frozen
class Matrix:
    ring: Ring
    rows: int
    cols: int
    entries: Tuple[Tuple[Element, ...], ...]

    def __attrs_post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DimensionMismatch(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch(f"entry grid does not match {self.rows}x{self.cols}")
        for row in self.entries:
            for e in row:
                if e.ring != self.ring:
                    raise MixedRings(f"{e.ring.descriptor} entry in a {self.ring.descriptor} matrix")

    @classmethod
    def of(cls, ring: Ring, grid: Sequence[Sequence[Element]]) -> "Matrix":
        entries = tuple(tuple(row) for row in grid)
        return cls(ring, len(entries), len(entries[0]) if entries else 0, entries)

    @classmethod
    def from_ints(cls, ring: Ring, grid: Sequence[Sequence[int]]) -> "Matrix":
        return cls.of(ring, [[ring.from_int(v) for v in row] for row in grid])

    @classmethod
    def from_strings(cls, ring: Ring, grid: Sequence[Sequence[str]]) -> "Matrix":
        from element_parser import parse_element
        return cls.of(ring, [[parse_element(ring, text) for text in row] for row in grid])

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        return cls.of(ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "Matrix":
        return cls.of(ring, [[ring.zero] * cols for _ in range(rows)])

    def __getitem__(self, index: Tuple[int, int]) -> Element:
        i, j = index
        return self.entries[i][j]

    def to_grid(self) -> List[List[Element]]:
        return [list(row) for row in self.entries]

    def to_strings(self) -> List[List[str]]:
        return [[str(e) for e in row] for row in self.entries]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(r) + "]" for r in self.to_strings()) + "]"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        if self.ring != other.ring:
            raise MixedRings(f"{self.ring.descriptor} matrix times {other.ring.descriptor} matrix")
        zero = self.ring.zero
        return Matrix.of(self.ring, [
            [reduce(lambda acc, k: acc + self.entries[i][k] * other.entries[k][j], range(self.cols), zero)
             for j in range(other.cols)]
            for i in range(self.rows)])

    def is_diagonal(self) -> bool:
        return all(self.entries[i][j].is_zero
                   for i in range(self.rows) for j in range(self.cols) if i != j)

    def is_upper_triangular(self) -> bool:
        return all(self.entries[i][j].is_zero
                   for i in range(self.rows) for j in range(min(i, self.cols)))

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.ring, self.rows)

    def diagonal(self) -> List[Element]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]


class OpKind(str, Enum):
    SWAP = "swap"
    SCALE = "scale"
    ADD = "add"


@frozen
class ElementaryOp:
    kind: OpKind
    i: int
    j: int = -1
    factor: Optional[Element] = None

    @classmethod
    def swap(cls, i: int, j: int) -> "ElementaryOp":
        return cls(OpKind.SWAP, i, j)

    @classmethod
    def scale(cls, i: int, unit: Element) -> "ElementaryOp":
        return cls(OpKind.SCALE, i, i, unit)

    @classmethod
    def add(cls, src: int, dst: int, factor: Element) -> "ElementaryOp":
        return cls(OpKind.ADD, src, dst, factor)

    def inverse_as_opposite_side(self) -> "ElementaryOp":
        """The op which, applied on the other side, multiplies by this op's inverse."""
        if self.kind == OpKind.SWAP:
            return self
        if self.kind == OpKind.SCALE:
            return ElementaryOp.scale(self.i, self.factor.ring.inverse(self.factor))
        return ElementaryOp.add(self.j, self.i, -self.factor)


def _check_indices(op: ElementaryOp, size: int):
    for index in (op.i, op.j):
        if not 0 <= index < size:
            raise IndexOutOfRange(f"{op.kind.value} index {index} outside 0..{size - 1}")
    if op.kind == OpKind.ADD and op.i == op.j:
        raise IndexOutOfRange(f"add needs distinct indices, got {op.i}")


def _require_unit(ring: Ring, u: Element):
    if not ring.is_unit(u):
        raise NotAUnit(f"cannot scale by non-unit {u}")


def row_op(m: Matrix, op: ElementaryOp) -> Matrix:
    _check_indices(op, m.rows)
    grid = m.to_grid()
    if op.kind == OpKind.SWAP:
        grid[op.i], grid[op.j] = grid[op.j], grid[op.i]
    elif op.kind == OpKind.SCALE:
        _require_unit(m.ring, op.factor)
        grid[op.i] = [op.factor * e for e in grid[op.i]]
    else:
        grid[op.j] = [d + op.factor * s for s, d in zip(grid[op.i], grid[op.j])]
    return Matrix.of(m.ring, grid)


def col_op(m: Matrix, op: ElementaryOp) -> Matrix:
    _check_indices(op, m.cols)
    grid = m.to_grid()
    for row in grid:
        if op.kind == OpKind.SWAP:
            row[op.i], row[op.j] = row[op.j], row[op.i]
        elif op.kind == OpKind.SCALE:
            _require_unit(m.ring, op.factor)
            row[op.i] = row[op.i] * op.factor
        else:
            row[op.j] = row[op.j] + row[op.i] * op.factor
    return Matrix.of(m.ring, grid)


@frozen
class EquivalenceCertificate:
    """P*A*Q = D with recorded inverses Pinv, Qinv."""
    P: Matrix
    Pinv: Matrix
    Q: Matrix
    Qinv: Matrix
    D: Matrix

    @classmethod
    def identity(cls, a: Matrix) -> "EquivalenceCertificate":
        left = Matrix.identity(a.ring, a.rows)
        right = Matrix.identity(a.ring, a.cols)
        return cls(P=left, Pinv=left, Q=right, Qinv=right, D=a)

    def with_row_op(self, op: ElementaryOp) -> "EquivalenceCertificate":
        return EquivalenceCertificate(
            P=row_op(self.P, op),
            Pinv=col_op(self.Pinv, op.inverse_as_opposite_side()),
            Q=self.Q, Qinv=self.Qinv,
            D=row_op(self.D, op))

    def with_col_op(self, op: ElementaryOp) -> "EquivalenceCertificate":
        return EquivalenceCertificate(
            P=self.P, Pinv=self.Pinv,
            Q=col_op(self.Q, op),
            Qinv=row_op(self.Qinv, op.inverse_as_opposite_side()),
            D=col_op(self.D, op))

    def transformed(self, left: Optional[Tuple[Matrix, Matrix]] = None,
                    right: Optional[Tuple[Matrix, Matrix]] = None) -> "EquivalenceCertificate":
        """Compose with (M, Minv) on the left and (N, Ninv) on the right."""
        P, Pinv, Q, Qinv, D = self.P, self.Pinv, self.Q, self.Qinv, self.D
        if left is not None:
            M, Minv = left
            P, Pinv, D = M @ P, Pinv @ Minv, M @ D
        if right is not None:
            N, Ninv = right
            Q, Qinv, D = Q @ N, Ninv @ Qinv, D @ N
        return EquivalenceCertificate(P=P, Pinv=Pinv, Q=Q, Qinv=Qinv, D=D)


def apply_row_op(m: Matrix, op: ElementaryOp,
                 cert: EquivalenceCertificate) -> Tuple[Matrix, EquivalenceCertificate]:
    return row_op(m, op), cert.with_row_op(op)


def apply_col_op(m: Matrix, op: ElementaryOp,
                 cert: EquivalenceCertificate) -> Tuple[Matrix, EquivalenceCertificate]:
    return col_op(m, op), cert.with_col_op(op)


def verify_certificate(a: Matrix, cert: EquivalenceCertificate) -> bool:
    shapes = [
        (cert.P, a.rows, a.rows), (cert.Pinv, a.rows, a.rows),
        (cert.Q, a.cols, a.cols), (cert.Qinv, a.cols, a.cols),
        (cert.D, a.rows, a.cols),
    ]
    for m, rows, cols in shapes:
        if (m.rows, m.cols) != (rows, cols):
            raise DimensionMismatch(
                f"certificate matrix is {m.rows}x{m.cols}, expected {rows}x{cols}")
    checks = {
        "P*Pinv": (cert.P @ cert.Pinv).is_identity(),
        "Pinv*P": (cert.Pinv @ cert.P).is_identity(),
        "Q*Qinv": (cert.Q @ cert.Qinv).is_identity(),
        "Qinv*Q": (cert.Qinv @ cert.Q).is_identity(),
        "P*A*Q": cert.P @ a @ cert.Q == cert.D,
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        get_logger().debug(f"certificate check failed: {', '.join(failed)}")
    return not failed


def is_total_divisor(a: Element, b: Element) -> bool:
    """R*b*R contained in aR and in Ra; every a totally divides 0."""
    ring = a.ring
    ring._check(a, b)
    if b.is_zero:
        return True
    if a.is_zero:
        return False
    if ring.commutative:
        return ring.right_divide(b, a) is not None
    ring.require(Capability.TWO_SIDED_GENERATOR_COMPUTABLE)
    b_star = ring.two_sided_generator(b).a_star
    return ring.right_divide(b_star, a) is not None and ring.left_divide(b_star, a) is not None


@frozen
class DiagonalReport:
    diagonal: Tuple[Element, ...]
    chain: Tuple[bool, ...]
    invariant: Tuple[bool, ...]


def build_report(d: Matrix) -> DiagonalReport:
    diagonal = tuple(d.diagonal())
    ring = d.ring
    chain = tuple(is_total_divisor(diagonal[i], diagonal[i + 1]) for i in range(len(diagonal) - 1))
    invariant = tuple(ring.is_invariant(e) for e in diagonal)
    return DiagonalReport(diagonal=diagonal, chain=chain, invariant=invariant)
