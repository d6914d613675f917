"""
Certified matrix reductions.

All transformations go through elementary row/column operations or through
2x2 completions whose inverses are built alongside them, so every returned
EquivalenceCertificate carries exact inverses.

Euclid steps: a column operation col j -= col k * q clears entry (k, j)
against pivot (k, k) using right division; a row operation row i -= q * row k
clears (i, k) using left division. Each swap strictly lowers the Euclidean
size of the pivot, so the clearing loops stop.

Total-divisor repair for a diagonal pair (d, e): with e_* = sum u*e*v,
if e_* is not in dR some u*e is not in dR and row i += u * row j enlarges
the pivot's right ideal; otherwise some e*v is not in Rd and
col i += col j * v enlarges its left ideal. Either way the pivot shrinks.
"""
from typing import Optional, Tuple

from attrs import frozen

from ed_config import get_config
from ed_errors import (DimensionMismatch, InvalidWitness, NotUnimodular, ReductionFailed,
                       UnsupportedCapability, ZeroC, ZeroInput)
from ed_logger import get_logger
from ring_core import Capability, Element, Ring
from ring_matrix import (DiagonalReport, ElementaryOp, EquivalenceCertificate, Matrix,
                         build_report, is_total_divisor, verify_certificate)


@frozen
class CompletionPair:
    """P with first row (p, q) and Q with first column (u, v), both with inverses."""
    P: Matrix
    Pinv: Matrix
    Q: Matrix
    Qinv: Matrix


class _Workspace:
    """Mutable reduction state over an immutable certificate."""

    def __init__(self, cert: EquivalenceCertificate, max_steps: Optional[int] = None):
        self.cert = cert
        self.ring: Ring = cert.D.ring
        self.max_steps = max_steps if max_steps is not None else get_config().max_reduction_steps()
        self.steps = 0

    @property
    def D(self) -> Matrix:
        return self.cert.D

    def at(self, i: int, j: int) -> Element:
        return self.cert.D.entries[i][j]

    def _tick(self):
        self.steps += 1
        if self.steps > self.max_steps:
            raise ReductionFailed(
                f"no canonical form within {self.max_steps} elementary steps",
                partial_matrix=self.cert.D, certificate=self.cert)

    def row(self, op: ElementaryOp):
        self._tick()
        self.cert = self.cert.with_row_op(op)

    def col(self, op: ElementaryOp):
        self._tick()
        self.cert = self.cert.with_col_op(op)

    def clear_right(self, k: int, j: int):
        """Zero (k, j) with column operations against column k."""
        while not self.at(k, j).is_zero:
            pivot = self.at(k, k)
            if not pivot.is_zero:
                q, _ = self.ring.right_divmod(self.at(k, j), pivot)
                if not q.is_zero:
                    self.col(ElementaryOp.add(k, j, -q))
                if self.at(k, j).is_zero:
                    break
            self.col(ElementaryOp.swap(k, j))

    def clear_below(self, k: int, i: int):
        """Zero (i, k) with row operations against row k."""
        while not self.at(i, k).is_zero:
            pivot = self.at(k, k)
            if not pivot.is_zero:
                q, _ = self.ring.left_divmod(self.at(i, k), pivot)
                if not q.is_zero:
                    self.row(ElementaryOp.add(k, i, -q))
                if self.at(i, k).is_zero:
                    break
            self.row(ElementaryOp.swap(k, i))

    def normalize(self, k: int):
        d = self.at(k, k)
        if d.is_zero:
            return
        u = self.ring.right_normalizer(d)
        if u != self.ring.one:
            self.col(ElementaryOp.scale(k, u))

    def sweep(self, k: int) -> bool:
        """Put a smallest entry of the lower-right block at (k, k) and clear its row and column."""
        m, n = self.D.rows, self.D.cols
        candidates = [(self.ring.norm(self.at(i, j)), i, j)
                      for i in range(k, m) for j in range(k, n) if not self.at(i, j).is_zero]
        if not candidates:
            return False
        _, i, j = min(candidates)
        if i != k:
            self.row(ElementaryOp.swap(k, i))
        if j != k:
            self.col(ElementaryOp.swap(k, j))
        while True:
            for j in range(k + 1, n):
                self.clear_right(k, j)
            for i in range(k + 1, m):
                self.clear_below(k, i)
            if all(self.at(k, j).is_zero for j in range(k + 1, n)):
                return True

    def settle_pair(self, i: int, j: int):
        """Diagonalize the (i, j) block until (i, i) totally divides (j, j)."""
        ring = self.ring
        while True:
            if self.at(i, i).is_zero and self.at(i, j).is_zero and self.at(j, i).is_zero:
                if self.at(j, j).is_zero:
                    return
                self.row(ElementaryOp.swap(i, j))
                self.col(ElementaryOp.swap(i, j))
            while not (self.at(i, j).is_zero and self.at(j, i).is_zero):
                self.clear_right(i, j)
                self.clear_below(i, j)
            d, e = self.at(i, i), self.at(j, j)
            if is_total_divisor(d, e):
                return
            generator = ring.two_sided_generator(e)
            if ring.right_divide(generator.a_star, d) is None:
                u = next((u for u, _ in generator.combination
                          if ring.right_divide(u * e, d) is None), None)
                if u is None:
                    raise ReductionFailed("no left factor enlarges the pivot's right ideal",
                                          partial_matrix=self.D, certificate=self.cert)
                self.row(ElementaryOp.add(j, i, u))
            else:
                v = next((v for _, v in generator.combination
                          if ring.left_divide(e * v, d) is None), None)
                if v is None:
                    raise ReductionFailed("no right factor enlarges the pivot's left ideal",
                                          partial_matrix=self.D, certificate=self.cert)
                self.col(ElementaryOp.add(j, i, v))


def _require_euclidean(ring: Ring):
    ring.require(Capability.RIGHT_EUCLIDEAN, Capability.LEFT_EUCLIDEAN)


# --- unimodular completion ---

def complete_row(p: Element, q: Element) -> Tuple[Matrix, Matrix]:
    """Invertible (P, Pinv) with first row of P equal to (p, q); needs pR + qR = R."""
    ring = p.ring
    _require_euclidean(ring)
    if p.is_zero and q.is_zero:
        raise NotUnimodular("(0, 0) is not unimodular")
    w = ring.right_bezout(p, q)
    if not ring.is_unit(w.g):
        raise NotUnimodular(f"({p}, {q}) generates {w.g}R, not R")
    if ring.commutative:
        g_inv = ring.inverse(w.g)
        s, t = w.s * g_inv, w.t * g_inv
        P = Matrix.of(ring, [[p, q], [-t, s]])
        Pinv = Matrix.of(ring, [[s, -q], [t, p]])
        if (P @ Pinv).is_identity() and (Pinv @ P).is_identity():
            return P, Pinv
    ws = _Workspace(EquivalenceCertificate.identity(Matrix.of(ring, [[p, q]])))
    ws.clear_right(0, 1)
    ws.col(ElementaryOp.scale(0, ring.inverse(ws.at(0, 0))))
    # (1 0) = (p q) Q, so (p q) is the first row of Qinv
    P, Pinv = ws.cert.Qinv, ws.cert.Q
    if P.entries[0] != (p, q):
        raise InvalidWitness(f"completion realized {P.entries[0]} instead of ({p}, {q})")
    return P, Pinv


def complete_column(u: Element, v: Element) -> Tuple[Matrix, Matrix]:
    """Invertible (Q, Qinv) with first column of Q equal to (u, v); needs Ru + Rv = R."""
    ring = u.ring
    _require_euclidean(ring)
    if u.is_zero and v.is_zero:
        raise NotUnimodular("(0, 0) is not unimodular")
    w = ring.left_bezout(u, v)
    if not ring.is_unit(w.g):
        raise NotUnimodular(f"({u}, {v}) generates R{w.g}, not R")
    if ring.commutative:
        g_inv = ring.inverse(w.g)
        s, t = g_inv * w.s, g_inv * w.t
        Q = Matrix.of(ring, [[u, -t], [v, s]])
        Qinv = Matrix.of(ring, [[s, t], [-v, u]])
        if (Q @ Qinv).is_identity() and (Qinv @ Q).is_identity():
            return Q, Qinv
    ws = _Workspace(EquivalenceCertificate.identity(Matrix.of(ring, [[u], [v]])))
    ws.clear_below(0, 1)
    ws.row(ElementaryOp.scale(0, ring.inverse(ws.at(0, 0))))
    # (1 0)^T = P (u v)^T, so (u v)^T is the first column of Pinv
    Q, Qinv = ws.cert.Pinv, ws.cert.P
    if (Q[0, 0], Q[1, 0]) != (u, v):
        raise InvalidWitness(f"completion realized ({Q[0, 0]}, {Q[1, 0]}) instead of ({u}, {v})")
    return Q, Qinv


def completion_pair(p: Element, q: Element, u: Element, v: Element) -> CompletionPair:
    P, Pinv = complete_row(p, q)
    Q, Qinv = complete_column(u, v)
    return CompletionPair(P=P, Pinv=Pinv, Q=Q, Qinv=Qinv)


# --- Hermite steps ---

def hermite_reduce_row(a: Element, b: Element) -> Tuple[Element, EquivalenceCertificate]:
    """(a b) Q = (g 0) with g the canonical right gcd."""
    ring = a.ring
    if a.is_zero and b.is_zero:
        raise ZeroInput("hermite_reduce_row(0, 0)")
    row = Matrix.of(ring, [[a, b]])
    if ring.commutative:
        w = ring.right_bezout(a, b)
        Q = Matrix.of(ring, [[w.s, -w.b1], [w.t, w.a1]])
        Qinv = Matrix.of(ring, [[w.a1, w.b1], [-w.t, w.s]])
        if (Q @ Qinv).is_identity() and (Qinv @ Q).is_identity():
            one = Matrix.identity(ring, 1)
            cert = EquivalenceCertificate(P=one, Pinv=one, Q=Q, Qinv=Qinv, D=row @ Q)
            return w.g, cert
    _require_euclidean(ring)
    ws = _Workspace(EquivalenceCertificate.identity(row))
    ws.clear_right(0, 1)
    ws.normalize(0)
    return ws.at(0, 0), ws.cert


def hermite_triangularize(a: Matrix, max_steps: Optional[int] = None) -> EquivalenceCertificate:
    """Zero every entry below the diagonal; pivots that moved are normalized."""
    _require_euclidean(a.ring)
    ws = _Workspace(EquivalenceCertificate.identity(a), max_steps)
    m, n = a.rows, a.cols
    for k in range(min(m, n)):
        before = ws.steps
        for j in range(k + 1, n):
            ws.clear_right(k, j)
        for i in range(k + 1, m):
            ws.clear_below(k, i)
        if ws.steps != before:
            ws.normalize(k)
    get_logger().debug(f"triangularized {a.rows}x{a.cols} over {a.ring.descriptor} in {ws.steps} steps")
    return ws.cert


# --- pivot step and 2x2 canonical form ---

def _pivot_shape(a: Matrix) -> bool:
    return a.rows == 2 and a.cols == 2 and a[1, 1].is_zero


def unimodular_pivot(a: Matrix, witness) -> EquivalenceCertificate:
    """
    [[a, c], [b, 0]] to P*A*Q with (1, 1) entry x, RxR = R.

    P has first row (p, q) from the witness; Q has first column (u, v) with
    (pa + qb)u + pcv = x, the generator of (pa + qb)R + pcR.
    """
    if not _pivot_shape(a):
        raise DimensionMismatch(f"pivot step needs [[a, c], [b, 0]], got {a}")
    ring = a.ring
    entry_a, c, entry_b = a[0, 0], a[0, 1], a[1, 0]
    if c.is_zero:
        raise ZeroC("pivot step needs c != 0")
    p, q = witness.p, witness.q
    if (p.is_zero and q.is_zero) or not ring.is_unit(ring.right_bezout(p, q).g):
        raise InvalidWitness(f"witness ({p}, {q}) does not generate R")
    P, Pinv = complete_row(p, q)
    alpha, beta = p * entry_a + q * entry_b, p * c
    if alpha.is_zero and beta.is_zero:
        raise InvalidWitness(f"witness ({p}, {q}) kills the first row")
    w = ring.right_bezout(alpha, beta)
    u, v = _unimodular_cofactors(ring, w)
    Q, Qinv = complete_column(u, v)
    cert = EquivalenceCertificate.identity(a).transformed(left=(P, Pinv), right=(Q, Qinv))
    x = cert.D[0, 0]
    if not ring.generates_unit_ideal(x):
        raise InvalidWitness(f"pivot {x} does not generate R as a two-sided ideal")
    get_logger().debug(f"pivot step over {ring.descriptor}: x = {x}")
    return cert


def _unimodular_cofactors(ring: Ring, w) -> Tuple[Element, Element]:
    """Cofactors (u, v) of alpha*u + beta*v = d with Ru + Rv = R."""
    u, v = w.s, w.t
    if ring.is_unit(ring.left_bezout(u, v).g):
        return u, v
    # zero divisors: in a commutative ring (s + b1*k, t - a1*k) keeps the identity
    if ring.commutative and ring.has(Capability.FINITE):
        for k in ring.elements():
            u, v = w.s + w.b1 * k, w.t - w.a1 * k
            if not (u.is_zero and v.is_zero) and ring.is_unit(ring.left_bezout(u, v).g):
                return u, v
    raise InvalidWitness("no unimodular cofactors for the pivot")


def _finish(a: Matrix, ws: _Workspace, label: str) -> Tuple[EquivalenceCertificate, DiagonalReport]:
    for k in range(min(a.rows, a.cols)):
        ws.normalize(k)
    cert = ws.cert
    if not cert.D.is_diagonal():
        raise ReductionFailed(f"{label}: result is not diagonal", partial_matrix=cert.D, certificate=cert)
    if not verify_certificate(a, cert):
        raise ReductionFailed(f"{label}: certificate does not verify", partial_matrix=cert.D, certificate=cert)
    report = build_report(cert.D)
    if not all(report.chain):
        raise ReductionFailed(f"{label}: total-divisor chain broken", partial_matrix=cert.D, certificate=cert)
    get_logger().debug(f"{label} over {a.ring.descriptor}: diag({', '.join(map(str, report.diagonal))}) "
                       f"in {ws.steps} steps")
    return cert, report


def canonical_2x2(a: Matrix, bound: Optional[int] = None,
                  max_steps: Optional[int] = None) -> Tuple[EquivalenceCertificate, DiagonalReport]:
    """
    diag(e1, e2) with e1 totally dividing e2.

    Triangularize to [[x, y], [0, z]]; when x != 0 and (y, z, x) generate R
    as a two-sided ideal, swap columns to [[y, x], [z, 0]] and take the pivot
    step. A unit pivot then clears to diag(1, Delta). Anything else goes
    through the pair engine.
    """
    from range_probes import find_simple_range2_witness, is_two_sided_unimodular

    if a.rows != 2 or a.cols != 2:
        raise DimensionMismatch(f"canonical_2x2 needs a 2x2 matrix, got {a.rows}x{a.cols}")
    ring = a.ring
    _require_euclidean(ring)
    if not (ring.has(Capability.DOMAIN) or ring.commutative):
        raise UnsupportedCapability(f"{ring.descriptor}: canonical_2x2 needs a domain or a commutative ring")

    if _pivot_shape(a) and not a[0, 1].is_zero:
        ws = _Workspace(EquivalenceCertificate.identity(a), max_steps)
    else:
        ws = _Workspace(hermite_triangularize(a, max_steps), max_steps)
        if not ws.at(0, 0).is_zero:
            ws.col(ElementaryOp.swap(0, 1))
    if _pivot_shape(ws.D) and not ws.at(0, 1).is_zero:
        entry_a, c, entry_b = ws.at(0, 0), ws.at(0, 1), ws.at(1, 0)
        if is_two_sided_unimodular([entry_a, entry_b, c]):
            witness = find_simple_range2_witness(entry_a, entry_b, c, bound)
            if witness is not None:
                step = unimodular_pivot(ws.D, witness)
                ws.cert = ws.cert.transformed(left=(step.P, step.Pinv), right=(step.Q, step.Qinv))
                x = ws.at(0, 0)
                if ring.is_unit(x):
                    if x != ring.one:
                        ws.row(ElementaryOp.scale(0, ring.inverse(x)))
                    if not ws.at(1, 0).is_zero:
                        ws.row(ElementaryOp.add(0, 1, -ws.at(1, 0)))
                    if not ws.at(0, 1).is_zero:
                        ws.col(ElementaryOp.add(0, 1, -ws.at(0, 1)))
                    return _finish(a, ws, "canonical_2x2")
    ws.settle_pair(0, 1)
    return _finish(a, ws, "canonical_2x2")


def diagonal_reduce(a: Matrix, bound: Optional[int] = None,
                    max_steps: Optional[int] = None) -> Tuple[EquivalenceCertificate, DiagonalReport]:
    ring = a.ring
    _require_euclidean(ring)
    if not ring.commutative and min(a.rows, a.cols) > 2:
        raise UnsupportedCapability(
            f"{ring.descriptor}: diagonal reduction over a noncommutative ring is limited to "
            f"min(rows, cols) <= 2, got {a.rows}x{a.cols}")
    if a.rows == 2 and a.cols == 2 and a != Matrix.zeros(ring, 2, 2):
        return canonical_2x2(a, bound, max_steps)
    ws = _Workspace(EquivalenceCertificate.identity(a), max_steps)
    r = 0
    while r < min(a.rows, a.cols) and ws.sweep(r):
        r += 1
    for i in range(r):
        for j in range(i + 1, r):
            ws.settle_pair(i, j)
    return _finish(a, ws, "diagonal_reduce")


def verify_dk_chain(report: DiagonalReport) -> bool:
    """Chain flags hold and every nonzero entry before the last nonzero one is invariant."""
    if not all(report.chain):
        return False
    nonzero = [i for i, e in enumerate(report.diagonal) if not e.is_zero]
    if not nonzero:
        return True
    if any(report.diagonal[i].is_zero for i in range(nonzero[-1])):
        return False
    return all(report.invariant[i] for i in nonzero[:-1])
