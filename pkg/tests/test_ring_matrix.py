import pytest

from ed_errors import DimensionMismatch, IndexOutOfRange, MixedRings, NotAUnit
from ring_matrix import (ElementaryOp, EquivalenceCertificate, Matrix, apply_col_op, apply_row_op,
                         build_report, col_op, is_total_divisor, row_op, verify_certificate)


def test_construction_checks_shape(zz, zmod12):
    with pytest.raises(DimensionMismatch):
        Matrix(zz, 2, 2, ((zz.one, zz.zero),))
    with pytest.raises(DimensionMismatch):
        Matrix.of(zz, [])
    with pytest.raises(MixedRings):
        Matrix.of(zz, [[zz.one, zmod12.one]])


def test_product_and_identity(zz):
    a = Matrix.from_ints(zz, [[1, 2], [3, 4]])
    b = Matrix.from_ints(zz, [[0, 1], [1, 0]])
    assert a @ b == Matrix.from_ints(zz, [[2, 1], [4, 3]])
    assert (a @ Matrix.identity(zz, 2)) == a
    with pytest.raises(DimensionMismatch):
        a @ Matrix.from_ints(zz, [[1, 2, 3]])


def test_shape_predicates(zz):
    assert Matrix.from_ints(zz, [[2, 0, 0], [0, 3, 0]]).is_diagonal()
    assert Matrix.from_ints(zz, [[2, 5], [0, 3], [0, 0]]).is_upper_triangular()
    assert not Matrix.from_ints(zz, [[2, 5], [1, 3]]).is_upper_triangular()
    assert Matrix.from_ints(zz, [[2, 5], [0, 3]]).diagonal() == [zz.from_int(2), zz.from_int(3)]


def test_from_strings_uses_the_grammar(qx, el):
    m = Matrix.from_strings(qx, [["x^2 - 1", "1/2"], ["0", "x"]])
    assert m[0, 0] == el(qx, "(x - 1)*(x + 1)")
    assert m.to_strings() == [["x^2 - 1", "1/2"], ["0", "x"]]


def test_row_and_column_ops(zz):
    m = Matrix.from_ints(zz, [[1, 2], [3, 4]])
    assert row_op(m, ElementaryOp.swap(0, 1)) == Matrix.from_ints(zz, [[3, 4], [1, 2]])
    assert row_op(m, ElementaryOp.add(0, 1, zz.from_int(-3))) == Matrix.from_ints(zz, [[1, 2], [0, -2]])
    assert col_op(m, ElementaryOp.add(0, 1, zz.from_int(-2))) == Matrix.from_ints(zz, [[1, 0], [3, -2]])
    assert col_op(m, ElementaryOp.scale(1, zz.from_int(-1))) == Matrix.from_ints(zz, [[1, -2], [3, -4]])


def test_op_validation(zz):
    m = Matrix.from_ints(zz, [[1, 2], [3, 4]])
    with pytest.raises(IndexOutOfRange):
        row_op(m, ElementaryOp.swap(0, 2))
    with pytest.raises(IndexOutOfRange):
        col_op(m, ElementaryOp.add(1, 1, zz.one))
    with pytest.raises(NotAUnit):
        row_op(m, ElementaryOp.scale(0, zz.from_int(2)))


def test_noncommutative_ops_keep_sides(hx, el):
    m = Matrix.of(hx, [[el(hx, "i"), el(hx, "j")]])
    scaled_row = row_op(m, ElementaryOp.scale(0, el(hx, "j")))
    scaled_col = col_op(m, ElementaryOp.scale(0, el(hx, "j")))
    assert scaled_row[0, 0] == el(hx, "-k")
    assert scaled_col[0, 0] == el(hx, "k")


def test_certificate_tracks_inverses(hx, el):
    a = Matrix.of(hx, [[el(hx, "x - i"), el(hx, "1")], [el(hx, "j"), el(hx, "x^2")]])
    cert = EquivalenceCertificate.identity(a)
    for op in (ElementaryOp.add(0, 1, el(hx, "x + k")), ElementaryOp.swap(0, 1),
               ElementaryOp.scale(1, el(hx, "i"))):
        cert = cert.with_row_op(op)
    for op in (ElementaryOp.add(1, 0, el(hx, "j*x")), ElementaryOp.scale(0, el(hx, "1/2 + j"))):
        cert = cert.with_col_op(op)
    assert verify_certificate(a, cert)
    assert (cert.P @ cert.Pinv).is_identity()
    assert (cert.Qinv @ cert.Q).is_identity()


def test_tampered_certificate_fails(zz):
    a = Matrix.from_ints(zz, [[2, 3], [5, 0]])
    cert = EquivalenceCertificate.identity(a).with_row_op(ElementaryOp.add(0, 1, zz.from_int(4)))
    forged = EquivalenceCertificate(P=cert.P, Pinv=cert.Pinv, Q=cert.Q, Qinv=cert.Qinv,
                                    D=Matrix.from_ints(zz, [[1, 0], [0, 15]]))
    assert verify_certificate(a, cert)
    assert not verify_certificate(a, forged)


def test_certificate_shape_mismatch_raises(zz):
    a = Matrix.from_ints(zz, [[1, 2]])
    cert = EquivalenceCertificate.identity(Matrix.from_ints(zz, [[1], [2]]))
    with pytest.raises(DimensionMismatch):
        verify_certificate(a, cert)


def test_transformed_composes_both_sides(zz):
    a = Matrix.from_ints(zz, [[1, 2], [3, 4]])
    m, m_inv = Matrix.from_ints(zz, [[1, 1], [0, 1]]), Matrix.from_ints(zz, [[1, -1], [0, 1]])
    n, n_inv = Matrix.from_ints(zz, [[0, 1], [1, 0]]), Matrix.from_ints(zz, [[0, 1], [1, 0]])
    cert = EquivalenceCertificate.identity(a).transformed(left=(m, m_inv), right=(n, n_inv))
    assert cert.D == Matrix.from_ints(zz, [[6, 4], [4, 3]])
    assert verify_certificate(a, cert)


class TestTotalDivisor:

    def test_commutative_is_plain_divisibility(self, zz):
        assert is_total_divisor(zz.from_int(2), zz.from_int(6))
        assert not is_total_divisor(zz.from_int(4), zz.from_int(6))
        assert is_total_divisor(zz.from_int(4), zz.zero)
        assert not is_total_divisor(zz.zero, zz.from_int(3))

    def test_quaternion_factor_of_central_element(self, hx, el):
        assert is_total_divisor(el(hx, "x - i"), el(hx, "x^2 + 1"))
        assert is_total_divisor(el(hx, "1"), el(hx, "x - j"))

    def test_noncentral_pair(self, hx, el):
        # R(x - j)R = R, which x - i does not contain
        assert not is_total_divisor(el(hx, "x - i"), el(hx, "x - j"))


def test_build_report_flags(hx, el):
    d = Matrix.of(hx, [[el(hx, "1"), hx.zero], [hx.zero, el(hx, "x - i")]])
    report = build_report(d)
    assert report.chain == (True,)
    assert report.invariant == (True, False)


def test_apply_ops_keep_matrix_and_certificate_in_step(zz):
    a = Matrix.from_ints(zz, [[4, 6], [2, 9]])
    cert = EquivalenceCertificate.identity(a)
    m, cert = apply_row_op(a, ElementaryOp.add(1, 0, zz.from_int(-2)), cert)
    m, cert = apply_col_op(m, ElementaryOp.swap(0, 1), cert)
    assert m == cert.D == Matrix.from_ints(zz, [[-12, 0], [9, 2]])
    assert verify_certificate(a, cert)
