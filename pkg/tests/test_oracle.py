import pytest

from ed_errors import InvalidParameters, UnsupportedCapability
from oracle import exhaustive_witness_oracle, minor_gcd_factors
from range_probes import (find_simple_range2_witness, find_stable_range1_witness,
                          find_stable_range2_witness, is_two_sided_unimodular, is_unimodular_row,
                          simple_degree)
from ring_instances import IntegerModRing
from ring_matrix import Matrix


def ints(ring, *values):
    return [ring.from_int(v) for v in values]


class TestMinorGcd:

    def test_square_integer_matrix(self, zz):
        result = minor_gcd_factors(Matrix.from_ints(zz, [[2, 4], [6, 8]]))
        assert result.minor_gcds == tuple(ints(zz, 2, 8))
        assert result.factors == tuple(ints(zz, 2, 4))

    def test_coprime_diagonal(self, zz):
        result = minor_gcd_factors(Matrix.from_ints(zz, [[2, 0], [0, 3]]))
        assert result.factors == tuple(ints(zz, 1, 6))

    def test_identity(self, zz):
        assert minor_gcd_factors(Matrix.identity(zz, 3)).factors == (zz.one,) * 3

    def test_needs_a_domain(self, zmod12):
        with pytest.raises(UnsupportedCapability):
            minor_gcd_factors(Matrix.from_ints(zmod12, [[2, 4], [6, 8]]))


class TestExhaustive:

    def test_sr1(self, zmod12):
        w = exhaustive_witness_oracle(zmod12, "sr1", ints(zmod12, 3, 4))
        assert w.t == zmod12.one

    def test_simple2_over_f2(self):
        ring = IntegerModRing(2)
        w = exhaustive_witness_oracle(ring, "simple2", ints(ring, 1, 0, 1))
        assert (w.p, w.q) == (ring.one, ring.zero)
        assert w.source == "oracle"

    def test_unimodular(self, zmod12):
        assert exhaustive_witness_oracle(zmod12, "unimodular", ints(zmod12, 3, 4)) is True
        assert exhaustive_witness_oracle(zmod12, "unimodular", ints(zmod12, 2, 6)) is None

    def test_nsimple_unit(self, zmod12):
        assert exhaustive_witness_oracle(zmod12, "nsimple", ints(zmod12, 5)).n == 1

    def test_nsimple_non_unit_has_no_witness(self, zmod12):
        assert exhaustive_witness_oracle(zmod12, "nsimple", ints(zmod12, 4)) is None

    def test_bad_condition_or_arity(self, zmod12):
        with pytest.raises(InvalidParameters):
            exhaustive_witness_oracle(zmod12, "sr3", ints(zmod12, 1, 2))
        with pytest.raises(InvalidParameters):
            exhaustive_witness_oracle(zmod12, "sr1", ints(zmod12, 1, 2, 3))

    def test_infinite_ring_rejected(self, zz):
        with pytest.raises(UnsupportedCapability):
            exhaustive_witness_oracle(zz, "sr1", ints(zz, 2, 3))


def _agree(n: int, condition: str) -> None:
    ring = IntegerModRing(n)
    elems = list(ring.elements())
    if condition == "unimodular":
        for a in elems:
            for b in elems:
                expected = exhaustive_witness_oracle(ring, "unimodular", [a, b]) is True
                assert is_unimodular_row([a, b]) == expected, (n, a, b)
        return
    if condition == "nsimple":
        for a in elems[1:]:
            probe = simple_degree(a)
            expected = exhaustive_witness_oracle(ring, "nsimple", [a])
            assert probe.n == (expected.n if expected is not None else None), (n, a)
        return
    if condition == "sr1":
        for a in elems:
            for b in elems:
                if is_unimodular_row([a, b]):
                    probe = find_stable_range1_witness(a, b)
                    assert (probe is None) == (exhaustive_witness_oracle(ring, "sr1", [a, b]) is None)
        return
    for a in elems:
        for b in elems:
            for c in elems:
                if condition == "sr2" and is_unimodular_row([a, b, c]):
                    probe = find_stable_range2_witness(a, b, c)
                elif condition == "simple2" and not c.is_zero and is_two_sided_unimodular([a, b, c]):
                    probe = find_simple_range2_witness(a, b, c)
                else:
                    continue
                expected = exhaustive_witness_oracle(ring, condition, [a, b, c])
                assert (probe is None) == (expected is None), (n, a, b, c)


@pytest.mark.parametrize("condition", ["sr1", "sr2", "simple2", "nsimple", "unimodular"])
@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_probes_agree_with_oracle(n, condition):
    _agree(n, condition)


@pytest.mark.slow
@pytest.mark.parametrize("condition", ["sr1", "sr2", "simple2", "nsimple", "unimodular"])
@pytest.mark.parametrize("n", range(7, 25))
def test_probes_agree_with_oracle_larger_moduli(n, condition):
    _agree(n, condition)
