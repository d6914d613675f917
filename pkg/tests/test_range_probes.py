import random
from itertools import product

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ed_errors import (HypothesisFailed, NotTwoSidedUnimodular, NotUnimodular, ZeroC, ZeroInput)
from range_probes import (SimpleRangeWitness, check_unit_ideal_product,
                          construct_simple_range2_witness, find_komarnytsky_violation,
                          find_simple_range2_witness, find_stable_range1_witness,
                          find_stable_range2_witness, is_two_sided_unimodular, is_unimodular_row,
                          normalize_witness, reducible, simple_degree, to_principal_form,
                          validate_simple_range_witness, witness_from_reduction)
from ring_instances import IntegerModRing, IntegerRing, make_ring

ZZ = IntegerRing()


def ints(ring, *values):
    return [ring.from_int(v) for v in values]


class TestUnimodularity:

    def test_rows(self, zz, zmod12):
        assert is_unimodular_row(ints(zz, 4, 6, 9))
        assert not is_unimodular_row(ints(zz, 4, 6))
        assert is_unimodular_row(ints(zmod12, 3, 4))
        assert not is_unimodular_row(ints(zmod12, 0, 0))
        with pytest.raises(ZeroInput):
            is_unimodular_row([])

    def test_two_sided(self, hx, el):
        assert is_two_sided_unimodular([el(hx, "x - i")])
        assert not is_unimodular_row([el(hx, "x - i")])
        assert not is_two_sided_unimodular([el(hx, "x^2 + 1"), el(hx, "x^4 - 1")])


class TestStableRange:

    def test_sr1_integers(self, zz):
        assert find_stable_range1_witness(*ints(zz, 2, 3)).t == zz.from_int(-1)

    def test_sr1_zmod(self, zmod12):
        assert find_stable_range1_witness(*ints(zmod12, 3, 4)).t == zmod12.one

    def test_sr1_exhausted_is_none(self, zz):
        assert find_stable_range1_witness(*ints(zz, 5, 7), bound=20) is None

    def test_sr1_needs_unimodular_input(self, zz):
        with pytest.raises(NotUnimodular):
            find_stable_range1_witness(*ints(zz, 2, 4))

    def test_sr2_integers(self, zz):
        w = find_stable_range2_witness(*ints(zz, 2, 4, 3))
        assert (w.x, w.y) == (zz.one, zz.zero)
        w = find_stable_range2_witness(*ints(zz, 3, 5, 7))
        assert (w.x, w.y) == (zz.zero, zz.zero)

    def test_reducible_needs_two_entries(self, zz):
        with pytest.raises(ZeroInput):
            reducible([zz.one])

    @given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20))
    def test_sr2_witness_reduces_row(self, a, b, c):
        row = ints(ZZ, a, b, c)
        assume(is_unimodular_row(row))
        w = find_stable_range2_witness(*row)
        assert w is not None
        assert is_unimodular_row([row[0] + row[2] * w.x, row[1] + row[2] * w.y])

    @pytest.mark.parametrize("n", [2, 4, 6, 12])
    def test_zmod_has_stable_range_one(self, n):
        ring = IntegerModRing(n)
        for a in ring.elements():
            for b in ring.elements():
                if is_unimodular_row([a, b]):
                    w = find_stable_range1_witness(a, b)
                    assert w is not None and ring.is_unit(a + b * w.t)


class TestSimpleRange:

    def test_integer_search(self, zz):
        w = find_simple_range2_witness(*ints(zz, 2, 3, 4))
        assert (w.p, w.q, w.d) == (zz.one, zz.one, zz.one)
        assert w.source == "search"
        assert validate_simple_range_witness(*ints(zz, 2, 3, 4), w)

    def test_unit_a_takes_q_zero(self, zz):
        w = find_simple_range2_witness(*ints(zz, 1, 8, 6))
        assert (w.p, w.q) == (zz.one, zz.zero)

    def test_zmod_search(self, zmod12):
        w = find_simple_range2_witness(*ints(zmod12, 2, 3, 4))
        assert (w.p, w.q) == (zmod12.one, zmod12.one)

    def test_input_checks(self, zz):
        with pytest.raises(ZeroC):
            find_simple_range2_witness(*ints(zz, 2, 3, 0))
        with pytest.raises(NotTwoSidedUnimodular):
            find_simple_range2_witness(*ints(zz, 2, 4, 6))

    def test_quaternion_search(self, hx, el):
        a, b, c = el(hx, "x^2 + 1"), el(hx, "x^2 + 1"), el(hx, "x - i")
        w = find_simple_range2_witness(a, b, c)
        assert w is not None
        assert validate_simple_range_witness(a, b, c, w)

    def test_normalize_and_principal_form(self, zz):
        p0, q0, t = normalize_witness(*ints(zz, 4, 6))
        assert (p0, q0, t) == tuple(ints(zz, 2, 3, 2))
        assert to_principal_form(*ints(zz, 2, 3, 4, 1, 1)) == zz.one
        with pytest.raises(ZeroInput):
            normalize_witness(zz.zero, zz.zero)

    def test_forged_witness_rejected(self, zz):
        forged = SimpleRangeWitness(p=zz.one, q=zz.zero, d=zz.one, d_star_unit=True)
        assert not validate_simple_range_witness(*ints(zz, 2, 3, 4), forged)


class TestConstruction:

    def test_zmod_example(self, zmod12):
        w = construct_simple_range2_witness(*ints(zmod12, 2, 3, 4))
        assert (w.p, w.q) == (zmod12.one, zmod12.one)
        assert w.source == "construction"

    def test_unit_a_shortcut(self, zmod12):
        w = construct_simple_range2_witness(*ints(zmod12, 5, 7, 3))
        assert (w.p, w.q) == (zmod12.one, zmod12.zero)

    def test_integers_without_stable_range_one(self, zz):
        # (5, 7) is unimodular but 5 + 7t is never a unit
        with pytest.raises(HypothesisFailed):
            construct_simple_range2_witness(*ints(zz, 5, 7, 1), bound=20)

    @pytest.mark.parametrize("n", [2, 3, 4, 6, 8, 9, 10])
    def test_every_zmod_triple(self, n):
        ring = IntegerModRing(n)
        elems = list(ring.elements())
        for a in elems:
            for b in elems:
                for c in elems[1:]:
                    if not is_two_sided_unimodular([a, b, c]):
                        continue
                    w = construct_simple_range2_witness(a, b, c)
                    assert w.p == ring.one
                    assert validate_simple_range_witness(a, b, c, w)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(11, 31))
    def test_every_zmod_triple_up_to_thirty(self, n):
        self.test_every_zmod_triple(n)


class TestFromReduction:

    def test_integers(self, zz):
        w = witness_from_reduction(*ints(zz, 2, 5, 3))
        assert w.source == "reduction"
        assert validate_simple_range_witness(*ints(zz, 2, 5, 3), w)

    def test_b_zero_reads_the_identity_completion(self, zz):
        w = witness_from_reduction(*ints(zz, 2, 0, 3))
        assert (w.p, w.q) == (zz.one, zz.one)

    def test_f2_polynomials(self, f2x, el):
        a, b, c = el(f2x, "x"), el(f2x, "x + 1"), el(f2x, "x^2")
        w = witness_from_reduction(a, b, c)
        assert validate_simple_range_witness(a, b, c, w)

    @pytest.mark.parametrize("spec, size", [
        ({"kind": "Int"}, 13),
        ({"kind": "PolyFp", "params": {"p": 2}}, 16),
    ])
    def test_sampled_triples_validate(self, spec, size):
        ring = make_ring(spec)
        pool = ring.candidates(size)
        triples = [(a, b, c) for a in pool for b in pool for c in pool
                   if not c.is_zero and is_two_sided_unimodular([a, b, c])]
        for a, b, c in random.Random(f"from-reduction:{spec['kind']}").sample(triples, 200):
            w = witness_from_reduction(a, b, c)
            assert w.source == "reduction"
            assert validate_simple_range_witness(a, b, c, w), (a, b, c)


class TestUnitIdealProduct:

    def test_commutative_rings(self, zz, zmod12):
        assert check_unit_ideal_product(*ints(zz, 1, -1))
        assert check_unit_ideal_product(*ints(zz, 2, 3))
        assert check_unit_ideal_product(*ints(zmod12, 5, 7))

    def test_quaternion_pairs(self, hx, el):
        assert check_unit_ideal_product(el(hx, "x - i"), el(hx, "x - j"))
        # (i*x + 1)*(x + i) = i*(x^2 + 1)
        assert not check_unit_ideal_product(el(hx, "i*x + 1"), el(hx, "x + i"))

    def test_skew_pair(self, f4_skew, el):
        assert not check_unit_ideal_product(el(f4_skew, "x + 1"), el(f4_skew, "x + 1"))

    @pytest.mark.slow
    def test_quaternion_grid_up_to_degree_2(self, hx, el):
        F = hx.field
        coefficients = [F.zero, F.one, F.neg(F.one), F.basis("i"), F.basis("j"), F.basis("k")]
        pool = [sum((hx.monomial(c, d) for d, c in enumerate(cs)), hx.zero)
                for cs in product(coefficients, repeat=3)]
        pool = [e for e in pool if not e.is_zero]
        counterexamples = _unit_product_counterexamples(hx, pool)
        assert (el(hx, "i*x + 1"), el(hx, "x + i")) in counterexamples

    @pytest.mark.slow
    def test_skew_grid_up_to_degree_3(self, f4_skew, el):
        pool = f4_skew.candidates(256)[1:]
        assert max(f4_skew.degree(e) for e in pool) == 3
        counterexamples = _unit_product_counterexamples(f4_skew, pool)
        assert (el(f4_skew, "x + 1"), el(f4_skew, "x + 1")) in counterexamples


def _unit_product_counterexamples(ring, pool):
    """Pairs of the pool breaking the product property; invariant pairs never do."""
    invariant = [e for e in pool if ring.is_invariant(e)]
    for a in invariant:
        for b in invariant:
            assert check_unit_ideal_product(a, b), (a, b)
    unit_ideal = [e for e in pool if ring.generates_unit_ideal(e)]
    found = []
    for a in unit_ideal:
        for b in unit_ideal:
            if ring.generates_unit_ideal(a * b):
                continue
            assert not check_unit_ideal_product(a, b)
            assert not (ring.is_invariant(a) and ring.is_invariant(b)), (a, b)
            found.append((a, b))
    return found


class TestSimpleDegree:

    def test_units(self, zmod12, hx):
        result = simple_degree(zmod12.from_int(5))
        assert result.n == 1
        assert result.combination == ((zmod12.from_int(5), zmod12.one),)
        assert simple_degree(hx.one).n == 1

    def test_commutative_non_unit(self, zmod12):
        assert simple_degree(zmod12.from_int(2)).n is None

    def test_skew_linear_factor_needs_two_terms(self, f4_skew, el):
        a = el(f4_skew, "x + 1")
        result = simple_degree(a, n_max=3, coeff_bound=12)
        assert result.n == 2
        total = f4_skew.zero
        for u, v in result.combination:
            total = total + u * a * v
        assert total == f4_skew.one

    def test_quaternion_linear_factor_needs_two_terms(self, hx, el):
        # (k/2)*(x - i)*j + (i/2)*(x - i)*1 = 1
        a = el(hx, "x - i")
        result = simple_degree(a, n_max=2, coeff_bound=25)
        assert result.n == 2
        total = hx.zero
        for u, v in result.combination:
            total = total + u * a * v
        assert total == hx.one

    def test_central_element_never_simple(self, f4_skew, el):
        assert simple_degree(el(f4_skew, "x^2 + 1"), n_max=2, coeff_bound=8).n is None

    def test_zero(self, zz):
        with pytest.raises(ZeroInput):
            simple_degree(zz.zero)


class TestKomarnytsky:

    def test_quaternion_violation(self, hx, el):
        violation = find_komarnytsky_violation(hx, 64)
        assert violation.element == el(hx, "x^2 + 1")
        assert violation.factor == el(hx, "x + i")
        assert violation.cofactor == el(hx, "x - i")
        assert hx.is_invariant(violation.element) and not hx.is_invariant(violation.factor)

    def test_commutative_rings_have_none(self, zz, qx):
        assert find_komarnytsky_violation(zz, 16) is None
        assert find_komarnytsky_violation(qx, 16) is None
