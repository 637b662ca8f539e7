import math

import numpy as np
import pytest

from rispaces import rademacher as rd
from rispaces import stepfn as sf
from rispaces import spaces as sp
from rispaces._signdist_py import enumerate_signed_sums as enum_py
from rispaces.rademacher import _kernel


class TestRademacherFunctions:
    def test_r1(self):
        r = rd.rademacher(1)
        assert r(0.25) == 1.0
        assert r(0.75) == -1.0

    def test_r2_quarters(self):
        r = rd.rademacher(2)
        assert [r(t) for t in (0.2, 0.4, 0.7, 0.9)] == [1.0, -1.0, 1.0, -1.0]

    def test_mean_zero(self):
        for n in (1, 3, 7):
            assert sf.integral(rd.rademacher(n)) == 0.0

    def test_orthogonality(self):
        prod = sf.multiply(rd.rademacher(3), rd.rademacher(5))
        assert sf.integral(prod) == 0.0

    def test_rejects_out_of_range(self):
        for n in (0, -1, rd.MAX_ENUM_N + 1):
            with pytest.raises(rd.RademacherError):
                rd.rademacher(n)


class TestSignedSum:
    def test_equal_plus(self):
        s = rd.signed_sum([1.0, 1.0], [1, 1])
        assert [s(t) for t in (0.2, 0.5, 0.7, 1.0)] == [2.0, 0.0, 0.0, -2.0]

    def test_negation(self):
        s1 = rd.signed_sum([1.0, 2.0], [1, -1])
        s2 = rd.signed_sum([1.0, 2.0], [-1, 1])
        assert s2 == -s1

    def test_one_two_mixed(self):
        s = rd.signed_sum([1.0, 2.0], [1, -1])
        assert [s(t) for t in (0.2, 0.45, 0.7, 0.95)] == [-1.0, 3.0, -3.0, 1.0]

    def test_rejects_bad_signs(self):
        with pytest.raises(rd.RademacherError):
            rd.signed_sum([1.0], [0])

    def test_matches_explicit_combination(self):
        coeffs = [0.7, -1.3, 2.1]
        signs = [1, -1, 1]
        fns = [rd.rademacher(i + 1) for i in range(3)]
        want = sf.linear_combination(fns, [s * c for s, c in zip(signs, coeffs)])
        assert rd.signed_sum(coeffs, signs) == want


class TestSumRearrangement:
    def test_two_equal(self):
        r = rd.sum_rearrangement([1.0, 1.0])
        assert list(r.values) == [2.0, 0.0]
        assert list(r.breakpoints) == [0.0, 0.5, 1.0]

    def test_three_equal(self):
        r = rd.sum_rearrangement([1.0, 1.0, 1.0])
        assert list(r.values) == [3.0, 1.0]
        assert list(r.breakpoints) == [0.0, 0.25, 1.0]

    def test_four_equal_l1(self):
        r = rd.sum_rearrangement([1.0] * 4)
        assert sf.l1_norm(r) == pytest.approx(1.5, abs=1e-15)

    def test_binomial_matches_enumeration(self):
        # exactly-representable coefficient keeps both paths bitwise equal
        for n in (2, 5, 12, 20):
            for a in (1.0, 0.5, 3.0):
                binom = rd.sum_rearrangement([a] * n)
                sums = np.abs(enum_py(np.full(n, a)))
                vals, counts = np.unique(sums, return_counts=True)
                direct = rd._atoms_to_step(vals[::-1], counts[::-1], 1 << n)
                assert binom == direct

    def test_matches_rearranged_signed_sum(self, rng):
        for n in (1, 4, 8, 12):
            coeffs = rng.normal(size=n)
            full = rd.signed_sum(coeffs, [1] * n)
            assert rd.sum_rearrangement(coeffs) == sf.rearrange(full)

    def test_symmetry(self, rng):
        coeffs = rng.normal(size=7)
        base = rd.sum_rearrangement(coeffs)
        assert rd.sum_rearrangement(-coeffs) == base  # sign flips are exact
        # permutations re-round the accumulation, so compare pointwise
        perm = rd.sum_rearrangement(coeffs[::-1])
        breaks = sf.common_breakpoints([base, perm])
        assert np.allclose(
            sf.values_on(base, breaks), sf.values_on(perm, breaks), atol=1e-12
        )

    def test_caps(self):
        with pytest.raises(rd.RademacherError):
            rd.sum_rearrangement(list(np.arange(rd.MAX_ENUM_N + 1, dtype=float)))
        with pytest.raises(rd.RademacherError):
            rd.sum_rearrangement([1.0] * (rd.MAX_EQUAL_N + 1))
        rd.sum_rearrangement([1.0] * rd.MAX_EQUAL_N)  # fast path still fine


class TestKernel:
    def test_fallback_matches_selected_kernel(self, rng):
        coeffs = rng.normal(size=10)
        a = np.sort(_kernel.enumerate_signed_sums(coeffs))
        b = np.sort(enum_py(coeffs))
        assert np.array_equal(a, b)

    def test_small_case_by_hand(self):
        got = np.sort(enum_py(np.array([1.0, 2.0])))
        assert np.array_equal(got, [-3.0, -1.0, 1.0, 3.0])


class TestNorms:
    def test_single_function_unit_norm(self):
        for E in (sp.lp_space(1.0), sp.lp_space(2.0), sp.linf_space()):
            assert rd.rademacher_sum_norm([1.0], E) == pytest.approx(1.0, rel=1e-12)

    def test_l1_equal_four(self):
        assert rd.rademacher_sum_norm([1.0] * 4, sp.lp_space(1.0)) == pytest.approx(
            1.5, abs=1e-15
        )

    def test_l2_identity(self, rng):
        E = sp.lp_space(2.0)
        for n in (1, 2, 5, 10):
            a = rng.normal(size=n)
            assert rd.rademacher_sum_norm(a, E) == pytest.approx(
                float(np.linalg.norm(a)), rel=1e-10
            )
