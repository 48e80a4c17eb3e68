import cmath
import math

import numpy as np
import pytest

from catmix import (
    CatMixtureSpec,
    DegenerateCatState,
    WeightViolation,
    d_cat,
    default_grid,
    joint_entropy,
    partial_trace,
    reduced_entropy,
    small_alpha_entropy,
    small_alpha_reduced_weights,
    spectral_pair,
    sweep_entropy,
    validate_cat_mixture,
)
from catmix.fock import purity_from_matrix
from catmix.oracle import (
    cat_mixture_fock,
    cat_mode_cutoffs,
    cat_reduced_entropy_fock,
    fock_entropy,
)

LN2 = math.log(2.0)


class TestValidation:
    def test_weight_sum(self):
        with pytest.raises(WeightViolation):
            validate_cat_mixture(CatMixtureSpec(0.6, 0.6, 1.0, 1.0))

    def test_negative_weight(self):
        with pytest.raises(WeightViolation):
            validate_cat_mixture(CatMixtureSpec(-0.2, 1.2, 1.0, 1.0))

    def test_degenerate_odd_cat(self):
        with pytest.raises(DegenerateCatState):
            validate_cat_mixture(CatMixtureSpec(0.5, 0.5, 0.0, 0.0))

    def test_even_only_at_zero_is_fine(self):
        validate_cat_mixture(CatMixtureSpec(1.0, 0.0, 0.0, 0.0))


class TestJointEntropy:
    def test_pure(self):
        assert joint_entropy(CatMixtureSpec(1.0, 0.0, 1.0, 1.0)) == 0.0

    def test_balanced(self):
        assert joint_entropy(CatMixtureSpec(0.5, 0.5, 1.0, 1.0)) == pytest.approx(
            LN2, abs=1e-15
        )

    def test_against_fock(self):
        spec = CatMixtureSpec(0.3, 0.7, 1.0, 0.5)
        assert joint_entropy(spec) == pytest.approx(
            fock_entropy(cat_mixture_fock(spec)), abs=1e-8
        )


class TestDCat:
    def test_zero_alpha1(self):
        assert d_cat(CatMixtureSpec(0.7, 0.3, 0.0, 1.0)) == 0.0

    def test_even_cat_against_purity(self):
        # a=1: D from 1 - 2 Tr(rho1^2) of the Fock partial trace
        spec = CatMixtureSpec(1.0, 0.0, 1.0, 1.0)
        rho1 = partial_trace(cat_mixture_fock(spec), 1)
        tr2 = purity_from_matrix(rho1)
        assert d_cat(spec) == pytest.approx((1.0 - tr2) / 2.0, abs=1e-10)

    def test_large_amplitude_near_quarter(self):
        spec = CatMixtureSpec(0.5, 0.5, 2.0, 2.0)
        assert d_cat(spec) == pytest.approx(0.25, abs=1e-5)

    def test_degenerate(self):
        with pytest.raises(DegenerateCatState):
            d_cat(CatMixtureSpec(0.5, 0.5, 0.0, 0.0))


class TestReducedEntropy:
    def test_zero_alpha1(self):
        assert reduced_entropy(CatMixtureSpec(0.7, 0.3, 0.0, 1.0), 1) == 0.0

    def test_large_amplitude_limit(self):
        for m in (3.0, 4.0):
            spec = CatMixtureSpec(0.5, 0.5, m, m)
            assert reduced_entropy(spec, 1) == pytest.approx(LN2, abs=1e-3)

    def test_against_fock(self):
        spec = CatMixtureSpec(0.5, 0.5, 1.0, 1.0)
        assert reduced_entropy(spec, 1) == pytest.approx(
            cat_reduced_entropy_fock(spec, 1), abs=1e-8
        )

    def test_subsystem_swap(self):
        spec = CatMixtureSpec(0.4, 0.6, 1.0, 0.5)
        swapped = CatMixtureSpec(0.4, 0.6, 0.5, 1.0)
        assert reduced_entropy(spec, 2) == reduced_entropy(swapped, 1)

    def test_phase_invariance(self):
        rng = np.random.default_rng(10)
        for _ in range(20):
            m1, m2 = rng.uniform(0.2, 2.0, 2)
            a = float(rng.uniform(0.0, 1.0))
            base = reduced_entropy(CatMixtureSpec(a, 1.0 - a, m1, m2), 1)
            p1 = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            p2 = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            rotated = reduced_entropy(CatMixtureSpec(a, 1.0 - a, m1 * p1, m2 * p2), 1)
            assert rotated == pytest.approx(base, abs=1e-13)

    def test_range(self):
        rng = np.random.default_rng(11)
        for _ in range(30):
            m1, m2 = rng.uniform(0.0, 3.0, 2)
            a = float(rng.uniform(0.0, 1.0))
            if m1 == 0.0 and m2 == 0.0:
                continue
            s = reduced_entropy(CatMixtureSpec(a, 1.0 - a, m1, m2), 1)
            assert 0.0 <= s <= LN2 + 1e-12

    def test_invalid_subsystem(self):
        with pytest.raises(ValueError):
            reduced_entropy(CatMixtureSpec(0.5, 0.5, 1.0, 1.0), 3)

    def test_oracle_equivalence_grid(self):
        for m1 in (0.25, 0.5, 1.0, 2.0):
            for ratio in (0.5, 1.0, 2.0):
                for a in (0.2, 0.5, 0.8):
                    spec = CatMixtureSpec(a, 1.0 - a, m1, ratio * m1)
                    assert reduced_entropy(spec, 1) == pytest.approx(
                        cat_reduced_entropy_fock(spec, 1, cat_mode_cutoffs(spec)),
                        abs=1e-8,
                    )


class TestSmallAlpha:
    def test_even_only(self):
        assert small_alpha_reduced_weights(CatMixtureSpec(1.0, 0.0, 1.0, 1.0)) == (1.0, 0.0)
        assert small_alpha_entropy(CatMixtureSpec(1.0, 0.0, 1.0, 1.0)) == 0.0

    def test_equal_amplitudes(self):
        spec = CatMixtureSpec(0.5, 0.5, 0.3, 0.3)
        w0, w1 = small_alpha_reduced_weights(spec)
        assert (w0, w1) == pytest.approx((0.75, 0.25), abs=1e-15)
        expected = 0.75 * math.log(4.0 / 3.0) + 0.25 * math.log(4.0)
        assert small_alpha_entropy(spec) == pytest.approx(expected, abs=1e-15)

    def test_two_to_one_ratio(self):
        spec = CatMixtureSpec(0.5, 0.5, 0.1, 0.2)
        assert small_alpha_reduced_weights(spec) == pytest.approx((0.9, 0.1), abs=1e-15)

    def test_limit_consistency(self):
        for ratio in (0.5, 1.0, 2.0):
            spec = CatMixtureSpec(0.5, 0.5, 1e-3, ratio * 1e-3)
            assert reduced_entropy(spec, 1) == pytest.approx(
                small_alpha_entropy(spec), abs=1e-4
            )

    def test_half_ratio_value(self):
        # weights (0.6, 0.4) at |alpha2| = 0.5 |alpha1|
        spec = CatMixtureSpec(0.5, 0.5, 1.0, 0.5)
        w0, w1 = small_alpha_reduced_weights(spec)
        assert (w0, w1) == pytest.approx((0.6, 0.4), abs=1e-15)
        expected = -0.6 * math.log(0.6) - 0.4 * math.log(0.4)
        assert small_alpha_entropy(spec) == pytest.approx(expected, abs=1e-15)
        assert reduced_entropy(
            CatMixtureSpec(0.5, 0.5, 1e-3, 0.5e-3), 1
        ) == pytest.approx(expected, abs=1e-4)


class TestSweep:
    def test_single_even_row(self):
        rows = sweep_entropy([1.0], [0.0], 1.0, 0.0)
        assert len(rows) == 1
        assert rows[0].entropy1 == 0.0

    def test_large_point_near_ln2(self):
        rows = sweep_entropy([0.5, 1.0, 2.0], [4.0], 0.5, 0.5)
        for row in rows:
            assert row.entropy1 == pytest.approx(LN2, abs=1e-3)

    def test_ordering(self):
        rows = sweep_entropy([2.0, 0.5], [1.0, 0.5], 0.5, 0.5)
        assert [(r.ratio, r.abs_alpha1) for r in rows] == [
            (2.0, 0.5),
            (2.0, 1.0),
            (0.5, 0.5),
            (0.5, 1.0),
        ]

    def test_rows_match_fock(self):
        for ratio in (0.5, 2.0):
            rows = sweep_entropy([ratio], [0.5], 0.5, 0.5)
            spec = CatMixtureSpec(0.5, 0.5, 0.5, ratio * 0.5)
            assert rows[0].entropy1 == pytest.approx(
                cat_reduced_entropy_fock(spec, 1), abs=1e-8
            )

    def test_degenerate_point_raises(self):
        with pytest.raises(DegenerateCatState):
            sweep_entropy([1.0], [0.0], 0.5, 0.5)

    def test_default_grid(self):
        grid = default_grid()
        assert len(grid) == 200
        assert grid[0] == 0.01
        assert grid[-1] == pytest.approx(4.0, abs=1e-15)
