import math

import numpy as np
import pytest

from catmix import (
    ClampExceeded,
    TwoStateMixtureSpec,
    d_parameter,
    entropy_closed,
    normalized_mixture,
    overlap,
    replica_entropy,
    spectral_pair,
    trace_power_recurrence,
    trace_power_spectral,
)
from catmix.oracle import fock_entropy, random_two_state_specs, two_state_fock

BALANCED = TwoStateMixtureSpec(0.5, 0.5, 0.0, 1.0, -1.0)
PURE = TwoStateMixtureSpec(1.0, 0.0, 0.0, 0.7, -0.3)


def trace_power_block_reference(spec, n):
    """Test-only 4x4 block recurrence for Tr rho^n.

    Iterates the full coefficient vector (C1, C2, C3, C4) from (a, c, c*, b)
    and traces as C1 + C4 + <beta|alpha> C2 + <alpha|beta> C3.
    """
    s = overlap(spec.alpha, spec.beta)
    sc = s.conjugate()
    c = complex(spec.c)
    block = np.array(
        [
            [spec.a + c.conjugate() * sc, spec.a * s + c.conjugate()],
            [c + spec.b * sc, c * s + spec.b],
        ]
    )
    m4 = np.zeros((4, 4), dtype=complex)
    m4[:2, :2] = block
    m4[2:, 2:] = block
    coeffs = np.array([spec.a, c, c.conjugate(), spec.b])
    for _ in range(n - 1):
        coeffs = m4 @ coeffs
    return (coeffs[0] + coeffs[3] + s * coeffs[1] + sc * coeffs[2]).real


class TestDParameter:
    def test_equal_amplitudes(self):
        assert d_parameter(TwoStateMixtureSpec(0.5, 0.5, 0.0, 1.0, 1.0)) == 0.0

    def test_pure_c_equals_sqrt_ab(self):
        spec = normalized_mixture(0.4, 0.4, math.sqrt(0.16), 1.0, -1.0)
        assert d_parameter(spec) == pytest.approx(0.0, abs=1e-15)

    def test_balanced_value(self):
        # Oracle: Tr rho^2 of the Fock matrix gives 1 - 2D
        d = d_parameter(BALANCED)
        assert d == pytest.approx(0.25 * (1.0 - math.exp(-4.0)), abs=1e-15)
        rho = two_state_fock(BALANCED)
        tr2 = float(np.vdot(rho.entries, rho.entries).real)
        assert d == pytest.approx((1.0 - tr2) / 2.0, abs=1e-12)

    def test_clamp_exceeded(self):
        with pytest.raises(ClampExceeded):
            # bypass validation on purpose: ab - |c|^2 < 0 by a wide margin
            d_parameter(TwoStateMixtureSpec(0.5, 0.5, 1.0, 1.0, -1.0))


class TestSpectralPair:
    def test_endpoints(self):
        assert (spectral_pair(0.0).lambda1, spectral_pair(0.0).lambda2) == (1.0, 0.0)
        assert (spectral_pair(0.25).lambda1, spectral_pair(0.25).lambda2) == (0.5, 0.5)

    def test_balanced_spectrum_against_fock(self):
        pair = spectral_pair(d_parameter(BALANCED))
        e2 = math.exp(-2.0)
        assert pair.lambda1 == pytest.approx((1.0 + e2) / 2.0, abs=1e-14)
        assert pair.lambda2 == pytest.approx((1.0 - e2) / 2.0, abs=1e-14)
        from catmix import hermitian_eigenvalues

        eigs = hermitian_eigenvalues(two_state_fock(BALANCED))
        assert eigs[0] == pytest.approx(pair.lambda1, abs=1e-10)
        assert eigs[1] == pytest.approx(pair.lambda2, abs=1e-10)

    def test_product_and_sum(self):
        for d in (0.0, 0.1, 0.2, 0.25):
            pair = spectral_pair(d)
            assert pair.lambda1 + pair.lambda2 == pytest.approx(1.0, abs=1e-15)
            assert pair.lambda1 * pair.lambda2 == pytest.approx(d, abs=1e-15)


class TestTracePowers:
    def test_n1_is_trace(self):
        for spec in random_two_state_specs(10, max_abs=2.0, seed=1):
            assert trace_power_recurrence(spec, 1) == pytest.approx(1.0, abs=1e-12)

    def test_balanced_n2(self):
        assert trace_power_recurrence(BALANCED, 2) == pytest.approx(
            (1.0 + math.exp(-4.0)) / 2.0, abs=1e-14
        )

    def test_pure_powers(self):
        for n in (1, 2, 3, 7):
            assert trace_power_recurrence(PURE, n) == pytest.approx(1.0, abs=1e-12)

    def test_recurrence_matches_spectral(self):
        for spec in random_two_state_specs(20, max_abs=2.5, seed=2):
            pair = spectral_pair(d_parameter(spec))
            for n in range(1, 13):
                assert trace_power_recurrence(spec, n) == pytest.approx(
                    trace_power_spectral(pair, n), abs=1e-12
                )

    def test_recurrence_matches_block_reference(self):
        for spec in random_two_state_specs(10, max_abs=2.0, seed=3):
            for n in range(1, 9):
                assert trace_power_recurrence(spec, n) == pytest.approx(
                    trace_power_block_reference(spec, n), abs=1e-12
                )

    def test_spectral_rejects_nonpositive_n(self):
        pair = spectral_pair(0.1)
        with pytest.raises(ValueError):
            trace_power_spectral(pair, 0.0)

    def test_recurrence_rejects_n_zero(self):
        with pytest.raises(ValueError):
            trace_power_recurrence(BALANCED, 0)


class TestEntropy:
    def test_pure_is_zero(self):
        assert entropy_closed(PURE) == 0.0
        assert abs(replica_entropy(PURE)) < 1e-9

    def test_equal_amplitudes_zero(self):
        spec = TwoStateMixtureSpec(0.3, 0.7, 0.0, 1.0 + 1.0j, 1.0 + 1.0j)
        assert entropy_closed(spec) == 0.0

    def test_balanced_value_against_fock(self):
        got = entropy_closed(BALANCED)
        # frozen from the Fock oracle (cutoff 16); the replica finite
        # difference agrees to 1e-10
        assert got == pytest.approx(0.6839611990567596, abs=1e-12)
        assert got == pytest.approx(fock_entropy(two_state_fock(BALANCED)), abs=1e-8)

    def test_replica_matches_closed(self):
        assert replica_entropy(BALANCED, 1e-5) == pytest.approx(
            entropy_closed(BALANCED), abs=1e-6
        )
        for spec in random_two_state_specs(20, max_abs=2.5, seed=4):
            assert replica_entropy(spec, 1e-5) == pytest.approx(
                entropy_closed(spec), abs=1e-6
            )

    def test_maximally_mixed(self):
        # alpha far from beta, c = 0, a = b: d -> 1/4, entropy -> ln 2
        spec = TwoStateMixtureSpec(0.5, 0.5, 0.0, 4.0, -4.0)
        assert entropy_closed(spec) == pytest.approx(math.log(2.0), abs=1e-6)
        assert replica_entropy(spec, 1e-5) == pytest.approx(math.log(2.0), abs=1e-6)

    def test_bounds(self):
        for spec in random_two_state_specs(30, max_abs=3.0, seed=5):
            s = entropy_closed(spec)
            assert 0.0 <= s <= math.log(2.0) + 1e-15

    def test_swap_symmetry(self):
        for spec in random_two_state_specs(15, max_abs=2.0, seed=6):
            swapped = TwoStateMixtureSpec(
                spec.b, spec.a, complex(spec.c).conjugate(), spec.beta, spec.alpha
            )
            assert entropy_closed(swapped) == pytest.approx(
                entropy_closed(spec), abs=1e-14
            )

    def test_displacement_invariance(self):
        rng = np.random.default_rng(7)
        for spec in random_two_state_specs(15, max_abs=2.0, seed=8):
            gamma = complex(*rng.uniform(-2, 2, 2))
            shifted = TwoStateMixtureSpec(
                spec.a, spec.b, spec.c, spec.alpha + gamma, spec.beta + gamma
            )
            assert entropy_closed(shifted) == pytest.approx(
                entropy_closed(spec), abs=1e-12
            )

    def test_monotone_in_d(self):
        from catmix.replica import binary_entropy

        grid = np.linspace(0.0, 0.25, 200)
        values = [binary_entropy(spectral_pair(d)) for d in grid]
        assert all(b >= a - 1e-15 for a, b in zip(values, values[1:]))

    def test_replica_step_validation(self):
        with pytest.raises(ValueError):
            replica_entropy(BALANCED, 0.0)
        with pytest.raises(ValueError):
            replica_entropy(BALANCED, 1e-2)

    def test_oracle_equivalence_grid(self):
        for spec in random_two_state_specs(50, max_abs=3.0, seed=9):
            assert entropy_closed(spec) == pytest.approx(
                fock_entropy(two_state_fock(spec)), abs=1e-8
            )
