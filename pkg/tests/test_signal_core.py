import math

import numpy as np
import pytest

import uncertainty_lab as ul
from uncertainty_lab import signal_core as sc

GRID = ul.Grid(1024, 8.0)


def random_signal(seed, grid=GRID):
    rng = np.random.default_rng(seed)
    x = grid.points
    vals = np.zeros(grid.n, dtype=complex)
    for _ in range(3):
        d = rng.uniform(0.4, 1.5)
        x0 = rng.uniform(-2, 2)
        b = rng.uniform(-4, 4)
        vals += rng.uniform(0.3, 1.0) * np.exp(1j * b * x) * np.exp(-np.pi * ((x - x0) / d) ** 2)
    return sc.SampledSignal(grid, vals)


class TestGrid:
    def test_zero_on_grid(self):
        assert GRID.points[GRID.n // 2] == 0.0

    def test_spacing(self):
        assert GRID.dx == pytest.approx(2 * 8.0 / 1024)
        dual = GRID.dual()
        assert dual.dx == pytest.approx(1.0 / (GRID.n * GRID.dx))
        assert dual.x_max == pytest.approx(1.0 / (2 * GRID.dx))

    def test_validation(self):
        with pytest.raises(ul.InvalidParameter):
            ul.Grid(17, 8.0)  # odd
        with pytest.raises(ul.InvalidParameter):
            ul.Grid(14, 8.0)  # too small
        with pytest.raises(ul.InvalidParameter):
            ul.Grid(1024, -1.0)


class TestSampling:
    def test_gaussian_unit_norm(self):
        # closed form: integral 2^(1/2) e^(-2 pi x^2) dx = 1
        f = ul.normalized_gaussian(GRID, 1.0)
        assert ul.l2_norm(f) == pytest.approx(1.0, abs=1e-10)

    @pytest.mark.parametrize("d", [0.5, 1.0, 2.0])
    def test_gaussian_family_norm(self, d):
        assert ul.l2_norm(ul.normalized_gaussian(GRID, d)) == pytest.approx(1.0, abs=1e-10)

    def test_indicator_mass(self):
        f = ul.indicator(GRID, 1.0)
        assert ul.l2_norm(f) ** 2 == pytest.approx(2.0, abs=2 * GRID.dx)

    def test_zero_custom(self):
        f = ul.custom(GRID, np.zeros(GRID.n))
        assert ul.l2_norm(f) == 0.0

    def test_custom_length_mismatch(self):
        with pytest.raises(ul.GridMismatch):
            ul.custom(GRID, np.zeros(GRID.n - 1))

    def test_bad_scale(self):
        with pytest.raises(ul.InvalidParameter):
            ul.normalized_gaussian(GRID, -1.0)
        with pytest.raises(ul.InvalidParameter):
            ul.indicator(GRID, 0.0)

    def test_sample_dispatch(self):
        f = ul.sample("gaussian", [1.0], GRID)
        g = ul.normalized_gaussian(GRID, 1.0)
        assert np.allclose(f.values, g.values)
        with pytest.raises(ul.InvalidParameter):
            ul.sample("nope", [1.0], GRID)

    def test_hermite_orthonormal(self):
        h0 = ul.hermite_gaussian(GRID, 0)
        h1 = ul.hermite_gaussian(GRID, 1)
        h2 = ul.hermite_gaussian(GRID, 2)
        for h in (h0, h1, h2):
            assert ul.l2_norm(h) == pytest.approx(1.0, abs=1e-10)
        assert abs(ul.inner(h0, h1)) < 1e-12
        assert abs(ul.inner(h1, h2)) < 1e-12


class TestInner:
    def test_inner_is_norm_squared(self):
        f = ul.normalized_gaussian(GRID, 1.0)
        assert ul.inner(f, f).real == pytest.approx(ul.l2_norm(f) ** 2, rel=1e-12)

    def test_modulated_inner_smaller(self):
        f = ul.normalized_gaussian(GRID, 1.0)
        g = ul.modulate(f, 2 * np.pi * 5)
        assert abs(ul.inner(f, g)) < ul.inner(f, f).real

    def test_parity_orthogonality(self):
        x = GRID.points
        even = sc.SampledSignal(GRID, np.exp(-np.pi * x ** 2).astype(complex))
        odd = sc.SampledSignal(GRID, (x * np.exp(-np.pi * x ** 2)).astype(complex))
        assert abs(ul.inner(even, odd)) < 1e-12

    def test_grid_mismatch(self):
        f = ul.normalized_gaussian(GRID, 1.0)
        g = ul.normalized_gaussian(ul.Grid(512, 8.0), 1.0)
        with pytest.raises(ul.GridMismatch):
            ul.inner(f, g)


class TestFourier:
    @pytest.mark.parametrize("d", [0.5, 1.0, 2.0])
    def test_gaussian_transform_pair(self, d):
        # closed form: the transform of g_d is g_{1/d} on the dual grid
        spectrum = ul.fourier(ul.normalized_gaussian(GRID, d))
        expected = ul.normalized_gaussian(spectrum.grid, 1.0 / d)
        assert np.max(np.abs(spectrum.values - expected.values)) < 1e-12

    def test_parseval_random(self):
        for seed in range(5):
            f = random_signal(seed)
            assert ul.l2_norm(ul.fourier(f)) == pytest.approx(ul.l2_norm(f), rel=1e-8)

    def test_indicator_sinc(self):
        # closed form: integral_{-1}^{1} e^(-2 pi i x w) dx = sin(2 pi w) / (pi w);
        # dx must be small enough that the spectral aliasing tails stay below 1e-6
        grid = ul.Grid(16384, 8.0)
        spectrum = ul.fourier(ul.indicator(grid, 1.0))
        om = spectrum.grid.points
        k = int(np.argmin(np.abs(om - 0.25)))
        assert om[k] == pytest.approx(0.25, abs=1e-12)
        expected = math.sin(2 * math.pi * 0.25) / (math.pi * 0.25)
        assert spectrum.values[k] == pytest.approx(expected, abs=1e-6)

    def test_double_transform_reverses(self):
        f = random_signal(11)
        ff = ul.fourier(ul.fourier(f).with_domain(sc.TIME))
        # index 0 (x = -x_max) has no mirror sample on the half-open grid
        assert np.max(np.abs(ff.values[1:] - f.values[1:][::-1])) < 1e-10

    def test_roundtrip(self):
        f = random_signal(12)
        back = ul.inverse_fourier(ul.fourier(f), f.grid)
        assert np.max(np.abs(back.values - f.values)) < 1e-12

    def test_wrong_domain(self):
        f = ul.fourier(ul.normalized_gaussian(GRID, 1.0))
        with pytest.raises(ul.DomainError):
            ul.fourier(f)
        with pytest.raises(ul.DomainError):
            ul.inverse_fourier(f.with_domain(sc.TIME))


class TestOperators:
    def test_translate_identity(self):
        f = random_signal(2)
        g = ul.translate(f, 0.0)
        assert np.max(np.abs(g.values - f.values)) < 1e-10

    def test_translate_grid_shift(self):
        f = ul.normalized_gaussian(GRID, 1.0)
        shifted = ul.translate(f, 16 * GRID.dx)
        assert np.max(np.abs(shifted.values - np.roll(f.values, 16))) < 1e-10

    def test_modulate_preserves_magnitude(self):
        f = random_signal(3)
        g = ul.modulate(f, 3.7)
        assert np.allclose(np.abs(g.values), np.abs(f.values))

    @pytest.mark.parametrize("k", [0.5, 2.0, 3.0])
    def test_dilate_l2_norm(self, k):
        f = ul.normalized_gaussian(GRID, 1.0)
        assert ul.l2_norm(ul.dilate_l2(f, k)) == pytest.approx(1.0, abs=1e-6)

    def test_dilate_roundtrip(self):
        f = ul.normalized_gaussian(GRID, 1.0)
        back = ul.dilate_l2(ul.dilate_l2(f, 2.0), 0.5)
        assert np.max(np.abs(back.values - f.values)) < 1e-6

    def test_dilate_bad_factor(self):
        f = ul.normalized_gaussian(GRID, 1.0)
        with pytest.raises(ul.InvalidParameter):
            ul.dilate_l2(f, 0.0)
        with pytest.raises(ul.InvalidParameter):
            ul.dilate_unnormalized(f, -2.0)

    def test_time_limit_projection(self):
        f = random_signal(4)
        once = ul.time_limit(f, 1.5)
        twice = ul.time_limit(once, 1.5)
        assert np.array_equal(once.values, twice.values)
        assert ul.l2_norm(once) <= ul.l2_norm(f) + 1e-15

    def test_band_limit_projection(self):
        f = random_signal(5)
        once = ul.band_limit(f, 2.0)
        twice = ul.band_limit(once, 2.0)
        assert np.max(np.abs(once.values - twice.values)) < 1e-10
        assert ul.l2_norm(once) <= ul.l2_norm(f) + 1e-12

    def test_band_limit_self_adjoint(self):
        f, g = random_signal(6), random_signal(7)
        lhs = ul.inner(ul.band_limit(f, 1.0), g)
        rhs = ul.inner(f, ul.band_limit(g, 1.0))
        assert abs(lhs - rhs) < 1e-8

    def test_projection_params(self):
        f = random_signal(8)
        with pytest.raises(ul.InvalidParameter):
            ul.time_limit(f, -1.0)
        with pytest.raises(ul.InvalidParameter):
            ul.band_limit(f, 0.0)

    def test_tail_mass(self):
        assert ul.tail_mass(ul.normalized_gaussian(GRID, 1.0)) < 1e-12
        wide = ul.normalized_gaussian(GRID, 6.0)
        assert ul.tail_mass(wide) > 1e-6
