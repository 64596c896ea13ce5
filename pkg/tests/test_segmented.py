import math

import pytest

from textlaws import RankFrequencyList, CoverageCurve, ValidationError
from textlaws.fitting import (
    fit_coverage,
    ols_line,
    segmented_loglog_fit,
)


def rank_list(pairs):
    rows = tuple((r, f"w{r}", f) for r, f in pairs)
    total = sum(f for _, f in pairs)
    return RankFrequencyList(rows, total)


def continuous_piecewise(slopes, uppers, amp0):
    """Rank data following one power law per block, continuous at the joins."""
    pairs = []
    amp = amp0
    prev = 1
    for z, hi in zip(slopes, uppers):
        if pairs:
            amp = pairs[-1][1] * prev ** z
        for r in range(prev, hi + 1):
            pairs.append((r, amp * r ** (-z)))
        prev = hi + 1
    return pairs


class TestOlsLine:
    def test_exact_line(self):
        xs = [1.0, 2.0, 3.0, 4.0]
        ys = [2.0 * x + 0.5 for x in xs]
        slope, intercept, r2 = ols_line(xs, ys)
        assert slope == pytest.approx(2.0, rel=1e-12)
        assert intercept == pytest.approx(0.5, rel=1e-12)
        assert r2 == pytest.approx(1.0, abs=1e-12)

    def test_degenerate_abscissae(self):
        with pytest.raises(ValidationError):
            ols_line([1.0, 1.0, 1.0], [1.0, 2.0, 3.0])


class TestSegmentedZipf:
    def test_exact_power_law_unit_slope(self):
        pairs = [(r, 1000.0 / r) for r in range(10, 201)]
        segments = segmented_loglog_fit(rank_list(pairs), breakpoints=((9, 200),))
        seg = segments[0]
        assert seg.z == pytest.approx(1.0, abs=1e-9)
        assert seg.amplitude == pytest.approx(1000.0, rel=1e-9)
        assert seg.r_squared == pytest.approx(1.0, abs=1e-9)
        assert seg.n_points == 191

    @pytest.mark.parametrize("slopes", [(0.999, 1.05, 1.20), (0.9, 1.1, 1.3)])
    def test_three_regime_constructed_slopes(self, slopes):
        pairs = continuous_piecewise(slopes, (200, 1000, 2000), 100000.0)
        segments = segmented_loglog_fit(
            rank_list(pairs), breakpoints=((10, 200), (200, 1000), (1000, None))
        )
        for seg, z in zip(segments, slopes):
            assert abs(seg.z - z) <= 1e-3

    def test_open_upper_bound_runs_to_last_rank(self):
        pairs = [(r, 500.0 / r) for r in range(1, 51)]
        segments = segmented_loglog_fit(rank_list(pairs), breakpoints=((10, None),))
        assert segments[0].hi == 50

    def test_interval_with_too_few_points(self):
        pairs = [(r, 10.0 / r) for r in range(1, 6)]
        with pytest.raises(ValidationError, match="need >= 3"):
            segmented_loglog_fit(rank_list(pairs), breakpoints=((3, 5),))

    def test_scale_equivariance_of_exponent(self):
        # a constant factor only shifts ln A; the slope moves by ulps at most
        pairs = [(r, 1234.0 * r ** -1.07) for r in range(5, 120)]
        scaled = [(r, 1000.0 * f) for r, f in pairs]
        raw = segmented_loglog_fit(rank_list(pairs), breakpoints=((4, None),))[0]
        big = segmented_loglog_fit(rank_list(scaled), breakpoints=((4, None),))[0]
        assert big.z == pytest.approx(raw.z, rel=1e-13)
        assert big.amplitude == pytest.approx(1000.0 * raw.amplitude, rel=1e-10)


class TestCoverageFit:
    def test_exact_logarithmic_curve(self):
        points = tuple((r, 0.1 * math.log(r) + 0.2) for r in range(10, 200))
        segments = fit_coverage(CoverageCurve(points), breakpoints=((9, None),))
        assert segments[0].k == pytest.approx(0.1, rel=1e-12)
        assert segments[0].t0 == pytest.approx(0.2, rel=1e-12)

    def test_two_regime_concatenated_curve(self):
        first = [(r, 0.13 * math.log(r) + 0.1) for r in range(10, 201)]
        join = first[-1][1]
        second = [
            (r, join + 0.08 * (math.log(r) - math.log(200))) for r in range(201, 1001)
        ]
        curve = CoverageCurve(tuple(first + second))
        segments = fit_coverage(curve, breakpoints=((10, 200), (200, 1000)))
        assert abs(segments[0].k - 0.13) <= 1e-6
        assert abs(segments[1].k - 0.08) <= 1e-6

    def test_too_few_points(self):
        points = tuple((r, 0.1 * math.log(r)) for r in (1, 2, 3))
        with pytest.raises(ValidationError):
            fit_coverage(CoverageCurve(points), breakpoints=((1, 2),))
