"""
Tests for parameter sweeps, complexification events and branch tracking
"""

from fractions import Fraction

import numpy as np
import pytest

from ep_scanner.builders.path_parser import parse_grid, parse_path
from ep_scanner.core.exceptions import ConstraintError
from ep_scanner.core.models.spectra import SweepResult
from ep_scanner.spectra import SweepMonitor, detect_complexification, spectrum_at, sweep, track_branches


@pytest.fixture
def full_path():
    return parse_path("t,-t,t,-t", 11, grid="-3/2:3/2:1/100")


@pytest.fixture
def full_sweep(full_path):
    return sweep(full_path)


class TestSweep:

    def test_grid_points_are_exact(self, full_sweep):
        assert len(full_sweep.samples) == 301
        assert full_sweep.sample_at(Fraction(1)) is not None
        assert full_sweep.t_values()[0] == Fraction(-3, 2)

    def test_real_counts_across_exceptional_points(self, full_sweep):
        for sample in full_sweep.samples:
            if abs(sample.t) <= Fraction(99, 100):
                assert sample.real_count == 11, sample.t
            elif abs(sample.t) >= Fraction(101, 100):
                assert sample.real_count < 11, sample.t

    def test_workers_give_identical_results(self, full_path):
        grid = parse_grid("-1:1:1/10")
        serial = sweep(full_path, grid)
        threaded = sweep(full_path, grid, workers=4)
        assert serial.real_counts() == threaded.real_counts()
        for a, b in zip(serial.samples, threaded.samples):
            assert a.t == b.t
            assert np.array_equal(np.asarray(a.eigenvalues), np.asarray(b.eigenvalues))

    def test_monitor_collects_metrics(self, full_path):
        monitor = SweepMonitor(verbose=False)
        sweep(full_path, parse_grid("0:3/2:1/10"), monitor=monitor)
        metrics = monitor.get_final_metrics()
        assert metrics["grid_points"] == 16
        assert metrics["real_count_changes"] >= 1

    def test_monitor_before_completion(self):
        assert SweepMonitor().get_final_metrics() == {"error": "Sweep not completed"}

    @pytest.mark.parametrize("grid", ["-9/10:9/10:1/10", "6/5:2:1/5"])
    def test_spectrum_is_symmetric_under_negation(self, full_path, grid):
        """Zero diagonal: every eigenvalue s comes with -s, real or complex"""
        for sample in sweep(full_path, parse_grid(grid)).samples:
            values = list(np.asarray(sample.eigenvalues))
            remaining = [-value for value in values]
            for value in values:
                distances = [abs(value - other) for other in remaining]
                nearest = int(np.argmin(distances))
                assert distances[nearest] < 1e-6, (sample.t, value)
                remaining.pop(nearest)

    def test_spectrum_at(self, full_path):
        values, real_count = spectrum_at(full_path, Fraction(0))
        assert values.shape == (11,)
        assert real_count == 11

    @pytest.mark.parametrize("kwargs", [{"reality_tol": 0}, {"workers": 0}])
    def test_invalid_arguments(self, full_path, kwargs):
        with pytest.raises(ConstraintError):
            sweep(full_path, **kwargs)

    def test_missing_grid(self):
        with pytest.raises(ConstraintError):
            sweep(parse_path("t", 5))


class TestComplexification:

    def test_events_bracket_exceptional_points(self, full_sweep):
        events = detect_complexification(full_sweep, refine_tol=1e-6)
        left = [event for event in events if event.contains(Fraction(-1))]
        right = [event for event in events if event.contains(Fraction(1))]
        assert len(left) == 1 and len(right) == 1
        assert right[0].is_complexification and not left[0].is_complexification
        assert right[0].real_before == 11 and left[0].real_after == 11
        for event in left + right:
            assert event.t_hi - event.t_lo <= Fraction(1e-6)

    def test_event_json(self, full_sweep):
        event = next(e for e in detect_complexification(full_sweep) if e.contains(Fraction(1)))
        document = event.to_json()
        assert document["real_before"] == 11
        assert abs(document["t_estimate"] - 1.0) < 1e-5

    def test_needs_two_samples(self, full_path):
        single = sweep(full_path, parse_grid("0:0:1"))
        with pytest.raises(ConstraintError):
            detect_complexification(single)

    def test_without_path_keeps_grid_brackets(self, full_sweep):
        bare = SweepResult(path=full_sweep.path, size=11, samples=full_sweep.samples,
                           reality_tol=full_sweep.reality_tol)
        events = detect_complexification(bare)
        assert [event.t_hi - event.t_lo for event in events] == [Fraction(1, 100)] * len(events)


class TestBranches:

    def test_shape_and_first_row(self, full_sweep):
        branches = track_branches(full_sweep)
        assert branches.shape == (301, 11)
        assert np.array_equal(branches[0], np.asarray(full_sweep.samples[0].eigenvalues))

    def test_rows_are_permutations(self, full_sweep):
        branches = track_branches(full_sweep)
        for row, sample in zip(branches, full_sweep.samples):
            assert np.allclose(np.sort_complex(row), np.sort_complex(np.asarray(sample.eigenvalues)))

    def test_continuity_inside_domain(self, full_path):
        result = sweep(full_path, parse_grid("-1/2:1/2:1/100"))
        branches = track_branches(result)
        assert np.max(np.abs(np.diff(branches, axis=0))) < 0.1

    def test_empty_result(self):
        assert track_branches(SweepResult(path="t", size=3)).shape == (0, 3)
