"""
Integration tests: exact exceptional points against numerical sweeps on the N = 11 paths
"""

from fractions import Fraction

import pytest

from ep_scanner.algebra.charpoly import secular_on_path
from ep_scanner.algebra.polynomials import evaluate_t
from ep_scanner.algebra.root_isolation import count_real_roots
from ep_scanner.analysis.ep_locator import ep_on_path
from ep_scanner.builders.path_parser import parse_grid, parse_path
from ep_scanner.core.constants import UNFOLDING_PATHS
from ep_scanner.spectra import detect_complexification, spectrum_at, sweep


@pytest.fixture(scope="module")
def full_path_report():
    path = parse_path(UNFOLDING_PATHS["symmetric"], 11)
    return ep_on_path(secular_on_path(path), path=path.describe(), width=1e-9)


class TestFullPath:

    def test_exceptional_points(self, full_path_report):
        assert Fraction(1) in full_path_report.exact_points()
        assert Fraction(-1) in full_path_report.exact_points()

    def test_nine_fold_degeneracy(self, full_path_report):
        for t in (Fraction(1), Fraction(-1)):
            profile = full_path_report.entry_at(t).profile
            assert profile.multiplicity_of(Fraction(0)) == 9
            assert profile.quadratic(Fraction(2)).multiplicity == 1

    def test_sweep_events_match_exact_points(self, full_path_report):
        path = parse_path(UNFOLDING_PATHS["symmetric"], 11, grid="-3/2:3/2:1/100")
        events = detect_complexification(sweep(path), refine_tol=1e-6)
        slack = Fraction(1, 10 ** 5)
        for event in events:
            assert any(
                event.t_lo - slack <= entry.root.midpoint <= event.t_hi + slack
                for entry in full_path_report.entries
            ), event

    def test_exact_counts_match_sweep(self, rng, full_path_report):
        """
        Certified real-root counts agree with the numerical spectrum at random rational t.

        Points within 1/20 of an exceptional point are skipped: the numerical count
        is unreliable next to a high-order degeneracy.
        """
        path = parse_path(UNFOLDING_PATHS["symmetric"], 11)
        secular = secular_on_path(path)
        margin = Fraction(1, 20)
        centers = [entry.root.midpoint for entry in full_path_report.entries]
        checked = 0
        while checked < 20:
            t = Fraction(rng.randint(-200, 200), 100)
            if any(abs(t - center) < margin for center in centers):
                continue
            exact = count_real_roots(evaluate_t(secular, t))
            _, numeric = spectrum_at(path, t)
            assert exact == numeric, t
            checked += 1


class TestUnfoldedPaths:

    def test_strongest_unfolding(self):
        path = parse_path(UNFOLDING_PATHS["fixed_lambda"], 11)
        report = ep_on_path(secular_on_path(path), path=path.describe())
        for t in (Fraction(1), Fraction(-1)):
            profile = report.entry_at(t).profile
            assert profile.multiplicity_of(Fraction(0)) == 5
            assert profile.quadratic(Fraction(19, 100)).multiplicity == 2
            assert profile.quadratic(Fraction(2)).multiplicity == 1

    def test_weakest_unfolding_keeps_inner_degeneracy(self):
        path = parse_path(UNFOLDING_PATHS["fixed_rho"], 11)
        report = ep_on_path(secular_on_path(path), path=path.describe())
        profile = report.entry_at(Fraction(-1)).profile
        assert profile.multiplicity_of(Fraction(0)) == 7
        assert profile.quadratic(Fraction(19, 100)).multiplicity == 1
        assert profile.quadratic(Fraction(219, 100)).multiplicity == 1

    @pytest.mark.slow
    @pytest.mark.parametrize("name", sorted(UNFOLDING_PATHS))
    def test_every_scenario_has_real_interior(self, name):
        path = parse_path(UNFOLDING_PATHS[name], 11, grid=parse_grid("-1/2:1/2:1/10"))
        result = sweep(path)
        assert all(count == 11 for count in result.real_counts())
