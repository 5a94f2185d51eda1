"""
scripts/scenarios/run_unfolding_scenarios.py
SCENARIO BATCH: sweeps and EP reports for the five N = 11 coupling paths

Each scenario gets its own output directory with sweep.csv, branches.csv,
events.json, ep_report.json and a manifest, ready for plotting.
"""

import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "src"))

from ep_scanner import __version__
from ep_scanner.algebra.charpoly import secular_on_path
from ep_scanner.analysis.ep_locator import ep_on_path, report_summary
from ep_scanner.builders.path_parser import parse_grid, parse_path
from ep_scanner.cli.run_ep_scanner import setup_logging
from ep_scanner.core import config
from ep_scanner.core.constants import DEFAULT_GRIDS, UNFOLDING_DIMENSION, UNFOLDING_PATHS
from ep_scanner.core.exceptions import EPScannerError
from ep_scanner.reporting.run_reporter import RunReporter
from ep_scanner.spectra.sweep_monitor import SweepMonitor
from ep_scanner.spectra.sweep_runner import detect_complexification, sweep, track_branches


class UnfoldingScenarioRunner:
    """
    Run every coupling-path scenario end to end

    RESPONSIBILITIES:
    1. Sweep the spectrum on the scenario grid
    2. Detect and refine complexification events
    3. Locate exceptional points exactly (optional, slower)
    4. Write per-scenario files and a batch summary
    """

    def __init__(self, output_dir: Path, grid: str, workers: int = 1, with_ep: bool = True,
                 timestamp: bool = True):
        self.output_dir = Path(output_dir)
        self.grid = parse_grid(grid)
        self.workers = workers
        self.with_ep = with_ep
        self.timestamp = timestamp

    def run_scenario(self, name: str, path_text: str) -> Dict[str, Any]:
        path = parse_path(path_text, UNFOLDING_DIMENSION, grid=self.grid)
        reporter = RunReporter(self.output_dir / name, timestamp=self.timestamp)

        print(f"\n📊 SCENARIO {name}: ({path.describe()})")
        print("-" * 60)
        monitor = SweepMonitor(verbose=False)
        result = sweep(path, self.grid, reality_tol=float(config.reality_tol), workers=self.workers,
                       monitor=monitor)
        events = detect_complexification(result, refine_tol=float(config.refine_tol))
        reporter.write_sweep(result)
        reporter.write_branches(result, track_branches(result))
        reporter.write_json("events.json", {"path": path.describe(), "N": path.size,
                                            "events": [event.to_json() for event in events]})
        reporter.metrics = monitor.get_final_metrics()
        print(f"   → {len(events)} real-count changes")

        summary: Dict[str, Any] = {"path": path.describe(), "events": len(events)}
        if self.with_ep:
            report = ep_on_path(secular_on_path(path), path=path.describe(), width=float(config.root_width))
            reporter.write_json("ep_report.json", report.to_json())
            summary["ep"] = report_summary(report)
            print(f"   → exact EPs: {', '.join(summary['ep']['exact']) or 'none'}")

        reporter.write_manifest(
            "scenario",
            {"scenario": name, "path": path.describe(), "N": path.size, "grid": self.grid.to_string()},
            {"reality": float(config.reality_tol), "refine": float(config.refine_tol),
             "root_width": float(config.root_width)},
            __version__,
        )
        return summary

    def run_all(self, names: List[str]) -> Dict[str, Any]:
        summaries = {}
        for name in names:
            summaries[name] = self.run_scenario(name, UNFOLDING_PATHS[name])
        RunReporter(self.output_dir, timestamp=self.timestamp).write_json("scenarios.json", summaries)
        return summaries


def main(argv: Optional[List[str]] = None):
    """Main execution function"""

    import argparse

    parser = argparse.ArgumentParser(description="Sweeps and EP reports for the N = 11 unfolding scenarios")
    parser.add_argument("--scenario", choices=sorted(UNFOLDING_PATHS), action="append",
                        help="Scenario to run (repeatable, default: all)")
    parser.add_argument("--grid", type=str, default=DEFAULT_GRIDS["unfolding"],
                        help=f"start:stop:step (default: {DEFAULT_GRIDS['unfolding']})")
    parser.add_argument("--out", type=str, default=str(Path(config.output_dir) / "scenarios"),
                        help="Output directory")
    parser.add_argument("--workers", type=int, default=int(config.sweep_workers), help="Sweep thread pool size")
    parser.add_argument("--skip-ep", action="store_true", help="Sweeps only, no exact EP location")
    parser.add_argument("--no-timestamp", action="store_true", help="Reproducible output files")

    args = parser.parse_args(argv)
    setup_logging()

    runner = UnfoldingScenarioRunner(
        output_dir=Path(args.out),
        grid=args.grid,
        workers=args.workers,
        with_ep=not args.skip_ep,
        timestamp=not args.no_timestamp,
    )

    try:
        runner.run_all(args.scenario or list(UNFOLDING_PATHS))
    except EPScannerError as e:
        print(f"\n❌ Scenario batch failed: {e}")
        return e.exit_code

    print(f"\n🎉 Scenario batch completed: {args.out}")
    return 0


if __name__ == "__main__":
    exit_code = main()
    sys.exit(exit_code)
