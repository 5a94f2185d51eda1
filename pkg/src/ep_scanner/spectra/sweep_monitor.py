"""
src/ep_scanner/spectra/sweep_monitor.py
SWEEP MONITOR: progress tracking and performance metrics for parameter sweeps

Reports progress with ETA while grid points are diagonalized and collects
timing metrics that end up in the run manifest.
"""

import logging
from datetime import datetime, timedelta
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)


class SweepMonitor:
    """
    Monitor sweep progress and collect performance metrics

    RESPONSIBILITIES:
    1. Display progress information (optional, console only)
    2. Calculate ETA and points per second
    3. Track real-count changes seen so far
    4. Provide final metrics for the run manifest
    """

    def __init__(self, verbose: bool = False, report_every: int = 50):
        self.verbose = verbose
        self.report_every = max(1, report_every)
        self.start_time: Optional[datetime] = None
        self.end_time: Optional[datetime] = None
        self.total_points = 0
        self.processed_points = 0
        self.point_times: List[float] = []
        self.count_changes = 0
        self._last_count: Optional[int] = None

    def start_sweep(self, path: str, total_points: int):
        """Initialize monitoring for one sweep"""
        self.start_time = datetime.now()
        self.end_time = None
        self.total_points = total_points
        self.processed_points = 0
        self.point_times = []
        self.count_changes = 0
        self._last_count = None

        logger.info(f"Sweep started on path ({path}) with {total_points} grid points")
        if self.verbose:
            print(f"\n📊 SWEEP STARTED")
            print(f"   → Path: {path}")
            print(f"   → Grid points: {total_points}")
            print(f"   → Started at: {self.start_time.strftime('%H:%M:%S')}")

    def update_progress(self, real_count: int, duration: float):
        """Record one diagonalized grid point (points arrive in grid order)"""
        self.processed_points += 1
        self.point_times.append(duration)
        if self._last_count is not None and real_count != self._last_count:
            self.count_changes += 1
        self._last_count = real_count

        if self.verbose and self.processed_points % self.report_every == 0:
            self._display_progress_update()

    def _display_progress_update(self):
        progress = self.processed_points / self.total_points * 100 if self.total_points else 100.0
        elapsed = (datetime.now() - self.start_time).total_seconds()
        rate = self.processed_points / elapsed if elapsed > 0 else 0.0
        remaining = self.total_points - self.processed_points
        eta_seconds = remaining / rate if rate > 0 else 0.0

        print(f"\n   📈 Progress Update:")
        print(f"      Points: {self.processed_points}/{self.total_points} ({progress:.1f}%)")
        print(f"      Real-count changes so far: {self.count_changes}")
        print(f"      Current rate: {rate:.1f} points/sec")
        print(f"      ETA: in {eta_seconds:.1f} s")
        self._display_progress_bar(progress)

    def _display_progress_bar(self, progress_percent: float, width: int = 40):
        filled_width = int(width * progress_percent / 100)
        bar = "█" * filled_width + "░" * (width - filled_width)
        print(f"      [{bar}] {progress_percent:.1f}%")

    def finish_sweep(self):
        self.end_time = datetime.now()
        duration = (self.end_time - self.start_time).total_seconds()
        logger.info(f"Sweep finished: {self.processed_points} points in {duration:.2f} s")
        if self.verbose:
            print(f"\n📊 SWEEP COMPLETED")
            print(f"   → Total duration: {duration:.2f} seconds")
            print(f"   → Real-count changes: {self.count_changes}")

    def get_final_metrics(self) -> Dict[str, Any]:
        """Metrics for the run manifest"""
        if not self.start_time or not self.end_time:
            return {"error": "Sweep not completed"}
        duration = (self.end_time - self.start_time).total_seconds()
        return {
            "total_duration_seconds": duration,
            "total_duration_formatted": str(timedelta(seconds=int(duration))),
            "grid_points": self.processed_points,
            "points_per_second": self.processed_points / duration if duration > 0 else 0,
            "average_point_seconds": sum(self.point_times) / len(self.point_times) if self.point_times else 0,
            "slowest_point_seconds": max(self.point_times) if self.point_times else 0,
            "real_count_changes": self.count_changes,
        }
