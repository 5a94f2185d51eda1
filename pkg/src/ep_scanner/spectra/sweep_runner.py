"""
src/ep_scanner/spectra/sweep_runner.py
PARAMETER SWEEPS along coupling paths

- sweep: spectra on an exact rational t-grid (optionally on a thread pool, merged by index)
- detect_complexification: brackets where the real-eigenvalue count changes, refined by bisection
- track_branches: nearest-neighbour pairing of eigenvalues between consecutive grid points
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from .eigen_solver import count_real, eigs, reality_threshold
from .sweep_monitor import SweepMonitor
from ..builders.matrix_builders import build_boundary_well
from ..core.constants import TOLERANCES
from ..core.exceptions import ConstraintError
from ..core.models.hamiltonians import GridSpec, PathSpec
from ..core.models.spectra import ComplexificationEvent, SweepResult, SweepSample

logger = logging.getLogger(__name__)


def spectrum_at(path: PathSpec, t: Fraction, reality_tol: float = TOLERANCES["reality"]) -> Tuple[np.ndarray, int]:
    """Eigenvalues and real count of the path matrix at an exact t"""
    matrix = build_boundary_well(path.size, path.couplings_at(t), path.shift)
    values = eigs(matrix)
    return values, count_real(values, reality_threshold(matrix, reality_tol))


def _sample(path: PathSpec, t: Fraction, reality_tol: float) -> Tuple[SweepSample, float]:
    started = time.perf_counter()
    values, real_count = spectrum_at(path, t, reality_tol)
    return SweepSample(t=t, eigenvalues=tuple(values), real_count=real_count), time.perf_counter() - started


def sweep(path: PathSpec, grid: Optional[GridSpec] = None, reality_tol: float = TOLERANCES["reality"],
          workers: int = 1, monitor: Optional[SweepMonitor] = None) -> SweepResult:
    """
    Spectra at every grid point of the path.

    Grid points are exact rationals start + i*step, so values such as t = 1 are hit exactly.

    Raises:
        ConstraintError: no grid, non-positive tolerance or worker count
    """
    grid = grid or path.grid
    if grid is None:
        raise ConstraintError("Sweep needs a t-grid")
    if reality_tol <= 0:
        raise ConstraintError(f"Reality tolerance must be positive, got {reality_tol}")
    if workers < 1:
        raise ConstraintError(f"Worker count must be at least 1, got {workers}")

    points = grid.points()
    if monitor:
        monitor.start_sweep(path.describe(), len(points))

    if workers == 1:
        results = [_sample(path, t, reality_tol) for t in points]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            # map keeps input order, so samples are merged by index
            results = list(pool.map(lambda t: _sample(path, t, reality_tol), points))

    samples: List[SweepSample] = []
    for sample, duration in results:
        samples.append(sample)
        if monitor:
            monitor.update_progress(sample.real_count, duration)
    if monitor:
        monitor.finish_sweep()

    logger.info(f"Sweep over {len(points)} points on ({path.describe()}), grid {grid.to_string()}")
    return SweepResult(path=path.describe(), size=path.size, samples=samples,
                       reality_tol=reality_tol, path_spec=path)


def detect_complexification(result: SweepResult, refine_tol: float = TOLERANCES["refine"]) -> List[ComplexificationEvent]:
    """
    Every adjacent pair of grid points with different real counts becomes an event;
    its bracket is bisected (exact rational midpoints) down to width <= refine_tol.

    Level crossings keep the real count and therefore produce no event.
    """
    if refine_tol <= 0:
        raise ConstraintError(f"Refinement tolerance must be positive, got {refine_tol}")
    if len(result.samples) < 2:
        raise ConstraintError("Complexification detection needs at least two grid points")
    path = result.path_spec
    target = Fraction(refine_tol)

    events: List[ComplexificationEvent] = []
    for left, right in zip(result.samples, result.samples[1:]):
        if left.real_count == right.real_count:
            continue
        lo, hi = left.t, right.t
        if path is not None:
            while hi - lo > target:
                mid = (lo + hi) / 2
                _, count = spectrum_at(path, mid, result.reality_tol)
                if count == left.real_count:
                    lo = mid
                else:
                    hi = mid
        events.append(ComplexificationEvent(lo, hi, left.real_count, right.real_count))

    for event in events:
        if (event.real_before - event.real_after) % 2:
            logger.warning(f"Odd real-count change near t = {event.t_estimate:.6g}: check the reality tolerance")
    logger.info(f"Detected {len(events)} real-count changes on ({result.path})")
    return events


def track_branches(result: SweepResult) -> np.ndarray:
    """
    Eigenvalues re-ordered so that column n follows one continuous branch:
    consecutive samples are matched by minimum total distance in the complex plane
    (ties resolved by the (re, im) order of the previous sample).
    """
    if not result.samples:
        return np.empty((0, result.size), dtype=complex)
    branches = np.empty((len(result.samples), result.size), dtype=complex)
    branches[0] = np.asarray(result.samples[0].eigenvalues)
    for i, sample in enumerate(result.samples[1:], start=1):
        current = np.asarray(sample.eigenvalues)
        cost = np.abs(branches[i - 1][:, None] - current[None, :])
        rows, cols = linear_sum_assignment(cost)
        branches[i, rows] = current[cols]
    return branches
