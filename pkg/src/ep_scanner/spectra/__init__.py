# src/ep_scanner/spectra/__init__.py
"""
Spectral components for parameter sweeps

Main Components:
- eigen_solver.py: block-split tridiagonal eigenvalues and reality counts
- sweep_runner.py: sweeps, complexification events, branch tracking
- sweep_monitor.py: progress tracking and metrics

Usage:
    from ep_scanner.spectra import sweep, detect_complexification, SweepMonitor
"""

from .eigen_solver import eigs, real_count_at
from .sweep_monitor import SweepMonitor
from .sweep_runner import detect_complexification, spectrum_at, sweep, track_branches

__all__ = [
    "eigs",
    "real_count_at",
    "SweepMonitor",
    "detect_complexification",
    "spectrum_at",
    "sweep",
    "track_branches",
]
