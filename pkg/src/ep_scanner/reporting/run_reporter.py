"""
src/ep_scanner/reporting/run_reporter.py
RUN REPORTING: JSON documents, plot-ready CSV files and the run manifest
"""

import csv
import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ..core.models.hamiltonians import CoefficientRing, TriMatrix
from ..core.models.spectra import SweepResult

logger = logging.getLogger(__name__)


def _float_text(value: float) -> str:
    # repr is the shortest round-trip form, so reruns produce identical bytes
    return repr(float(value))


class RunReporter:
    """
    RESPONSIBILITY: Write every output file of one run into a single directory
    - Exact objects as JSON (rationals as strings)
    - Float views (spectra, branches, dense matrices) as CSV
    - manifest.json listing inputs, tolerances, version and written files
    - Timestamps only as `generated_at` / `# generated_at`, suppressible
    """

    def __init__(self, output_dir: Path, timestamp: bool = True):
        self.output_dir = Path(output_dir)
        self.output_dir.mkdir(parents=True, exist_ok=True)
        self.timestamp = timestamp
        self.generated_at = datetime.now().isoformat(timespec="seconds") if timestamp else None
        self.files: List[str] = []
        self.metrics: Optional[Dict[str, Any]] = None   # performance metrics of the run

    def _path(self, name: str) -> Path:
        self.files.append(name)
        return self.output_dir / name

    def _write_rows(self, name: str, header: Sequence[str], rows: Sequence[Sequence[str]]) -> Path:
        path = self._path(name)
        with open(path, "w", encoding="utf-8", newline="") as f:
            if self.generated_at:
                f.write(f"# generated_at {self.generated_at}\n")
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
        logger.debug(f"Wrote {path}")
        return path

    def write_json(self, name: str, document: Dict[str, Any]) -> Path:
        path = self._path(name)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(document, f, indent=2, ensure_ascii=False, default=str)
            f.write("\n")
        logger.debug(f"Wrote {path}")
        return path

    def write_matrix(self, matrix: TriMatrix, stem: str = "matrix") -> List[Path]:
        """Exact JSON plus the dense float CSV (rows of the matrix)"""
        paths = [self.write_json(f"{stem}.json", matrix.to_json())]
        if matrix.ring is not CoefficientRing.POLYNOMIAL_T:
            paths.append(self.write_dense_csv(f"{stem}.csv", matrix.to_numpy()))
        return paths

    def write_dense_csv(self, name: str, dense: np.ndarray) -> Path:
        header = [f"c{j + 1}" for j in range(dense.shape[1])]
        rows = [[_float_text(value) for value in row] for row in dense]
        return self._write_rows(name, header, rows)

    def write_sweep(self, result: SweepResult, name: str = "sweep.csv") -> Path:
        """Header t,re_1,im_1,...,re_N,im_N,real_count; one row per grid point"""
        header = ["t"]
        for n in range(1, result.size + 1):
            header.extend([f"re_{n}", f"im_{n}"])
        header.append("real_count")

        rows = []
        for sample in result.samples:
            row = [_float_text(sample.t)]
            for value in sample.eigenvalues:
                row.extend([_float_text(value.real), _float_text(value.imag)])
            row.append(str(sample.real_count))
            rows.append(row)
        return self._write_rows(name, header, rows)

    def write_branches(self, result: SweepResult, branches: np.ndarray, name: str = "branches.csv") -> Path:
        """Same layout as the sweep file, columns follow continuous branches"""
        header = ["t"]
        for n in range(1, result.size + 1):
            header.extend([f"re_{n}", f"im_{n}"])

        rows = []
        for sample, values in zip(result.samples, branches):
            row = [_float_text(sample.t)]
            for value in values:
                row.extend([_float_text(value.real), _float_text(value.imag)])
            rows.append(row)
        return self._write_rows(name, header, rows)

    def write_manifest(self, subcommand: str, inputs: Dict[str, Any], tolerances: Dict[str, Any],
                       version: str) -> Path:
        manifest: Dict[str, Any] = {
            "subcommand": subcommand,
            "inputs": inputs,
            "tolerances": tolerances,
            "version": version,
            "files": sorted(self.files),
        }
        if self.generated_at:
            # timings differ between runs, so they only go into timestamped manifests
            if self.metrics:
                manifest["metrics"] = self.metrics
            manifest["generated_at"] = self.generated_at
        path = self.write_json("manifest.json", manifest)
        logger.info(f"Run manifest written to {path}")
        return path

    def print_summary(self):
        print(f"\n✅ Output written to {self.output_dir}")
        for name in self.files:
            print(f"   → {name}")
