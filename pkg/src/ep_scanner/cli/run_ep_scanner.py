"""
src/ep_scanner/cli/run_ep_scanner.py
EP SCANNER COMMAND LINE: build | metric | secular | sweep | ep | verify-fixtures

Every subcommand writes its files plus manifest.json into --out and returns
the exit code of the first domain error (0 on success).
"""

import argparse
import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from .. import __version__
from ..algebra.charpoly import secular_on_path, secular_polynomial
from ..algebra.multiplicity import multiplicity_profile
from ..algebra.polynomials import evaluate_t, poly_to_json, pretty
from ..analysis.ep_locator import ep_on_path, report_summary, verify_atm_fixture
from ..builders.matrix_builders import build_boundary_well, build_model
from ..builders.path_parser import parse_grid, parse_path
from ..builders.rational_parser import parse_rational
from ..builders.spec_document import load_model_spec
from ..core import config
from ..core.constants import DEFAULT_GRIDS, EXIT_CODES, UNFOLDING_DIMENSION
from ..core.exceptions import ConstraintError, EPScannerError
from ..core.models.hamiltonians import GridSpec, ModelFamily, ModelSpec, PathSpec
from ..metrics.metric_builder import (
    admissible_v_interval,
    crypto_residual,
    diagonal_metric,
    is_positive_definite,
    metric_min_eigenvalue,
    tridiagonal_metric,
)
from ..metrics.spectral_metric import spectral_metric
from ..reporting.run_reporter import RunReporter
from ..spectra.sweep_monitor import SweepMonitor
from ..spectra.sweep_runner import detect_complexification, sweep, track_branches

logger = logging.getLogger(__name__)


def setup_logging(log_dir: Optional[str] = None, console_level: Optional[str] = None):
    """Rotating run log, rotating error log and a console handler at the configured level"""
    logs_dir = Path(log_dir or config.log_dir)
    logs_dir.mkdir(parents=True, exist_ok=True)

    run_handler = RotatingFileHandler(
        logs_dir / "ep_scanner.log",
        maxBytes=10*1024*1024,  # 10MB
        backupCount=5,
        encoding='utf-8'
    )
    run_handler.setLevel(logging.INFO)

    error_handler = RotatingFileHandler(
        logs_dir / "error.log",
        maxBytes=5*1024*1024,   # 5MB
        backupCount=3,
        encoding='utf-8'
    )
    error_handler.setLevel(logging.ERROR)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(getattr(logging, (console_level or config.log_level).upper(), logging.WARNING))

    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    for handler in (run_handler, error_handler, console_handler):
        handler.setFormatter(formatter)

    root_logger = logging.getLogger()
    root_logger.setLevel(logging.INFO)
    # repeated main() calls (tests, scripts) must not stack handlers
    for handler in list(root_logger.handlers):
        if getattr(handler, "_ep_scanner", False):
            root_logger.removeHandler(handler)
            handler.close()
    for handler in (run_handler, error_handler, console_handler):
        handler._ep_scanner = True
        root_logger.addHandler(handler)


# options whose values may start with a minus sign ("-3/2:3/2:1/10", "-1/2", "-t,t")
VALUE_OPTIONS = ("--grid", "--shift", "--eval-t", "--v", "--path")


def join_negative_values(argv: List[str]) -> List[str]:
    """
    Rewrite "--grid -3/2:3/2:1/10" as "--grid=-3/2:3/2:1/10".

    argparse reads a separate token starting with "-" as an option unless it looks like
    a plain negative number, so rational grids and paths would be rejected.
    """
    joined: List[str] = []
    index = 0
    while index < len(argv):
        token = argv[index]
        following = argv[index + 1] if index + 1 < len(argv) else None
        if token in VALUE_OPTIONS and following is not None and following.startswith("-") \
                and not following.startswith("--"):
            joined.append(f"{token}={following}")
            index += 2
            continue
        joined.append(token)
        index += 1
    return joined


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ep-scanner",
        description="Crypto-Hermitian tridiagonal Hamiltonians: metrics, secular polynomials and exceptional points",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", type=str, help="ModelSpec JSON file")
    common.add_argument("--out", type=str, default=None, help=f"Output directory (default: {config.output_dir})")
    common.add_argument("--no-timestamp", action="store_true", help="Omit generated_at fields and CSV header lines")
    common.add_argument("--shift", type=str, default=None, help="Diagonal shift d (rational, overrides the ModelSpec shift; boundary_well only)")
    common.add_argument("--log-level", type=str, default=None, help="Console log level (default from environment)")

    path_options = argparse.ArgumentParser(add_help=False)
    path_options.add_argument("--path", type=str, help="Coupling path, e.g. 't,-t,t,-9/10'")
    path_options.add_argument("--size", type=int, default=None,
                              help=f"Matrix dimension N without --spec (default: {UNFOLDING_DIMENSION})")

    subparsers = parser.add_subparsers(dest="command", required=True)

    subparsers.add_parser("build", parents=[common], help="Dump the exact matrix of a ModelSpec")

    metric = subparsers.add_parser("metric", parents=[common], help="Hermitizing metric and residual certificate")
    metric.add_argument("--tridiag", action="store_true", help="Add the pseudometric and report the admissible v interval")
    metric.add_argument("--v", type=str, default="0", help="Mixing weight of the pseudometric (rational, default 0)")
    metric.add_argument("--spectral", action="store_true", help="Also build the spectral metric with unit weights")

    secular = subparsers.add_parser("secular", parents=[common, path_options], help="Exact secular polynomial")
    secular.add_argument("--eval-t", type=str, default=None, help="Specialize the path at a rational t")

    sweep_cmd = subparsers.add_parser("sweep", parents=[common, path_options], help="Spectra along a path (CSV)")
    sweep_cmd.add_argument("--grid", type=str, default=None,
                           help=f"start:stop:step (default: {DEFAULT_GRIDS['full_path']})")
    sweep_cmd.add_argument("--tol", type=float, default=None, help="Reality tolerance")
    sweep_cmd.add_argument("--refine-tol", type=float, default=None, help="Complexification bracket width")
    sweep_cmd.add_argument("--workers", type=int, default=None, help="Thread pool size")
    sweep_cmd.add_argument("--branches", action="store_true", help="Also write tracked branches")
    sweep_cmd.add_argument("--verbose", action="store_true", help="Progress display")

    ep = subparsers.add_parser("ep", parents=[common, path_options], help="Exceptional points on a path")
    ep.add_argument("--tol", type=float, default=None, help="Isolating interval width for irrational points")

    subparsers.add_parser("verify-fixtures", parents=[common], help="Check the shipped ATM polynomial")
    return parser


def _model_spec(args) -> Optional[ModelSpec]:
    return load_model_spec(args.spec) if args.spec else None


def _require_spec(args) -> ModelSpec:
    if not args.spec:
        raise ConstraintError(f"'{args.command}' needs --spec")
    return load_model_spec(args.spec)


def _path_from_args(args, grid: Optional[GridSpec] = None) -> PathSpec:
    if not args.path:
        raise ConstraintError(f"'{args.command}' needs --path")
    spec = _model_spec(args)
    if spec is not None and spec.family is not ModelFamily.BOUNDARY_WELL:
        raise ConstraintError("Coupling paths are defined for the boundary_well family only")
    size = spec.size if spec is not None else (args.size or UNFOLDING_DIMENSION)
    shift = args.shift if args.shift is not None else (spec.shift if spec is not None else 0)
    return parse_path(args.path, size, grid=grid, shift=shift)


def cmd_build(args, reporter: RunReporter) -> Dict[str, Any]:
    spec = _require_spec(args)
    if args.shift is not None and spec.family is not ModelFamily.BOUNDARY_WELL:
        raise ConstraintError(f"--shift applies to the boundary_well family only, not {spec.family.value}")
    if args.shift is not None:
        spec = ModelSpec(spec.family, spec.size, spec.couplings, parse_rational(args.shift))
    matrix = build_model(spec)
    reporter.write_json("spec.json", spec.to_json())
    reporter.write_matrix(matrix)
    print(f"📊 {spec.family.value} matrix, N = {matrix.size}")
    return {"spec": spec.to_json()}


def cmd_metric(args, reporter: RunReporter) -> Dict[str, Any]:
    spec = _require_spec(args)
    if spec.family is not ModelFamily.BOUNDARY_WELL:
        raise ConstraintError("Closed-form metrics exist for the boundary_well family only")
    shift = parse_rational(args.shift) if args.shift is not None else spec.shift
    hamiltonian = build_boundary_well(spec.size, spec.couplings, shift)
    inputs: Dict[str, Any] = {"spec": spec.to_json(), "tridiag": args.tridiag}

    if args.tridiag:
        metric = tridiagonal_metric(spec.couplings, spec.size, args.v)
        theta = metric.to_trimatrix()
        interval = admissible_v_interval(metric.base, metric.pseudo)
        inputs["v"] = args.v
    else:
        metric = diagonal_metric(spec.couplings, spec.size)
        theta = metric.to_trimatrix()
        interval = None

    residual = crypto_residual(hamiltonian, theta)
    document = {"metric": metric.to_json(), "residual": residual.describe()}
    print(f"residual: {residual.describe()}")

    if interval is not None:
        document["admissible_v"] = interval.to_json()
        print(f"admissible v: ({interval.v_min:.12g}, {interval.v_max:.12g})")
        if not interval.contains(float(metric.v)) or not is_positive_definite(metric):
            logger.warning(f"v = {args.v} lies outside the admissible interval: metric not positive")
            print(f"⚠️  warning: metric not positive at v = {args.v}")
    document["min_eigenvalue"] = metric_min_eigenvalue(theta)

    if args.spectral:
        spectral = spectral_metric(hamiltonian, np.ones(spec.size))
        document["spectral"] = {
            "relative_residual": spectral.relative_residual,
            "min_eigenvalue": spectral.min_eigenvalue(),
        }
        reporter.write_dense_csv("spectral_metric.csv", spectral.theta)

    reporter.write_json("metric.json", document)
    reporter.write_dense_csv("metric.csv", theta.to_numpy())
    return inputs


def cmd_secular(args, reporter: RunReporter) -> Dict[str, Any]:
    if not args.path:
        spec = _require_spec(args)
        matrix = build_model(spec)
        polynomial = secular_polynomial(matrix)
        reporter.write_json("secular.json", {"spec": spec.to_json(), "polynomial": poly_to_json(polynomial),
                                             "pretty": pretty(polynomial)})
        print(f"{pretty(polynomial)} = 0")
        return {"spec": spec.to_json()}

    path = _path_from_args(args)
    polynomial = secular_on_path(path)
    document: Dict[str, Any] = {"path": path.describe(), "N": path.size,
                                "polynomial": poly_to_json(polynomial), "pretty": pretty(polynomial)}
    inputs: Dict[str, Any] = {"path": path.describe(), "N": path.size, "shift": str(path.shift)}

    if args.eval_t is not None:
        t = parse_rational(args.eval_t)
        specialized = evaluate_t(polynomial, t)
        profile = multiplicity_profile(specialized)
        document["at_t"] = {"t": str(t), "polynomial": poly_to_json(specialized), "pretty": pretty(specialized),
                            "profile": profile.to_json()}
        inputs["eval_t"] = str(t)
        print(f"{pretty(specialized)} = 0")
        print(f"   → profile: {profile.summary()}")
    else:
        print(f"{pretty(polynomial)} = 0")
    reporter.write_json("secular.json", document)
    return inputs


def cmd_sweep(args, reporter: RunReporter) -> Dict[str, Any]:
    grid = parse_grid(args.grid or DEFAULT_GRIDS["full_path"])
    path = _path_from_args(args, grid=grid)
    reality_tol = args.tol if args.tol is not None else float(config.reality_tol)
    refine_tol = args.refine_tol if args.refine_tol is not None else float(config.refine_tol)
    workers = args.workers if args.workers is not None else int(config.sweep_workers)

    monitor = SweepMonitor(verbose=args.verbose)
    result = sweep(path, grid, reality_tol=reality_tol, workers=workers, monitor=monitor)
    events = detect_complexification(result, refine_tol=refine_tol)

    reporter.write_sweep(result)
    reporter.write_json("events.json", {"path": path.describe(), "N": path.size,
                                        "events": [event.to_json() for event in events]})
    if args.branches:
        reporter.write_branches(result, track_branches(result))

    print(f"📈 {len(result.samples)} grid points, {len(events)} real-count changes")
    for event in events:
        print(f"   → t ≈ {event.t_estimate:.8g}: {event.real_before} → {event.real_after} real")
    reporter.metrics = monitor.get_final_metrics()
    return {"path": path.describe(), "N": path.size, "shift": str(path.shift), "grid": grid.to_string(),
            "workers": workers}


def cmd_ep(args, reporter: RunReporter) -> Dict[str, Any]:
    path = _path_from_args(args)
    width = args.tol if args.tol is not None else float(config.root_width)
    report = ep_on_path(secular_on_path(path), path=path.describe(), width=width)
    reporter.write_json("ep_report.json", report.to_json())

    summary = report_summary(report)
    print(f"📊 EP REPORT ({path.describe()}), status {summary['status']}")
    for entry in report.entries:
        if entry.is_exact:
            print(f"   ✅ t = {entry.root.exact}: {entry.profile.summary()}")
        else:
            print(f"   ≈ t ∈ ({float(entry.root.lo):.12g}, {float(entry.root.hi):.12g}] (irrational)")
    return {"path": path.describe(), "N": path.size, "shift": str(path.shift)}


def cmd_verify_fixtures(args, reporter: RunReporter) -> Dict[str, Any]:
    report = verify_atm_fixture()
    reporter.write_json("fixture_report.json", report.to_json())
    print(f"✅ checksum ok ({report.sha256[:16]}...)")
    status = "root confirmed" if report.root_confirmed else f"nonzero residual {report.residual}"
    print(f"   → value at D = {report.test_point}: {status}")
    print(f"   → positive real roots: {report.positive_real_roots} (of {report.real_roots} real)")
    return {"fixture": report.metadata.get("name", "atm_n8_boundary")}


COMMANDS = {
    "build": cmd_build,
    "metric": cmd_metric,
    "secular": cmd_secular,
    "sweep": cmd_sweep,
    "ep": cmd_ep,
    "verify-fixtures": cmd_verify_fixtures,
}


def _tolerances(args) -> Dict[str, Any]:
    tolerances = {
        "reality": float(config.reality_tol),
        "refine": float(config.refine_tol),
        "root_width": float(config.root_width),
    }
    if args.command == "sweep":
        if args.tol is not None:
            tolerances["reality"] = args.tol
        if args.refine_tol is not None:
            tolerances["refine"] = args.refine_tol
    elif args.command == "ep" and args.tol is not None:
        tolerances["root_width"] = args.tol
    return tolerances


def main(argv: Optional[List[str]] = None) -> int:
    """Main execution function"""
    parser = build_parser()
    args = parser.parse_args(join_negative_values(list(argv if argv is not None else sys.argv[1:])))
    setup_logging(console_level=args.log_level)

    out_dir = Path(args.out or config.output_dir)
    timestamp = not (args.no_timestamp or config.env_flag(config.no_timestamp))

    try:
        reporter = RunReporter(out_dir, timestamp=timestamp)
        inputs = COMMANDS[args.command](args, reporter)
        reporter.write_manifest(args.command, inputs, _tolerances(args), __version__)
        reporter.print_summary()
        return EXIT_CODES["success"]
    except EPScannerError as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"❌ {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.exception(f"Unexpected error in {args.command}: {e}")
        print(f"❌ Unexpected error: {e}", file=sys.stderr)
        return EXIT_CODES["unexpected"]


if __name__ == "__main__":
    exit_code = main()
    sys.exit(exit_code)
