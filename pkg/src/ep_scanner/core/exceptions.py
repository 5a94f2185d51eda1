"""
src/ep_scanner/core/exceptions.py
Error hierarchy shared by builders, algebra, metrics, spectra and the CLI.

Every error carries the exit code the CLI maps it to.
"""


class EPScannerError(Exception):
    """Base class for all domain errors"""
    exit_code = 1


class ConstraintError(EPScannerError):
    """Dimension, overlap, parsing or parameter-constraint violation"""
    exit_code = 2


class SingularParameterError(ConstraintError):
    """A model parameter hits a zero denominator"""


class ZeroPolynomialError(ConstraintError):
    """A nonzero polynomial was required"""


class OutsideDomainError(EPScannerError):
    """Parameters lie outside the unitarity domain (|lambda_j| >= 1, complex spectrum, ...)"""
    exit_code = 3


class FixtureIntegrityError(EPScannerError):
    """Shipped fixture missing or checksum mismatch"""
    exit_code = 4
