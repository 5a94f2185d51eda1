"""
Constants used throughout the application.
"""

# Numerical tolerances (floats; exact algebra never uses these)
TOLERANCES = {
    "reality": 1e-9,            # |im| <= reality * max(1, ||M||_inf) counts as real
    "refine": 1e-6,             # bracket width for complexification events
    "root_width": 1e-12,        # isolating interval width for discriminant roots
    "admissible_v": 1e-9,       # bracket width for admissible-v endpoints
    "spectral_residual": 1e-10, # relative crypto residual for the spectral metric
    "eigvec_condition": 1e12,   # eigenvector matrix condition number treated as defective
}

# Default t-grids, stored as exact rational strings "start:stop:step"
DEFAULT_GRIDS = {
    "full_path": "-3/2:3/2:1/100",
    "unfolding": "-5/2:5/2:1/100",
}

# Coupling paths of the N = 11, k = 4 unfolding scenarios (slot i -> lambda_i)
UNFOLDING_PATHS = {
    "symmetric": "t,-t,t,-t",
    "fixed_rho": "t,-t,t,-9/10",
    "fixed_nu": "t,-t,9/10,-t",
    "fixed_mu": "t,-9/10,t,-t",
    "fixed_lambda": "9/10,-t,t,-t",
}

UNFOLDING_DIMENSION = 11

# CLI exit codes
EXIT_CODES = {
    "success": 0,
    "unexpected": 1,
    "constraint": 2,
    "outside_domain": 3,
    "fixture_integrity": 4,
}

# Shipped exact fixtures (relative to ep_scanner/algebra/fixtures)
FIXTURE_FILES = {
    "atm_coefficients": "atm_n8_boundary.txt",
    "atm_checksum": "atm_n8_boundary.sha256",
    "atm_metadata": "atm_n8_boundary.json",
}

# The value at which the shipped ATM polynomial is checked (g_1 = sqrt(D))
ATM_FIXTURE_TEST_POINT = 7

# Expansion cap for the admissible-v search before declaring an unbounded side
ADMISSIBLE_V_SEARCH = {
    "initial_step": 1.0,
    "max_abs_v": 1e12,
}
