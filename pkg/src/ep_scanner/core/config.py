import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

""" Access the environment variables """

""" OUTPUT   """

output_dir: str = os.getenv('EP_SCANNER_OUTPUT_DIR', 'ep_output')
no_timestamp: str = os.getenv('EP_SCANNER_NO_TIMESTAMP', 'false')

""" LOGGING   """

log_dir: str = os.getenv('EP_SCANNER_LOG_DIR', 'logs')
log_level: str = os.getenv('EP_SCANNER_LOG_LEVEL', 'WARNING')

""" NUMERICS   """

# Floats are kept as strings here and converted where used
reality_tol: str = os.getenv('EP_SCANNER_REALITY_TOL', '1e-9')
refine_tol: str = os.getenv('EP_SCANNER_REFINE_TOL', '1e-6')
root_width: str = os.getenv('EP_SCANNER_ROOT_WIDTH', '1e-12')

# Thread pool size for sweeps (1 = sequential)
sweep_workers: str = os.getenv('EP_SCANNER_SWEEP_WORKERS', '1')


def env_flag(value: str) -> bool:
    """Interpret a 'true'/'false' style environment value"""
    return value.strip().lower() in ("1", "true", "yes", "on")
