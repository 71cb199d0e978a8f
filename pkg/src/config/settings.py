"""
Configuration settings for the HOCUS solver.
Centralizes all numerical defaults and harness paths for easy maintenance.
"""

import os
from pathlib import Path

# Project root directory
PROJECT_ROOT = Path(__file__).parent.parent.parent

# Output settings
OUTPUT_DIR = PROJECT_ROOT / "output"
CSV_PRECISION = 15           # Significant digits written to CSV/VTK files
REPORT_FILENAME = "report.json"

# Logging settings
LOG_DIR = PROJECT_ROOT / "logs"
LOG_PATH = LOG_DIR / "hocus.log"
LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(message)s"
LOG_LEVEL = "INFO"

# PROGRESS_LOG_EVERY: time-loop progress line frequency (DEBUG level)
PROGRESS_LOG_EVERY = 100

# Grid settings
# N_GHOST: MP5 at the first interior interface reaches 3 cells past the boundary
N_GHOST = 3

# Reconstruction settings
MP5_EPSILON = 1e-20
ALPHA_DEFAULTS = {
    "MP5": 4.0,
    "HOCUS5": 7.0,
    "HOCUS6": 7.0,
    "HOCUS6_EXTRA": 7.0,
}
# Any variant not listed above uses the standalone MP5 value
ALPHA_FALLBACK = 4.0

WENOZ_EPSILON = 1e-40
WENOZ_POWER = 1
WENOZ_SMOOTHNESS_THRESHOLD = 1e6
TBV_RATIO_GUARD = 1e-20

MUSCL_ETA = 1.0 / 3.0
MUSCL_OMEGA = 4.0

THINC_BETA_STAGE1 = 1.1
THINC_BETA_STAGE2 = 1.6
THINC_EPSILON = 1e-20

# Time integration settings
DEFAULT_CFL = 0.2
CONVERGENCE_DT_FACTOR = 0.1   # dt = factor * dx**2 for accuracy studies
MAX_STEPS = 50_000_000
# A conserved total below this fraction of its absolute integral counts as zero;
# its drift is then the absolute change
DRIFT_ZERO_TOTAL = 1e-12

# Exact Riemann solver settings
EXACT_RIEMANN_TOLERANCE = 1e-12
EXACT_RIEMANN_MAX_ITER = 100

# Batch settings
# HOCUS_THREADS caps how many independent runs the batch command executes at once
BATCH_THREADS = max(1, int(os.environ.get("HOCUS_THREADS", os.cpu_count() or 1)))

# Names accepted on the command line
SCHEME_NAMES = (
    "MP5", "WENO_Z", "C5", "C6", "E6",
    "HOCUS5", "HOCUS6", "HOCUS_TVD", "C5T2", "HOCUS_WENOZ", "HOCUS6_EXTRA",
)
RIEMANN_NAMES = ("HLLC", "GLF")

# CLI exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
