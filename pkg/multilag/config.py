"""Configuration and environment setup."""

import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

# Paths
PROJECT_ROOT = Path(__file__).parent.parent
DOCS_DIR = PROJECT_ROOT / "docs"

# Golden files
GOLDEN_CASE_FILE = DOCS_DIR / "golden_case_A.json"

# Search
VMAX_BOUND = int(os.getenv("MULTILAG_VMAX_BOUND", "6"))  # largest seed degree the CLI accepts
DEFAULT_TARGET_M = 3

# Quadrature
QUADRATURE_NODES = int(os.getenv("MULTILAG_QUADRATURE_NODES", "128"))
ORTHOGONALITY_TOL = float(os.getenv("MULTILAG_TOL", "1e-8"))
QUADRATURE_STABILITY_TOL = 1e-10  # node doubling must agree to this
GAMMA_TOL = 1e-12


# Logging
LOG_LEVEL = os.getenv("MULTILAG_LOG_LEVEL", "WARNING")
