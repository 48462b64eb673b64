"""
Configuration file for the Siegel Eisenstein toolkit
"""
import os
from dotenv import load_dotenv

load_dotenv()

# Enumeration budgets
GAUSS_SUM_BUDGET = int(os.getenv('GAUSS_SUM_BUDGET', '100000'))  # coset representatives per sum
GAUSS_CHUNK_SIZE = int(os.getenv('GAUSS_CHUNK_SIZE', '65536'))
SYM_BRUTEFORCE_BUDGET = int(os.getenv('SYM_BRUTEFORCE_BUDGET', '100000000'))  # bordered matrices
SYM_CHUNK_SIZE = int(os.getenv('SYM_CHUNK_SIZE', '262144'))

# Theta numerics
THETA_TAIL_BOUND = float(os.getenv('THETA_TAIL_BOUND', '1e-14'))
THETA_MAX_RADIUS = int(os.getenv('THETA_MAX_RADIUS', '60'))
NUMERIC_TOLERANCE = float(os.getenv('NUMERIC_TOLERANCE', '1e-8'))
BRANCH_STEPS = int(os.getenv('BRANCH_STEPS', '64'))  # initial steps along the tracking path
BRANCH_REFINE_LIMIT = int(os.getenv('BRANCH_REFINE_LIMIT', '24'))  # bisections per step

# Verification suites
DEFAULT_SEED = int(os.getenv('DEFAULT_SEED', '7'))
DEFAULT_TRIALS = int(os.getenv('DEFAULT_TRIALS', '50'))  # checked instances per randomized identity
UNIMODULAR_PAIRS = int(os.getenv('UNIMODULAR_PAIRS', '20'))  # coprime pairs per degree, capped by the trials
UNIMODULAR_E_PER_PAIR = int(os.getenv('UNIMODULAR_E_PER_PAIR', '20'))
INSTANCE_ATTEMPTS = int(os.getenv('INSTANCE_ATTEMPTS', '4000'))  # rejection sampling cap
MAX_WORKERS = int(os.getenv('MAX_WORKERS', '4'))
SHOW_PROGRESS = os.getenv('SHOW_PROGRESS', '1') not in ('0', 'false', 'False')

# Logging
LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')

# Output
SCHEMA_VERSION = 1
APPROX_DIGITS = 15
