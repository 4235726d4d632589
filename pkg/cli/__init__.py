"""
CLI Module - Command-Line Front End

COMPONENTS:
- cli/config.py: RunConfig, parse_config (argparse flags + JSON file + environment)
- cli/runner.py: run (mode dispatch, table emission), main (entry point)
- cli/output.py: fixed column set, CSV/JSON rendering with metadata header

MODES:
    shift | scan | quantized | oracle | two-photon-preset (derived from the flags)

EXIT CODES:
    0 success, 1 compute failure, 2 configuration error, 3 unknown config key,
    4 conflicting units, 5 invalid physical value

Usage:
    python run_acstark.py --state 1S --omega-au 0.1 --intensity 1e4
    python run_acstark.py --scan 0.05 0.45 100 --spacing log --format csv
"""

__version__ = "0.1.0"

from cli.config import RunConfig, parse_config
from cli.runner import main, run

__all__ = [
    '__version__',
    'RunConfig',
    'parse_config',
    'main',
    'run',
]
