#!/usr/bin/env python3
"""
PLATEAU: command-line entry point

Usage:
    python plateau_cli.py verify --p 3 --m 2 --coeffs a8,a1
    python plateau_cli.py scan --p 3 --m 3 --exhaustive
"""

import sys
from pathlib import Path

# Ensure project root is on path
PROJECT_ROOT = Path(__file__).resolve().parent
sys.path.insert(0, str(PROJECT_ROOT))

from cli.main import main

if __name__ == "__main__":
    sys.exit(main())
