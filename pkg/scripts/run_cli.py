#!/usr/bin/env python
"""
Script to run the spin-EPR command-line interface.

Usage:
    python scripts/run_cli.py sweep --config config/sweep.example.conf
    python scripts/run_cli.py steady
    python scripts/run_cli.py causality --delta-t-ms 0.45
"""

import sys

from src.presentation.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
