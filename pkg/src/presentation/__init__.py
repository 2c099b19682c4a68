"""
Presentation Layer: User-facing interfaces.

This layer contains:
- CLI: argparse entry point, config schema and parser
"""
