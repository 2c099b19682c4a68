"""
Infrastructure Layer: External dependencies and implementations.

This layer contains:
- Logging configuration
- CSV file output
"""
