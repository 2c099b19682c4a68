"""
Application Layer: Use cases and application services.

This layer contains:
- Simulation service: sweeps, single-point reports, dynamics and Monte Carlo
"""
