"""
Core Modules: The physics of the two-ensemble model.

This package is organized by concern:
- dynamics: Moment ODEs, steady state, integration
- witnesses: Entanglement and EPR criteria, gain selection
- measurement: Gaussian sampling, pulse readout, estimation
"""
