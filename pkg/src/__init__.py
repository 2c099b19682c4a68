"""
Spin-EPR: steady-state EPR and entanglement toolkit for two dissipatively
coupled atomic ensembles.

This package follows a layered architecture:
- Domain: Physical parameters and exceptions
- Core: Moment dynamics, witnesses, measurement simulation
- Application: Sweep and simulation services
- Infrastructure: Logging and file output
- Presentation: Command-line interface
"""

__version__ = "1.0.0"
