"""
Domain Layer: Physical parameters and value objects.

This layer contains:
- Model parameters: squeezing, rates, population model
- Constants and defaults
- Domain exceptions and pure helpers
"""
