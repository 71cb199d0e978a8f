"""
HOCUS - high-order central-upwind finite-volume solver.
Main package initialization.
"""

__version__ = "1.0.0"
__author__ = "HOCUS Team"

# Package metadata only - no imports to avoid circular dependencies
