"""
Configuration settings for HOCUS.
"""

from .settings import *
