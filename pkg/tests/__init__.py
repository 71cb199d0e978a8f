"""
Test suite for HOCUS.
"""
