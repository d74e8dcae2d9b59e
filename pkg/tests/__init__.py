"""
Tests package for the modular square root toolkit.
"""
