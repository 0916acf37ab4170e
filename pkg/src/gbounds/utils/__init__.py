"""
Utility functions and classes for gbounds.

This package contains helper functions for logging and configuration
used across the library and the command line.
"""
