"""
Core module for configuration, errors and checked arithmetic
"""
