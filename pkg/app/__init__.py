"""
SigmaK: counting vertex subsets that induce exactly k edges
Main application package
"""

__version__ = "1.0.0"
