# src/ep_scanner/__init__.py
"""
Exceptional-point scanner for crypto-Hermitian tridiagonal Hamiltonians
"""

__version__ = "1.0.0"
__author__ = "EP Scanner contributors"
