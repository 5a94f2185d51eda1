"""
Integration tests package.
"""