"""
Test package for the ep_scanner application.
"""
