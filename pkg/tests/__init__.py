"""
Test suite for the fibgamma package.
"""
