"""
Homology module
"""
