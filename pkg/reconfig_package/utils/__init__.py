"""
Utility module
"""
