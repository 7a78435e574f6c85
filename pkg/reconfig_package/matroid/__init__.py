"""
Matroid module
"""
