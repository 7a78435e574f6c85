"""
Exact rational linear algebra module
"""
