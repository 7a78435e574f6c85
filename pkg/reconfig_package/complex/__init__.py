"""
Simplicial complex module
"""
