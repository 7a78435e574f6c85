"""
Discrete geometry module
"""
