"""
Sweep module
"""
