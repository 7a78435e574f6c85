"""
Hypothesis check module
"""
