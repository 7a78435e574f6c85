"""
Control center module
"""
