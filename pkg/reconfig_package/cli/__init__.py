"""
Command line module
"""
