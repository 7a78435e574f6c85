"""
Reconfiguration graph module
"""
