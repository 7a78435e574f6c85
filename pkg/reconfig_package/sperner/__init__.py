"""
Sperner prism module
"""
