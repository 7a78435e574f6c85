"""
Payload model module
"""
