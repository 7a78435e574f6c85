"""
Graph and hypergraph module
"""
