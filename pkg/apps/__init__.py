"""
PotentSums Django Applications Package
Contains the search (management commands) and api apps
"""
