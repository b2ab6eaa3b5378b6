"""
Classical data tables for compact Lie algebras
Rank bounds, primitive degrees, Dynkin edges and the fold table
"""
