"""Subcolourings of graph powers via vertex orderings."""
