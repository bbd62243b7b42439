"""Exact k-additive cores of cooperative games and their images under sharing values."""
