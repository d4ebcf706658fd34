"""Utility modules for rlab."""
