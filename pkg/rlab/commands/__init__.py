"""Command modules for rlab."""
