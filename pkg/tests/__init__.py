"""Test suite for rlab."""
