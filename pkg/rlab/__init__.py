"""rlab - explicit reciprocity laboratory for p-adic fields."""

__version__ = "0.1.0"
__author__ = "rlab Contributors"

# Package metadata
__all__ = ["__version__", "__author__"]
