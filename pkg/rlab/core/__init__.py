"""Core functionality for rlab.

Exact arithmetic in p-adic fields, analytic functions, explicit
reciprocity, exponential maps on forms, the norm oracle and the
higher-local residue model.
"""

from rlab.core import exceptions, utils

__all__ = ["exceptions", "utils"]
