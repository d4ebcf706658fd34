"""Common utility functions for rlab."""

import hashlib
from fractions import Fraction
from math import ceil
from pathlib import Path
from typing import Union

from rlab.core.field import FieldTower, KElement


def validate_file_path(path: Union[str, Path], must_exist: bool = True) -> Path:
    """Validate and return a Path object.

    Args:
        path: File path to validate
        must_exist: Whether the file must exist

    Returns:
        Path object

    Raises:
        FileNotFoundError: If must_exist=True and file doesn't exist
        ValueError: If path is invalid
    """
    try:
        path_obj = Path(path)
    except Exception as e:
        raise ValueError(f"Invalid path: {path}") from e

    if must_exist and not path_obj.exists():
        raise FileNotFoundError(f"File not found: {path}")

    return path_obj


def derive_seed(seed: int, label: str) -> int:
    """Deterministic 64-bit seed for one suite, from the run seed and a label."""
    digest = hashlib.sha256(f"{seed}:{label}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def centered(value: int, modulus: int) -> int:
    """Representative of value mod modulus in (-modulus/2, modulus/2]."""
    r = value % modulus
    return r - modulus if r > modulus // 2 else r


def default_eta(tower: FieldTower) -> KElement:
    """Smallest power of p with ord >= 2/(p-1), the scale used by the suites."""
    k = max(ceil(Fraction(2, tower.p - 1)), 1)
    return KElement.from_int(tower, tower.p**k, tower.exact_prec)


def sen_domain_bound(tower: FieldTower) -> Fraction:
    """Smallest ord(alpha - 1) on the pi-adic grid with ord >= 2/(p-1)."""
    t = ceil(Fraction(2 * tower.e, tower.p - 1))
    return Fraction(max(t, 1), tower.e)
