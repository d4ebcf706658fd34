"""Field description files.

A field file is a TOML document::

    p = 3
    n = 1
    eisenstein = [3, 3, 1]
    precision = 40

    [subfield]              # optional: an embedded subfield k
    p = 3
    n = 1
    eisenstein = [3, 3, 1]
    pi_image = "pi^3"

``pi_image`` and ``u_image`` are element expressions over the main field.
"""

import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from rlab.core.exceptions import FieldConfigError
from rlab.core.expr import evaluate_source
from rlab.core.field import FieldDesc, FieldTower, KElement, make_field
from rlab.core.presets import PRESET_EMBEDDINGS, PRESETS
from rlab.core.subfield import SubfieldEmbedding
from rlab.core.utils import validate_file_path

FIELD_KEYS = frozenset({"p", "n", "unram_poly", "eisenstein", "precision"})
SUBFIELD_KEYS = FIELD_KEYS | {"pi_image", "u_image"}


@dataclass
class FieldConfig:
    """A loaded field, with its optional subfield embedding."""

    source: str
    desc: FieldDesc
    tower: FieldTower
    embedding: Optional[SubfieldEmbedding] = None

    def with_precision(self, prec: int) -> "FieldConfig":
        """The same configuration rebuilt at another working precision."""
        tower = self.tower.with_precision(prec)
        embedding = None
        if self.embedding is not None:
            old = self.embedding
            sub = old.sub.with_precision(prec)
            embedding = SubfieldEmbedding(
                sub,
                tower,
                _rebase(old.pi_image, tower),
                _rebase(old.u_image, tower),
            )
        return FieldConfig(self.source, tower.desc, tower, embedding)


def _rebase(x: KElement, tower: FieldTower) -> KElement:
    return tower.element(x.coeffs, x.shift, x.prec)


def _int_value(table: Mapping[str, Any], key: str, where: str) -> int:
    value = table[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise FieldConfigError(f"{where}{key} must be an integer, got {value!r}")
    return value


def _int_list(value: Any, key: str, where: str) -> list:
    if not isinstance(value, list) or not value:
        raise FieldConfigError(f"{where}{key} must be a non-empty list")
    for item in value:
        if isinstance(item, bool) or not isinstance(item, int):
            raise FieldConfigError(f"{where}{key} entries must be integers, got {item!r}")
    return value


def desc_from_table(
    table: Mapping[str, Any],
    allowed: frozenset = FIELD_KEYS,
    where: str = "",
    default_precision: Optional[int] = None,
) -> FieldDesc:
    """Build a FieldDesc from a parsed TOML table.

    Raises:
        FieldConfigError: On unknown or missing keys and ill-typed values
    """
    unknown = sorted(set(table) - allowed)
    if unknown:
        raise FieldConfigError(f"unknown key '{where}{unknown[0]}'")
    for key in ("p", "eisenstein"):
        if key not in table:
            raise FieldConfigError(f"missing required key '{where}{key}'")
    p = _int_value(table, "p", where)
    n = _int_value(table, "n", where) if "n" in table else 0
    unram = _int_list(table.get("unram_poly", [0, 1]), "unram_poly", where)
    raw = table["eisenstein"]
    if not isinstance(raw, list) or not raw:
        raise FieldConfigError(f"{where}eisenstein must be a non-empty list")
    coeffs = []
    for item in raw:
        if isinstance(item, list):
            coeffs.append(tuple(_int_list(item, "eisenstein", where)))
        elif isinstance(item, int) and not isinstance(item, bool):
            coeffs.append(item)
        else:
            raise FieldConfigError(
                f"{where}eisenstein entries must be integers or integer lists, got {item!r}"
            )
    precision = default_precision
    if "precision" in table:
        precision = _int_value(table, "precision", where)
    return FieldDesc(
        p=p, n=n, eisenstein=tuple(coeffs), unram_poly=tuple(unram), work_prec=precision
    )


def read_config(path: Union[str, Path]) -> Dict[str, Any]:
    """Parse a field file into a dictionary.

    Raises:
        FileNotFoundError: If the file doesn't exist
        FieldConfigError: If the file is not valid TOML
    """
    path_obj = validate_file_path(path)
    try:
        with open(path_obj, "rb") as f:
            return tomllib.load(f)
    except tomllib.TOMLDecodeError as e:
        raise FieldConfigError(f"{path_obj}: {e}") from e


def read_desc(source: Union[str, Path]) -> FieldDesc:
    """The main field's description, without building the field."""
    name = str(source)
    if not Path(name).exists() and name in PRESETS:
        return PRESETS[name]
    data = read_config(source)
    data.pop("subfield", None)
    return desc_from_table(data)


def load_field(source: Union[str, Path], precision: Optional[int] = None) -> FieldConfig:
    """Load a field file, or a preset name when no such file exists.

    Args:
        source: Path to a TOML field file or the name of a preset
        precision: Working precision overriding the file's value

    Raises:
        FileNotFoundError: If source is neither a file nor a preset
        FieldConfigError: If the file is malformed
        FieldDescriptionError: If the described field is invalid
    """
    name = str(source)
    if not Path(name).exists() and name in PRESETS:
        tower = make_field(PRESETS[name])
        embedding = PRESET_EMBEDDINGS[name](tower) if name in PRESET_EMBEDDINGS else None
        config = FieldConfig(name, tower.desc, tower, embedding)
        return config if precision is None else config.with_precision(precision)

    data = read_config(source)
    sub_table = data.pop("subfield", None)
    desc = desc_from_table(data)
    if precision is not None:
        desc = replace(desc, work_prec=precision)
    tower = make_field(desc)

    embedding = None
    if sub_table is not None:
        if not isinstance(sub_table, dict):
            raise FieldConfigError("subfield must be a table")
        if "pi_image" not in sub_table:
            raise FieldConfigError("missing required key 'subfield.pi_image'")
        sub_desc = desc_from_table(
            sub_table, SUBFIELD_KEYS, "subfield.", tower.prec
        )
        sub = make_field(sub_desc)
        pi_image = evaluate_source(str(sub_table["pi_image"]), tower, tower.exact_prec)
        u_image = None
        if "u_image" in sub_table:
            u_image = evaluate_source(str(sub_table["u_image"]), tower, tower.exact_prec)
        embedding = SubfieldEmbedding(sub, tower, pi_image, u_image)

    return FieldConfig(name, desc, tower, embedding)
