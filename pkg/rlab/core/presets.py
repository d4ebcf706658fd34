"""Built-in field descriptions, usable wherever a field file is expected."""

from typing import Dict, Optional

from rlab.core.field import FieldDesc, FieldTower, make_field
from rlab.core.subfield import SubfieldEmbedding

# Q_3(zeta_3) presented by pi = zeta - 1
F0 = FieldDesc(p=3, n=1, eisenstein=(3, 3, 1), work_prec=40)

# Q_3(zeta_3, pi_k^(1/3)) with pi_k = zeta_3 - 1 and pi_K^3 = pi_k
CUBIC_RADICAL = FieldDesc(p=3, n=1, eisenstein=(3, 0, 0, 3, 0, 0, 1), work_prec=60)

Q5_ZETA5 = FieldDesc(p=5, n=1, eisenstein=(5, 10, 10, 5, 1))

Q3 = FieldDesc(p=3, n=0, eisenstein=(-3, 1))

PRESETS: Dict[str, FieldDesc] = {
    "f0": F0,
    "cubic-radical": CUBIC_RADICAL,
    "q5-zeta5": Q5_ZETA5,
    "q3": Q3,
}


def preset_field(name: str, precision: Optional[int] = None) -> FieldTower:
    """Build a preset field, optionally at another working precision."""
    try:
        desc = PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
    tower = make_field(desc)
    return tower if precision is None else tower.with_precision(precision)


def cubic_radical_embedding(tower: Optional[FieldTower] = None) -> SubfieldEmbedding:
    """Q_3(zeta_3) inside the cubic radical tower via pi_k -> pi_K^3."""
    big = tower if tower is not None else make_field(CUBIC_RADICAL)
    sub = make_field(F0).with_precision(big.prec)
    return SubfieldEmbedding(sub, big, big.pi_power(3))


PRESET_EMBEDDINGS = {"cubic-radical": cubic_radical_embedding}
