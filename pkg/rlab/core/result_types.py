"""Result types for core module return values."""

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class ProcessingResult:
    """Base result type for all command operations."""

    success: bool
    message: str = ""
    details: Dict[str, Any] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)


@dataclass
class Report(ProcessingResult):
    """Machine-readable report printed by every command."""

    command: str = ""
    fingerprint: str = ""
    inputs: Dict[str, Any] = field(default_factory=dict)
    outputs: Dict[str, Any] = field(default_factory=dict)
    precision: int = 0
    guard_recheck: Optional[bool] = None

    def to_json(self) -> str:
        """Serialize deterministically (sorted keys, fixed indentation)."""
        return json.dumps(asdict(self), sort_keys=True, indent=2)


@dataclass
class PropertyOutcome:
    """Outcome of one checked property inside a self-test suite."""

    name: str
    passed: bool = True
    checked: int = 0
    skipped: str = ""
    counterexample: Optional[Dict[str, Any]] = None


@dataclass
class SuiteResult(ProcessingResult):
    """Result of running one self-test suite."""

    suite: str = ""
    seed: int = 0
    samples: int = 0
    properties: List[PropertyOutcome] = field(default_factory=list)

    @property
    def failures(self) -> List[PropertyOutcome]:
        return [prop for prop in self.properties if not prop.passed]
