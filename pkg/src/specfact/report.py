"""Result bundle shared by the factorization routines and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import serialization


def _jsonable(x):
    """Coerce numpy scalars and containers into plain JSON types."""
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, complex):
        return [x.real, x.imag]
    if hasattr(x, "item"):
        return _jsonable(x.item())
    return x


@dataclass
class FactorReport:
    """What a factorization run produced, JSON-serializable and deterministic.

    factor holds the live coefficient object; spectrum is [lo, hi] in the
    relevant frequency units (integer k, theta_hat, or omega); diagnostics
    carries method-specific telemetry and flags; config echoes the knobs
    the run actually used.
    """

    method: str
    kind: str
    factor: object | None = None
    mahler: float | None = None
    residual: float | None = None
    spectrum: list | None = None
    roots: list | None = None
    diagnostics: dict = field(default_factory=dict)
    config: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "kind": self.kind,
            "factor": serialization.to_obj(self.factor)
            if self.factor is not None
            else None,
            "mahler": _jsonable(self.mahler),
            "residual": _jsonable(self.residual),
            "spectrum": _jsonable(self.spectrum),
            "roots": _jsonable(self.roots),
            "diagnostics": _jsonable(self.diagnostics),
            "config": _jsonable(self.config),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, allow_nan=False)

    def save(self, path: str) -> None:
        with open(path, "w") as fh:
            fh.write(self.dumps() + "\n")
