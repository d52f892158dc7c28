"""JSON encoding of the three coefficient types.

The wire format keeps float64 values exactly (shortest round-trip reprs):

    {"kind": "trig",  "coeffs": [{"k": [k],    "re": ..., "im": ...}, ...]}
    {"kind": "bivar", "coeffs": [{"k": [m, n], "re": ..., "im": ...}, ...]}
    {"kind": "ap",    "coeffs": [{"omega": w,  "re": ..., "im": ...}, ...]}

Coefficient lists are sorted by key so dumps are deterministic.
"""

from __future__ import annotations

import json

from .almost_periodic import APFunc
from .errors import ValidationError
from .trig import BivarPoly, TrigPoly


def to_obj(f) -> dict:
    if isinstance(f, TrigPoly):
        return {
            "kind": "trig",
            "coeffs": [
                {"k": [k], "re": v.real, "im": v.imag}
                for k, v in sorted(f.coeffs.items())
            ],
        }
    if isinstance(f, BivarPoly):
        return {
            "kind": "bivar",
            "coeffs": [
                {"k": [m, n], "re": v.real, "im": v.imag}
                for (m, n), v in sorted(f.coeffs.items())
            ],
        }
    if isinstance(f, APFunc):
        return {
            "kind": "ap",
            "coeffs": [
                {"omega": w, "re": c.real, "im": c.imag} for w, c in f.items()
            ],
        }
    raise TypeError(f"cannot serialize {type(f).__name__}")


def _entry_value(entry: dict) -> complex:
    try:
        return complex(float(entry["re"]), float(entry["im"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"bad coefficient entry {entry!r}") from exc


def from_obj(obj: dict):
    if not isinstance(obj, dict) or "kind" not in obj or "coeffs" not in obj:
        raise ValidationError("expected an object with 'kind' and 'coeffs'")
    kind = obj["kind"]
    coeffs = obj["coeffs"]
    if not isinstance(coeffs, list):
        raise ValidationError("'coeffs' must be a list")
    try:
        if kind == "trig":
            return TrigPoly({int(e["k"][0]): _entry_value(e) for e in coeffs})
        if kind == "bivar":
            return BivarPoly(
                {(int(e["k"][0]), int(e["k"][1])): _entry_value(e) for e in coeffs}
            )
        if kind == "ap":
            return APFunc({float(e["omega"]): _entry_value(e) for e in coeffs})
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed '{kind}' coefficient list") from exc
    raise ValidationError(f"unknown kind {kind!r}")


def dumps(f) -> str:
    return json.dumps(to_obj(f), indent=2, sort_keys=True, allow_nan=False)


def loads(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from exc
    return from_obj(obj)


def save(f, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(f) + "\n")


def load(path: str):
    with open(path) as fh:
        return loads(fh.read())
