"""Minimal `key = value` text documents for model files and reports.

One pair per line, keys are bare identifiers, values are written with
repr() so floats round-trip bit-exactly. Blank lines are ignored.
"""

from __future__ import annotations


def dump_kv(pairs: list[tuple[str, object]]) -> str:
    lines = [f"{key} = {value!r}" if isinstance(value, float) else f"{key} = {value}"
             for key, value in pairs]
    return "\n".join(lines) + "\n"


def parse_kv(text: str) -> dict[str, str]:
    """Parse a kv document into a string map; raises ValueError on bad lines."""
    out: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"not a key = value line: {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if not key:
            raise ValueError(f"empty key in line: {line!r}")
        out[key] = value.strip()
    return out
