"""Small shared helpers: seed derivation, label ordering, file writers."""
from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any, Iterable, Sequence


def derive_seed(*parts: Any) -> int:
    """Stable non-negative 63-bit seed from a tuple of hashable parts.

    Used to give independent jobs (per crust level, per covering trial,
    per ensemble replicate) reproducible streams that do not depend on
    execution order.
    """
    text = "\x1f".join(repr(p) for p in parts)
    digest = hashlib.blake2b(text.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big") >> 1


def label_sort_key(label: Any) -> tuple:
    # ints before strings so mixed-label graphs still sort deterministically
    return (isinstance(label, str), label)


def fmt_value(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(fmt_value(v) for v in row) for row in rows)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_json(path: Path, payload: Any) -> None:
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def rows_as_json(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> list[dict]:
    return [dict(zip(header, row)) for row in rows]
