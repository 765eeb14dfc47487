"""Append-only JSON-lines registry of curves keyed by normalized moduli point.

Isomorphic curves (over the algebraic closure) share a normalized point and
therefore an id, so the second one added is reported as a duplicate.
"""
from __future__ import annotations

import fcntl
import hashlib
import json
import os
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterator, List, Optional, Union

from .arith import DomainError
from .reduction import SuperellipticCurve, is_minimal
from .weighted import WeightedPoint, normalize, weighted_height

STORE_ENV = "WMOD_STORE"


class StoreError(Exception):
    """Corrupt store content."""


def canonical_key(p: WeightedPoint) -> str:
    n = normalize(p)
    ws = ",".join(str(w) for w in n.weights)
    xs = ",".join(str(x) for x in n.int_coords())
    return f"w={ws};p={xs}"


def key_id(key: str) -> str:
    return hashlib.sha256(key.encode()).hexdigest()[:16]


@dataclass
class CurveRecord:
    id: str
    m: int
    d: int
    form_coeffs: List[str]
    twist_scalar: str
    canonical_key: str
    height: str
    height_argmax: int
    minimal: bool
    provenance: str = ""
    created_at: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "CurveRecord":
        return cls(**json.loads(line))


def make_record(curve: SuperellipticCurve, provenance: str = "") -> CurveRecord:
    point = curve.moduli_point()
    key = canonical_key(point)
    h = weighted_height(point)
    return CurveRecord(
        id=key_id(key),
        m=curve.m,
        d=curve.d,
        form_coeffs=[str(c) for c in curve.form.int_coeffs()],
        twist_scalar=str(curve.twist_scalar),
        canonical_key=key,
        height=h.decimal(12),
        height_argmax=h.argmax_index,
        minimal=is_minimal(curve),
        provenance=provenance,
    )


def _iter_records(fh) -> Iterator[CurveRecord]:
    for lineno, line in enumerate(fh, start=1):
        if not line.strip():
            continue
        try:
            yield CurveRecord.from_json(line)
        except (ValueError, TypeError) as exc:
            raise StoreError(f"corrupt record on line {lineno}: {exc}") from None


def db_list(store: Union[str, Path]) -> List[CurveRecord]:
    with open(store, encoding="utf-8") as fh:
        fcntl.flock(fh, fcntl.LOCK_SH)
        return list(_iter_records(fh))


@dataclass(frozen=True)
class AddResult:
    status: str  # "added" or "duplicate"
    id: str


def db_add(record: CurveRecord, store: Union[str, Path]) -> AddResult:
    """Append ``record`` unless a record with the same canonical key exists."""
    with open(store, "a+", encoding="utf-8") as fh:
        fcntl.flock(fh, fcntl.LOCK_EX)
        fh.seek(0)
        for existing in _iter_records(fh):
            if existing.canonical_key == record.canonical_key:
                return AddResult("duplicate", existing.id)
        fh.seek(0, os.SEEK_END)
        fh.write(record.to_json() + "\n")
        fh.flush()
    return AddResult("added", record.id)


def db_find(key: Union[WeightedPoint, SuperellipticCurve], store: Union[str, Path]) -> Optional[CurveRecord]:
    if isinstance(key, SuperellipticCurve):
        point = key.moduli_point()
    elif isinstance(key, WeightedPoint):
        point = key
    else:
        raise DomainError(f"cannot look up {type(key).__name__}")
    wanted = key_id(canonical_key(point))
    for rec in db_list(store):
        if rec.id == wanted:
            return rec
    return None


def default_store() -> Optional[str]:
    return os.environ.get(STORE_ENV)
