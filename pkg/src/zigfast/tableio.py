"""Serialization of ziggurat tables.

Two formats round-trip bit-exactly:

* JSON: reals as C99 hexadecimal float strings, CRC32 checksum over the
  canonical payload.
* binary: magic ``ZIGT``, version byte, distribution byte, little-endian
  u32 header fields, raw little-endian f64 tables, trailing CRC32.
"""

from __future__ import annotations

import json
import math
import struct
import zlib

import numpy as np

from .densities import EXPONENTIAL, HALF_NORMAL
from .errors import FormatError
from .tables import ZigguratTables

SCHEMA_VERSION = 1
_MAGIC = b"ZIGT"
_DIST_CODES = {EXPONENTIAL: 0, HALF_NORMAL: 1}
_DIST_NAMES = {v: k for k, v in _DIST_CODES.items()}


def _hex(v: float) -> str:
    if math.isinf(v):
        return "inf"
    return float(v).hex()


def _unhex(s) -> float:
    try:
        return float.fromhex(s)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad float field: {s!r}") from exc


def _payload(tables: ZigguratTables) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "distribution": tables.distribution,
        "i_max": tables.i_max,
        "L_max": tables.l_max,
        "total_mass": _hex(tables.total_mass),
        "X": [_hex(v) for v in tables.x],
        "F": [_hex(v) for v in tables.f],
        "A": [_hex(v) for v in tables.a],
        "epsilon_max": _hex(tables.epsilon_max),
    }


def _checksum(payload: dict) -> int:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return zlib.crc32(blob)


def to_json_bytes(tables: ZigguratTables) -> bytes:
    payload = _payload(tables)
    payload["checksum"] = f"{_checksum(dict(payload)):08x}"
    return (json.dumps(payload, indent=1) + "\n").encode()


def from_json_bytes(data: bytes) -> ZigguratTables:
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise FormatError("not valid JSON") from exc
    if not isinstance(doc, dict):
        raise FormatError("table file must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise FormatError(f"unsupported schema_version: {doc.get('schema_version')!r}")
    stored = doc.pop("checksum", None)
    if stored is None or f"{_checksum(doc):08x}" != stored:
        raise FormatError("checksum mismatch")
    if doc["distribution"] not in _DIST_CODES:
        raise FormatError(f"unknown distribution: {doc['distribution']!r}")
    try:
        return ZigguratTables(
            distribution=doc["distribution"],
            i_max=int(doc["i_max"]),
            l_max=int(doc["L_max"]),
            total_mass=_unhex(doc["total_mass"]),
            x=np.array([_unhex(v) for v in doc["X"]]),
            f=np.array([_unhex(v) for v in doc["F"]]),
            a=np.array([_unhex(v) for v in doc["A"]]),
            epsilon_max=_unhex(doc["epsilon_max"]),
        )
    except KeyError as exc:
        raise FormatError(f"missing field: {exc}") from exc


def to_binary(tables: ZigguratTables) -> bytes:
    n = tables.l_max + 1
    body = struct.pack(
        "<4sBBII",
        _MAGIC,
        SCHEMA_VERSION,
        _DIST_CODES[tables.distribution],
        tables.i_max,
        tables.l_max,
    )
    body += struct.pack("<2d", tables.total_mass, tables.epsilon_max)
    for arr in (tables.x, tables.f, tables.a):
        body += struct.pack(f"<{n}d", *arr)
    return body + struct.pack("<I", zlib.crc32(body))


def from_binary(data: bytes) -> ZigguratTables:
    if len(data) < 18 or data[:4] != _MAGIC:
        raise FormatError("missing ZIGT magic")
    body, (crc,) = data[:-4], struct.unpack("<I", data[-4:])
    if zlib.crc32(body) != crc:
        raise FormatError("checksum mismatch")
    _, version, dist_code, i_max, l_max = struct.unpack_from("<4sBBII", body, 0)
    if version != SCHEMA_VERSION:
        raise FormatError(f"unsupported version byte: {version}")
    if dist_code not in _DIST_NAMES:
        raise FormatError(f"unknown distribution code: {dist_code}")
    n = l_max + 1
    expect = 14 + 16 + 3 * 8 * n
    if len(body) != expect:
        raise FormatError("truncated or oversized table body")
    total_mass, epsilon_max = struct.unpack_from("<2d", body, 14)
    off = 30
    arrays = []
    for _ in range(3):
        arrays.append(np.array(struct.unpack_from(f"<{n}d", body, off)))
        off += 8 * n
    return ZigguratTables(
        distribution=_DIST_NAMES[dist_code],
        i_max=i_max,
        l_max=l_max,
        total_mass=total_mass,
        x=arrays[0],
        f=arrays[1],
        a=arrays[2],
        epsilon_max=epsilon_max,
    )


def save(tables: ZigguratTables, path, fmt: str = "json") -> None:
    data = to_json_bytes(tables) if fmt == "json" else to_binary(tables)
    with open(path, "wb") as fh:
        fh.write(data)


def load(path) -> ZigguratTables:
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:4] == _MAGIC:
        return from_binary(data)
    return from_json_bytes(data)
