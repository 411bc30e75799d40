"""Persistent cache of computed L-polynomials.

One JSON object per line: ``{"key": ..., "value": ..., "sha256": ...}``.
The checksum covers key and value; lines that fail to parse or verify are
treated as misses.  Each write rewrites the file to a temporary sibling and
renames it into place.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

from lcurve.curve import HyperellipticCurve
from lcurve.serialize import curve_to_json
from lcurve.zeta import LPolynomial

log = logging.getLogger(__name__)


def cache_key(curve: HyperellipticCurve) -> str:
    obj = curve_to_json(curve)
    return json.dumps(
        [obj["p"], obj["f"], obj.get("field_modulus", []), obj["rhs"]], separators=(",", ":")
    )


def _checksum(key: str, value: dict) -> str:
    payload = key + "\n" + json.dumps(value, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


class LPolyCache:
    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)

    def _entries(self):
        if not self.path.exists():
            return
        with self.path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                try:
                    entry = json.loads(line)
                    if entry["sha256"] != _checksum(entry["key"], entry["value"]):
                        raise ValueError("checksum mismatch")
                except (ValueError, KeyError, TypeError) as exc:
                    log.warning("ignoring corrupt cache line %d in %s: %s", lineno, self.path, exc)
                    continue
                yield entry

    def get(self, curve: HyperellipticCurve) -> tuple[LPolynomial, list[int]] | None:
        key = cache_key(curve)
        for entry in self._entries():
            if entry["key"] == key:
                value = entry["value"]
                return LPolynomial.from_json(value["lpoly"]), [int(n) for n in value["counts"]]
        return None

    def put(self, curve: HyperellipticCurve, lp: LPolynomial, counts) -> None:
        key = cache_key(curve)
        value = {"lpoly": lp.to_json(), "counts": [str(n) for n in counts]}
        line = json.dumps({"key": key, "value": value, "sha256": _checksum(key, value)}) + "\n"
        old = self.path.read_bytes() if self.path.exists() else b""
        if old and not old.endswith(b"\n"):
            old += b"\n"
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=self.path.name + ".")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(old + line.encode())
            os.replace(tmp, self.path)
        except BaseException:
            os.unlink(tmp)
            raise
