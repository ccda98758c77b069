"""Append-only on-disk cache of Collatz lengths.

One JSON object per line, ``{"n": "27", "length": "70"}``.  A file that
fails validation is discarded and rebuilt rather than trusted.
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from .core import DEFAULT_MAX_STEPS, collatz_length

log = logging.getLogger(__name__)


class LengthCache:
    def __init__(self, path: str | os.PathLike) -> None:
        self.path = Path(path)
        self._table: dict[int, int] = {}
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        table = {}
        try:
            with self.path.open(encoding="utf-8") as fh:
                for lineno, line in enumerate(fh, 1):
                    if not line.strip():
                        continue
                    rec = json.loads(line)
                    n, length = int(rec["n"]), int(rec["length"])
                    if n < 1 or length < 1 or table.get(n, length) != length:
                        raise ValueError(f"bad entry on line {lineno}")
                    table[n] = length
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("length cache %s is corrupt (%s); rebuilding", self.path, exc)
            self.path.unlink()
            return
        self._table = table

    def __len__(self) -> int:
        return len(self._table)

    def __contains__(self, n: int) -> bool:
        return n in self._table

    def length(self, n: int, max_steps: int = DEFAULT_MAX_STEPS) -> int:
        """Cached ``collatz_length``; a hit returns exactly what recomputation would."""
        hit = self._table.get(n)
        # a hit above the caller's cutoff must still raise, as recomputation would
        if hit is not None and hit <= max_steps:
            return hit
        value = collatz_length(n, max_steps)
        self._table[n] = value
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(json.dumps({"n": str(n), "length": str(value)}) + "\n")
        return value
