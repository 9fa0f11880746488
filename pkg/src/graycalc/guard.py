"""Enumeration limits for the brute-force constructions."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import SizeGuardExceeded

ENV_VAR = "GRAYCALC_SIZE_GUARD"

_KEYS = {"objects": "max_value_objects", "index": "max_index_objects",
         "candidates": "max_candidates"}


@dataclass(frozen=True)
class SizeGuard:
    max_value_objects: int = 6
    max_index_objects: int = 4
    max_candidates: int = 250_000

    @classmethod
    def from_env(cls) -> "SizeGuard":
        """Read overrides such as ``objects=8,index=5,candidates=10^6``.

        A bare integer overrides ``max_candidates`` only.
        """
        raw = os.environ.get(ENV_VAR, "").strip()
        guard = cls()
        if not raw:
            return guard
        if raw.isdigit():
            return replace(guard, max_candidates=int(raw))
        updates = {}
        for item in raw.split(","):
            key, _, value = item.partition("=")
            key = key.strip()
            if key not in _KEYS or not value.strip().isdigit():
                raise ValueError(f"bad {ENV_VAR} entry {item!r}")
            updates[_KEYS[key]] = int(value)
        return replace(guard, **updates)

    def check_candidates(self, count: int, what: str) -> None:
        if count > self.max_candidates:
            raise SizeGuardExceeded(
                f"{what}: {count} candidates exceed the limit of {self.max_candidates}")

    def check_value(self, n_objects: int, what: str) -> None:
        if n_objects > self.max_value_objects:
            raise SizeGuardExceeded(
                f"{what} has {n_objects} objects, limit is {self.max_value_objects}")

    def check_index(self, n_objects: int) -> None:
        if n_objects > self.max_index_objects:
            raise SizeGuardExceeded(
                f"indexing 2-category has {n_objects} objects, limit is {self.max_index_objects}")


def default_guard() -> SizeGuard:
    return SizeGuard.from_env()
