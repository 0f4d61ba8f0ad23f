"""Run configurations for the batch scripts."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class SuiteConfig:
    ranks: tuple[int, ...] = (2, 3, 4)
    families: tuple[str, ...] = ("kashiwara", "projective", "bk", "bg3")
    trials: int = 50
    seed: int = 0
    top: int = 3


@dataclass(frozen=True)
class ScanConfig:
    # (n, bound) boxes of triples to scan
    boxes: tuple[tuple[int, int], ...] = ((2, 5), (3, 3))


@dataclass(frozen=True)
class ConsistencyConfig:
    ranks: tuple[int, ...] = (2, 3)
    show_matches: bool = True
    output: str | None = None


def _coerce(default, text: str):
    if isinstance(default, bool):
        return text.lower() in ("1", "true", "yes")
    if isinstance(default, int):
        return int(text)
    if isinstance(default, tuple):
        items = [s for s in text.split(",") if s]
        if default and isinstance(default[0], tuple):
            return tuple(tuple(int(x) for x in s.split(":")) for s in items)
        if default and isinstance(default[0], int):
            return tuple(int(s) for s in items)
        return tuple(items)
    return text


def from_args(cls, argv=None):
    """Build `cls` from --field value flags; tuples are comma lists, pairs are n:bound."""
    defaults = cls()
    parser = argparse.ArgumentParser(description=cls.__doc__)
    for f in fields(cls):
        parser.add_argument(f"--{f.name.replace('_', '-')}", dest=f.name, default=None)
    ns = parser.parse_args(argv)
    kwargs = {}
    for f in fields(cls):
        raw = getattr(ns, f.name)
        if raw is not None:
            kwargs[f.name] = _coerce(getattr(defaults, f.name), raw)
    return cls(**kwargs)
