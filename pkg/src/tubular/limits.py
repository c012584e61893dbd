"""Resource caps, read from ``TUBULAR_<NAME>`` environment variables.

Values must be positive integers.  :func:`overrides` temporarily replaces
caps for the current thread of control (the CLI uses it for the ``caps``
input option).
"""
from __future__ import annotations

import os
from contextlib import contextmanager

DEFAULTS = {
    "max_tree_vertices": 200_000,
    "max_walls": 100_000,
    "max_search_nodes": 5_000_000,
    "max_clique_nodes": 2_000_000,
    "max_recursion": 64,
}

_overrides: dict[str, int] = {}


def env_name(name: str) -> str:
    return "TUBULAR_" + name.upper()


def cap(name: str) -> int:
    if name in _overrides:
        return _overrides[name]
    raw = os.environ.get(env_name(name))
    if raw is None:
        return DEFAULTS[name]
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value <= 0:
        raise ValueError(f"{env_name(name)} must be a positive integer, got {raw!r}")
    return value


@contextmanager
def overrides(values: dict[str, int]):
    unknown = set(values) - set(DEFAULTS)
    if unknown:
        raise KeyError(f"unknown caps: {sorted(unknown)}")
    saved = dict(_overrides)
    _overrides.update(values)
    try:
        yield
    finally:
        _overrides.clear()
        _overrides.update(saved)
