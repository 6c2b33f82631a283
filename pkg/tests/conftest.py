from __future__ import annotations

import pytest

from coxbasis.coxeter import build_group, parse_type
from coxbasis.invariants import compute_invariants

_CACHE: dict[str, tuple] = {}


@pytest.fixture(scope="session")
def pipeline():
    """Factory returning (group, arrangement, system) per type label,
    built once per session."""

    def get(label: str):
        if label not in _CACHE:
            datum = parse_type(label)
            group, arrangement = build_group(datum)
            system = compute_invariants(group, arrangement, cache_dir=None)
            _CACHE[label] = (group, arrangement, system)
        return _CACHE[label]

    return get
