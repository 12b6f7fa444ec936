"""Shared fixtures: cached planes, groups and algebras per order, plus
arithmetic helpers used as independent oracles against the geometric code.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from planealg import (
    FiniteField,
    ag2,
    build_translation_group,
    enumerate_translations,
    generate_trace_preserving,
    gf,
    point_id,
)

PRIME_POWER = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1), 8: (2, 3), 9: (3, 2)}


def field_of_order(q: int) -> FiniteField:
    p, k = PRIME_POWER[q]
    return gf(p, k)


def shift_perm(field: FiniteField, a: int, b: int) -> tuple[int, ...]:
    """Oracle permutation (x, y) -> (x + a, y + b) in field arithmetic."""
    q = field.q
    return tuple(
        point_id(q, field.add(x, a), field.add(y, b)) for x in range(q) for y in range(q)
    )


def scalar_perm(field: FiniteField, m: int) -> tuple[int, ...]:
    """Oracle permutation (x, y) -> (m*x, m*y) in field arithmetic."""
    q = field.q
    return tuple(
        point_id(q, field.mul(m, x), field.mul(m, y)) for x in range(q) for y in range(q)
    )


@pytest.fixture(scope="session")
def make_field():
    cache = {}

    def get(q):
        if q not in cache:
            cache[q] = field_of_order(q)
        return cache[q]

    return get


@pytest.fixture(scope="session")
def make_plane(make_field):
    cache = {}

    def get(q):
        if q not in cache:
            cache[q] = ag2(make_field(q))
        return cache[q]

    return get


@pytest.fixture(scope="session")
def make_group(make_plane):
    cache = {}

    def get(q):
        if q not in cache:
            plane = make_plane(q)
            cache[q] = build_translation_group(plane, enumerate_translations(plane))
        return cache[q]

    return get


@pytest.fixture(scope="session")
def make_algebra(make_plane, make_group):
    cache = {}

    def get(q):
        if q not in cache:
            cache[q] = generate_trace_preserving(make_plane(q), make_group(q))
        return cache[q]

    return get
