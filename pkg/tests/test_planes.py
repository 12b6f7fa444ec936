"""Coordinate-plane builder across every supported order."""

import pytest

from planealg import ag2, gf, point_id

ORDERS = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1), 8: (2, 3), 9: (3, 2), 16: (2, 4)}


@pytest.mark.parametrize("q", sorted(ORDERS))
def test_builder_passes_axioms_with_expected_counts(q):
    p, k = ORDERS[q]
    plane = ag2(gf(p, k))
    assert plane.checked
    assert plane.num_points == q * q
    assert plane.num_lines == q * q + q
    assert len(plane.parallel_classes) == q + 1


def test_line_id_layout_is_pinned():
    # slope-major with intercept varying fastest, verticals last
    field = gf(3)
    plane = ag2(field)
    for m in range(3):
        for b in range(3):
            expected = tuple(sorted(point_id(3, x, (m * x + b) % 3) for x in range(3)))
            assert plane.lines[m * 3 + b] == expected
    for c in range(3):
        assert plane.lines[9 + c] == tuple(point_id(3, c, y) for y in range(3))
