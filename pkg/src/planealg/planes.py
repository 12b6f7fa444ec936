"""Classical affine planes over finite fields.

``ag2(field)`` is the coordinate model: points are ordered pairs (x, y)
encoded as ``x*q + y``, lines are the graphs y = m*x + b plus the verticals
x = c.  Line ids are pinned (slopes in field-index order with intercept
varying fastest, then verticals) so golden ids stay stable across runs.
"""

from .fields import FiniteField
from .incidence import AffinePlane


def point_id(q: int, x: int, y: int) -> int:
    return x * q + y


def point_xy(q: int, pid: int) -> tuple[int, int]:
    return divmod(pid, q)


def ag2(field: FiniteField) -> AffinePlane:
    """The affine plane of order q coordinatized by the given field."""
    q = field.q
    lines: list[list[int]] = []
    for m in range(q):
        for b in range(q):
            lines.append([point_id(q, x, field.add(field.mul(m, x), b)) for x in range(q)])
    for c in range(q):
        lines.append([point_id(q, c, y) for y in range(q)])
    plane = AffinePlane(q * q, lines)
    report = plane.check_axioms()
    assert report.ok, "coordinate plane failed its own axioms"
    return plane
