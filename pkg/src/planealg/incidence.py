"""Finite incidence structures and the affine plane axioms.

An :class:`AffinePlane` is loaded structurally first and verified against
the three axioms afterwards: a unique line joins any two distinct points,
through a point off a line passes exactly one disjoint line (Playfair),
and some three points are not collinear.  Axiom failures are reported with
concrete witnesses instead of raised, so callers can explain bad inputs.

Once :meth:`AffinePlane.check_axioms` passes, the plane is immutable and
carries its parallel classes (directions) plus a joining-line table, making
every geometric query in the enumeration loops a table lookup.
"""

from typing import Any, Iterable, Sequence

from .errors import PlaneFormatError, UncheckedPlaneError
from .reports import VerificationReport

AXIOM_JOIN = "unique_joining_line"
AXIOM_PLAYFAIR = "playfair_parallels"
AXIOM_TRIANGLE = "triangle_existence"


class AffinePlane:
    """Finite incidence structure: points 0..n-1 and lines as point sets."""

    def __init__(self, num_points: int, lines: Iterable[Sequence[int]]):
        self.num_points = int(num_points)
        if self.num_points < 0:
            raise PlaneFormatError("num_points must be non-negative")
        self.lines: list[tuple[int, ...]] = []
        self.line_sets: list[frozenset[int]] = []
        self._line_id: dict[frozenset[int], int] = {}
        for raw in lines:
            pts = [int(p) for p in raw]
            for p in pts:
                if not 0 <= p < self.num_points:
                    raise PlaneFormatError(f"point index {p} out of range [0, {self.num_points})")
            if len(set(pts)) != len(pts):
                raise PlaneFormatError(f"duplicate point in line {pts}")
            if len(pts) < 2:
                raise PlaneFormatError(f"line with < 2 points: {pts}")
            line = tuple(sorted(pts))
            key = frozenset(line)
            if key in self._line_id:
                raise PlaneFormatError(f"duplicate line {list(line)}")
            self._line_id[key] = len(self.lines)
            self.lines.append(line)
            self.line_sets.append(key)

        self.num_lines = len(self.lines)
        self.point_to_lines: list[list[int]] = [[] for _ in range(self.num_points)]
        for lid, line in enumerate(self.lines):
            for p in line:
                self.point_to_lines[p].append(lid)

        # Populated by a successful check_axioms().
        self.parallel_class_of: list[int] | None = None
        self.parallel_classes: list[list[int]] | None = None
        self._joining: list[list[int | None]] | None = None

    # -- structural queries ------------------------------------------------

    @property
    def checked(self) -> bool:
        return self.parallel_class_of is not None

    def line_id(self, points: Iterable[int]) -> int | None:
        """Line id for an exact point set, or None if no such line."""
        return self._line_id.get(frozenset(points))

    def to_dict(self) -> dict[str, Any]:
        """Canonical emission: sorted point lists in lexicographic line order."""
        return {
            "num_points": self.num_points,
            "lines": [list(line) for line in sorted(self.lines)],
        }

    # -- axiom verification ------------------------------------------------

    def check_axioms(self) -> VerificationReport:
        """Verify the three affine-plane axioms; populate directions on success."""
        report = VerificationReport()
        joining: list[list[int | None]] = [
            [None] * self.num_points for _ in range(self.num_points)
        ]

        join_witness = None
        for lid, line in enumerate(self.lines):
            for i, p in enumerate(line):
                for q in line[i + 1 :]:
                    if joining[p][q] is not None:
                        join_witness = {
                            "points": [p, q],
                            "lines": [list(self.lines[joining[p][q]]), list(line)],
                            "reason": "two lines through the same point pair",
                        }
                        break
                    joining[p][q] = joining[q][p] = lid
                if join_witness:
                    break
            if join_witness:
                break
        if join_witness is None:
            for p in range(self.num_points):
                for q in range(p + 1, self.num_points):
                    if joining[p][q] is None:
                        join_witness = {"points": [p, q], "reason": "no line through point pair"}
                        break
                if join_witness:
                    break
        report.add(AXIOM_JOIN, join_witness is None, join_witness)

        playfair_witness = None
        for p in range(self.num_points):
            for lid, lset in enumerate(self.line_sets):
                if p in lset:
                    continue
                parallels = sum(
                    1 for rid in self.point_to_lines[p] if self.line_sets[rid].isdisjoint(lset)
                )
                if parallels != 1:
                    playfair_witness = {
                        "point": p,
                        "line": list(self.lines[lid]),
                        "parallels_through_point": parallels,
                    }
                    break
            if playfair_witness:
                break
        report.add(AXIOM_PLAYFAIR, playfair_witness is None, playfair_witness)

        # Any line together with one point off it yields a non-collinear triple.
        triangle_witness: dict[str, Any] | None = {"reason": "no three non-collinear points"}
        for lset in self.line_sets:
            if any(r not in lset for r in range(self.num_points)):
                triangle_witness = None
                break
        report.add(AXIOM_TRIANGLE, triangle_witness is None, triangle_witness)

        if report.ok:
            self._joining = joining
            self._compute_parallel_classes()
        return report

    def _compute_parallel_classes(self) -> None:
        # With the three axioms verified, parallelism (equal or disjoint) is
        # forced to be transitive, so a greedy sweep yields the partition.
        class_of = [-1] * self.num_lines
        reps: list[int] = []
        classes: list[list[int]] = []
        for lid, lset in enumerate(self.line_sets):
            for cid, rep in enumerate(reps):
                if lset.isdisjoint(self.line_sets[rep]):
                    class_of[lid] = cid
                    classes[cid].append(lid)
                    break
            else:
                class_of[lid] = len(reps)
                reps.append(lid)
                classes.append([lid])
        self.parallel_class_of = class_of
        self.parallel_classes = classes

    def _require_checked(self) -> None:
        if not self.checked:
            raise UncheckedPlaneError("plane axioms have not been verified; call check_axioms()")

    # -- geometric queries (require a verified plane) ------------------------

    def line_through(self, p: int, q: int) -> int:
        """The unique line joining two distinct points."""
        self._require_checked()
        if p == q:
            raise ValueError(f"line_through requires two distinct points, got {p} twice")
        assert self._joining is not None
        lid = self._joining[p][q]
        assert lid is not None
        return lid

    def are_parallel(self, a: int, b: int) -> bool:
        """True iff the lines coincide or share no point."""
        return a == b or self.line_sets[a].isdisjoint(self.line_sets[b])

    def parallel_line_through(self, lid: int, p: int) -> int:
        """The unique line through p in the parallel class of the given line."""
        self._require_checked()
        assert self.parallel_class_of is not None
        cid = self.parallel_class_of[lid]
        for rid in self.point_to_lines[p]:
            if self.parallel_class_of[rid] == cid:
                return rid
        raise UncheckedPlaneError(f"no line of class {cid} through point {p}")  # unreachable

    def meet(self, a: int, b: int) -> int | None:
        """The single common point of two lines, or None."""
        common = self.line_sets[a] & self.line_sets[b]
        if len(common) == 1:
            return next(iter(common))
        return None


def load_plane(data: dict[str, Any]) -> AffinePlane:
    """Build a plane from the incidence JSON document.

    Points within each line are canonicalized to sorted order; the file's
    line order is preserved.  Axioms are *not* asserted here.
    """
    if not isinstance(data, dict):
        raise PlaneFormatError("incidence document must be a JSON object")
    try:
        num_points = data["num_points"]
        lines = data["lines"]
    except (KeyError, TypeError) as exc:
        raise PlaneFormatError("incidence document needs 'num_points' and 'lines'") from exc
    if not isinstance(num_points, int) or isinstance(num_points, bool):
        raise PlaneFormatError("'num_points' must be an integer")
    if not isinstance(lines, list) or not all(isinstance(ln, list) for ln in lines):
        raise PlaneFormatError("'lines' must be a list of point-index lists")
    return AffinePlane(num_points, lines)
