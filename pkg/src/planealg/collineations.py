"""Point bijections, dilations, translations, and their enumeration.

Permutations are dense tuples mapping point id -> point id.  A dilation
sends every line to a parallel line; a translation is a dilation that is
the identity or fixed-point free.  Enumeration is constructive: a dilation
is determined by the images of two points, so candidates are built by the
parallel-line extension method and validated, never by searching all |P|!
bijections (brute force stays in the test suite as an oracle for tiny
planes).

Constructions return ``None`` instead of raising when no valid extension
exists; on a plane whose translations do not act transitively this is the
expected signal, not an error.
"""

from dataclasses import dataclass

from .incidence import AffinePlane

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(f: Perm, g: Perm) -> Perm:
    """f after g: (f . g)(x) = f(g(x))."""
    return tuple(f[x] for x in g)


def inverse(f: Perm) -> Perm:
    out = [0] * len(f)
    for i, fi in enumerate(f):
        out[fi] = i
    return tuple(out)


def is_permutation(f: Perm, n: int) -> bool:
    return len(f) == n and len(set(f)) == n and all(0 <= x < n for x in f)


@dataclass(frozen=True)
class Dilation:
    """A line-to-parallel-line collineation with its fixed points cached."""

    perm: Perm
    fixed_points: tuple[int, ...]

    @property
    def is_identity(self) -> bool:
        return len(self.fixed_points) == len(self.perm)


@dataclass(frozen=True)
class Translation:
    """Identity or fixed-point-free dilation; direction is the shared
    parallel class of its traces (None exactly for the identity)."""

    dilation: Dilation
    direction: int | None

    @property
    def perm(self) -> Perm:
        return self.dilation.perm

    @property
    def is_identity(self) -> bool:
        return self.direction is None


def is_collineation(plane: AffinePlane, f: Perm) -> bool:
    """True iff the image of every line is again a line."""
    if not is_permutation(f, plane.num_points):
        return False
    return all(plane.line_id(f[p] for p in line) is not None for line in plane.lines)


def classify_dilation(plane: AffinePlane, f: Perm) -> Dilation | None:
    """Dilation with cached fixed points, or None.

    Checks that every line maps onto a line of its own parallel class;
    with the axioms verified this is equivalent to the pairwise condition
    line(f(P), f(Q)) parallel to line(P, Q) for all P != Q.
    """
    plane._require_checked()
    if not is_permutation(f, plane.num_points):
        return None
    class_of = plane.parallel_class_of
    assert class_of is not None
    for lid, line in enumerate(plane.lines):
        image = plane.line_id(f[p] for p in line)
        if image is None or class_of[image] != class_of[lid]:
            return None
    fixed = tuple(p for p, fp in enumerate(f) if fp == p)
    return Dilation(f, fixed)


def classify_translation(plane: AffinePlane, d: Dilation) -> Translation | None:
    """Translation iff d is the identity or has no fixed point."""
    if d.is_identity:
        return Translation(d, None)
    if d.fixed_points:
        return None
    assert plane.parallel_class_of is not None
    trace = plane.line_through(0, d.perm[0])
    return Translation(d, plane.parallel_class_of[trace])


def trace_line(plane: AffinePlane, d: Dilation, p: int) -> int | None:
    """Line joining p to its image, or None when p is fixed."""
    if d.perm[p] == p:
        return None
    return plane.line_through(p, d.perm[p])


def _validated_translation(plane: AffinePlane, image: list[int | None]) -> Translation | None:
    if any(x is None for x in image):
        return None
    perm = tuple(image)  # type: ignore[arg-type]
    dil = classify_dilation(plane, perm)
    if dil is None:
        return None
    return classify_translation(plane, dil)


def extend_translation(plane: AffinePlane, p: int, q: int) -> Translation | None:
    """The unique translation mapping p to q, when one exists.

    For a point R off line(p, q) the image is forced: it lies on the
    parallel to line(p, q) through R (the trace) and on the parallel to
    line(p, R) through q (the image line).  Points on line(p, q) are then
    extended the same way from an already-determined off-line point.
    Returns None when an intersection degenerates or validation fails,
    which witnesses a plane that is not translation-transitive for (p, q).
    """
    plane._require_checked()
    n = plane.num_points
    if p == q:
        dil = Dilation(identity_perm(n), tuple(range(n)))
        return Translation(dil, None)

    base = plane.line_through(p, q)
    base_set = plane.line_sets[base]
    image: list[int | None] = [None] * n
    image[p] = q

    anchor: int | None = None  # an off-line point with a computed image
    for r in range(n):
        if r in base_set:
            continue
        trace = plane.parallel_line_through(base, r)
        carrier = plane.parallel_line_through(plane.line_through(p, r), q)
        image[r] = plane.meet(trace, carrier)
        if image[r] is None:
            return None
        if anchor is None:
            anchor = r

    if anchor is None:
        return None  # every point is on line(p, q); not a plane we ever see
    anchor_image = image[anchor]
    assert anchor_image is not None
    for r in sorted(base_set):
        if r == p:
            continue
        carrier = plane.parallel_line_through(plane.line_through(anchor, r), anchor_image)
        image[r] = plane.meet(base, carrier)
        if image[r] is None:
            return None

    result = _validated_translation(plane, image)
    if result is not None and result.perm[p] != q:
        return None
    return result


def extend_dilation_fixing(plane: AffinePlane, p: int, q: int, q2: int) -> Dilation | None:
    """The unique dilation fixing p with q -> q2, when one exists.

    Traces of a dilation with a fixed point all pass through it, so q2 must
    lie on line(p, q); images of off-line points are forced as the meet of
    their trace through p with the parallel to line(q, R) through q2.
    """
    plane._require_checked()
    if q == p:
        raise ValueError("the moved point must differ from the fixed point")
    base = plane.line_through(p, q)
    base_set = plane.line_sets[base]
    if q2 not in base_set:
        raise ValueError("the image of the moved point must stay on its trace through the fixed point")
    if q2 == p:
        return None  # would collapse q onto the fixed point
    n = plane.num_points
    if q2 == q:
        return Dilation(identity_perm(n), tuple(range(n)))

    image: list[int | None] = [None] * n
    image[p] = p
    image[q] = q2
    anchor: int | None = None
    for r in range(n):
        if r in base_set:
            continue
        carrier = plane.parallel_line_through(plane.line_through(q, r), q2)
        image[r] = plane.meet(plane.line_through(p, r), carrier)
        if image[r] is None:
            return None
        if anchor is None:
            anchor = r
    if anchor is None:
        return None
    anchor_image = image[anchor]
    assert anchor_image is not None
    for r in sorted(base_set):
        if r == p or r == q:
            continue
        carrier = plane.parallel_line_through(plane.line_through(anchor, r), anchor_image)
        image[r] = plane.meet(base, carrier)
        if image[r] is None:
            return None

    if any(x is None for x in image):
        return None
    perm = tuple(image)  # type: ignore[arg-type]
    dil = classify_dilation(plane, perm)
    if dil is None or p not in dil.fixed_points or dil.perm[q] != q2:
        return None
    return dil


def enumerate_translations(plane: AffinePlane, base_point: int = 0) -> list[Translation]:
    """All translations, as extensions of base_point -> Q over every Q.

    Complete even on non-transitive planes: a translation is determined by
    its value at one point, so each one appears for Q = its image of the
    base point.  Sorted by permutation, which puts the identity first.
    """
    found = [extend_translation(plane, base_point, q) for q in range(plane.num_points)]
    return sorted((t for t in found if t is not None), key=lambda t: t.perm)


def dilations_fixing(plane: AffinePlane, center: int) -> list[Dilation]:
    """All dilations fixing the given point, identity included."""
    plane._require_checked()
    moved = next(r for r in range(plane.num_points) if r != center)
    trace = plane.line_sets[plane.line_through(center, moved)]
    out = []
    for q2 in sorted(trace):
        if q2 == center:
            continue
        dil = extend_dilation_fixing(plane, center, moved, q2)
        if dil is not None:
            out.append(dil)
    return sorted(out, key=lambda d: d.perm)


def enumerate_dilations(plane: AffinePlane, base_point: int = 0) -> list[Dilation]:
    """Dilations as translations composed with base-point stabilizers,
    closed under composition.

    Complete whenever the translations act transitively (then every
    dilation factors through the stabilizer of the base point); on other
    planes the result is still a composition-closed set of dilations.
    """
    translations = enumerate_translations(plane, base_point)
    stabilizer = dilations_fixing(plane, base_point)
    seen: dict[Perm, Dilation] = {}

    def register(perm: Perm) -> None:
        if perm not in seen:
            dil = classify_dilation(plane, perm)
            assert dil is not None, "composition of dilations must be a dilation"
            seen[perm] = dil

    for t in translations:
        for d in stabilizer:
            register(compose(t.perm, d.perm))
    while True:
        perms = list(seen)
        new = [
            h
            for f in perms
            for g in perms
            if (h := compose(f, g)) not in seen
        ]
        if not new:
            break
        for h in new:
            register(h)
    return sorted(seen.values(), key=lambda d: d.perm)
