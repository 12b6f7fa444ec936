"""Self-maps of a translation group and their algebra.

An :class:`Endo` is a dense index table over a fixed group; equality is
table equality, which keeps the skew-field verification decidable and
cheap.  The convention image[0] = 0 (the identity translation maps to
itself) is enforced at construction.

Addition is pointwise composition of images, multiplication is table
composition; together with zero, one, negation, the inversion map and the
conjugation maps induced by dilations this realizes the whole algebra the
verification layer works with.
"""

from dataclasses import dataclass
from typing import Any

from .collineations import Dilation, compose, inverse
from .errors import ClosureError
from .trgroup import TranslationGroup


@dataclass(frozen=True)
class Endo:
    """Self-map of a translation group, stored index-to-index."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.image or self.image[0] != 0:
            raise ValueError("a group self-map must fix the identity (image[0] = 0)")

    def __call__(self, i: int) -> int:
        return self.image[i]


def homomorphism_witness(group: TranslationGroup, a: Endo) -> tuple[int, int] | None:
    """First index pair violating the homomorphism law, or None."""
    cayley, img = group.cayley, a.image
    for i in range(group.order):
        for j in range(group.order):
            if img[cayley[i][j]] != cayley[img[i]][img[j]]:
                return i, j
    return None


def is_group_endomorphism(group: TranslationGroup, a: Endo) -> bool:
    """Homomorphism law over all index pairs, by Cayley lookups."""
    return homomorphism_witness(group, a) is None


def trace_witness(group: TranslationGroup, a: Endo) -> int | None:
    """First element whose direction the map fails to preserve, or None.

    The identity translation has no direction, so the condition is stated
    over the non-identity elements and an image of 0 passes vacuously;
    this is exactly what makes the zero map trace-preserving.
    """
    dirs = group.direction_of
    for i in range(1, group.order):
        if a.image[i] != 0 and dirs[a.image[i]] != dirs[i]:
            return i
    return None


def is_trace_preserving(group: TranslationGroup, a: Endo) -> bool:
    """Directions survive, with images collapsing to the identity allowed."""
    return trace_witness(group, a) is None


def endo_zero(group: TranslationGroup) -> Endo:
    return Endo((0,) * group.order)


def endo_one(group: TranslationGroup) -> Endo:
    return Endo(tuple(range(group.order)))


def endo_add(group: TranslationGroup, a: Endo, b: Endo) -> Endo:
    """(a + b)(s) = a(s) composed with b(s)."""
    cayley = group.cayley
    return Endo(tuple(cayley[x][y] for x, y in zip(a.image, b.image)))


def endo_compose(group: TranslationGroup, a: Endo, b: Endo) -> Endo:
    """(a . b)(s) = a(b(s))."""
    return Endo(tuple(a.image[x] for x in b.image))


def endo_negate(group: TranslationGroup, a: Endo) -> Endo:
    """(-a)(s) = a(s)^-1, the additive inverse."""
    inv = group.inverse_of
    return Endo(tuple(inv[x] for x in a.image))


def endo_inversion(group: TranslationGroup) -> Endo:
    """The map s -> s^-1; an endomorphism because the group is abelian,
    and trace-preserving because a translation shares its inverse's traces."""
    result = Endo(tuple(group.inverse_of))
    if not is_group_endomorphism(group, result) or not is_trace_preserving(group, result):
        raise ClosureError("inversion map is not a trace-preserving endomorphism; group is corrupt")
    return result


def endo_to_dict(group: TranslationGroup, a: Endo) -> dict[str, Any]:
    """Interchange form: {"group_order": n, "image": [...]}."""
    return {"group_order": group.order, "image": list(a.image)}


def endo_from_dict(group: TranslationGroup, doc: dict[str, Any]) -> Endo:
    """Parse the interchange form against a concrete group."""
    try:
        order = doc["group_order"]
        image = doc["image"]
    except (KeyError, TypeError) as exc:
        raise ValueError("endomorphism document needs 'group_order' and 'image'") from exc
    if order != group.order:
        raise ValueError(f"document is for a group of order {order}, not {group.order}")
    if len(image) != group.order or not all(
        isinstance(x, int) and 0 <= x < group.order for x in image
    ):
        raise ValueError("'image' must list a group index for every element")
    return Endo(tuple(image))


def endo_conjugation(group: TranslationGroup, d: Dilation) -> Endo:
    """The map s -> d^-1 . s . d induced by a dilation.

    Lands inside the group because translations are normal in dilations;
    a conjugate falling outside signals a broken enumeration and raises.
    """
    d_inv = inverse(d.perm)
    image = []
    for i, t in enumerate(group.elements):
        k = group.index_of.get(compose(compose(d_inv, t.perm), d.perm))
        if k is None:
            raise ClosureError(f"conjugate of translation {i} left the enumerated group")
        image.append(k)
    result = Endo(tuple(image))
    if not is_trace_preserving(group, result):
        raise ClosureError("conjugation by a dilation must preserve directions")
    return result
