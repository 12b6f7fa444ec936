"""The translation group as an explicit finite group.

Elements are indexed with the identity at 0; composition, inversion and
the point-to-point "taking" lookup are all materialized tables so that the
endomorphism layer never touches geometry again.  The verification sweeps
for the group-theoretic facts (commutativity, normality inside the
dilation group, direction behaviour under conjugation and composition)
each return a witness-carrying report.
"""

import random
from dataclasses import dataclass

from .collineations import Dilation, Translation, compose, inverse
from .errors import ClosureError
from .incidence import AffinePlane
from .reports import VerificationReport

_ASSOC_EXHAUSTIVE_MAX = 16
_ASSOC_SAMPLES = 10_000
_ASSOC_SEED = 0x5EED


@dataclass
class TranslationGroup:
    plane: AffinePlane
    elements: tuple[Translation, ...]
    cayley: tuple[tuple[int, ...], ...]
    inverse_of: tuple[int, ...]
    taking: tuple[tuple[int | None, ...], ...]
    direction_of: tuple[int | None, ...]
    index_of: dict[tuple[int, ...], int]

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        """Index of elements[i] composed after elements[j]."""
        return self.cayley[i][j]

    def inv(self, i: int) -> int:
        return self.inverse_of[i]

    def taking_index(self, r: int, q: int) -> int | None:
        """Index of the unique translation mapping point r to q, if any."""
        return self.taking[r][q]

    @property
    def is_transitive(self) -> bool:
        return all(t is not None for row in self.taking for t in row)

    def missing_pair(self) -> tuple[int, int] | None:
        for r, row in enumerate(self.taking):
            for q, t in enumerate(row):
                if t is None:
                    return r, q
        return None


def translation_taking(group: TranslationGroup, r: int, q: int) -> int | None:
    return group.taking_index(r, q)


def build_translation_group(plane: AffinePlane, translations: list[Translation]) -> TranslationGroup:
    """Index the translations and materialize all tables.

    Raises :class:`ClosureError` naming the offending pair if the list is
    not closed under composition or misses an inverse, which would signal
    an enumeration bug (translations of any plane do form a group).
    """
    elements = tuple(sorted(translations, key=lambda t: t.perm))
    n = len(elements)
    if n == 0 or not elements[0].is_identity:
        raise ClosureError("translation list must contain the identity")
    index_of = {t.perm: i for i, t in enumerate(elements)}
    if len(index_of) != n:
        raise ClosureError("duplicate translations in input")

    cayley_rows = []
    for i, ti in enumerate(elements):
        row = []
        for j, tj in enumerate(elements):
            k = index_of.get(compose(ti.perm, tj.perm))
            if k is None:
                raise ClosureError(f"composition of elements {i} and {j} is not in the set")
            row.append(k)
        cayley_rows.append(tuple(row))
    cayley = tuple(cayley_rows)

    inverse_of = []
    for i, t in enumerate(elements):
        k = index_of.get(inverse(t.perm))
        if k is None:
            raise ClosureError(f"inverse of element {i} is not in the set")
        inverse_of.append(k)

    num_points = plane.num_points
    taking_rows: list[list[int | None]] = [[None] * num_points for _ in range(num_points)]
    for i, t in enumerate(elements):
        for r in range(num_points):
            q = t.perm[r]
            if taking_rows[r][q] is not None:
                raise ClosureError(f"elements {taking_rows[r][q]} and {i} agree at point {r}")
            taking_rows[r][q] = i

    _check_associativity(cayley)

    return TranslationGroup(
        plane=plane,
        elements=elements,
        cayley=cayley,
        inverse_of=tuple(inverse_of),
        taking=tuple(tuple(row) for row in taking_rows),
        direction_of=tuple(t.direction for t in elements),
        index_of=index_of,
    )


def _check_associativity(cayley: tuple[tuple[int, ...], ...]) -> None:
    # Exhaustive at desk scale, seeded spot-samples beyond it.
    n = len(cayley)
    if n <= _ASSOC_EXHAUSTIVE_MAX:
        triples = (
            (i, j, k) for i in range(n) for j in range(n) for k in range(n)
        )
    else:
        rng = random.Random(_ASSOC_SEED)
        triples = (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            for _ in range(_ASSOC_SAMPLES)
        )
    for i, j, k in triples:
        if cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]]:
            raise ClosureError(f"associativity failed on triple {(i, j, k)}")


def verify_abelian(group: TranslationGroup) -> VerificationReport:
    """Cayley-table symmetry; witness pair on failure."""
    report = VerificationReport()
    witness = None
    for i in range(group.order):
        for j in range(i + 1, group.order):
            if group.cayley[i][j] != group.cayley[j][i]:
                witness = {"pair": [i, j]}
                break
        if witness:
            break
    report.add("abelian", witness is None, witness)
    return report


def verify_normal_in_dilations(
    plane: AffinePlane, group: TranslationGroup, dilations: list[Dilation]
) -> VerificationReport:
    """Every conjugate of a translation by a dilation is again a translation."""
    report = VerificationReport()
    witness = None
    for di, d in enumerate(dilations):
        d_inv = inverse(d.perm)
        for ti, t in enumerate(group.elements):
            conj = compose(compose(d_inv, t.perm), d.perm)
            if conj not in group.index_of:
                witness = {"dilation": di, "translation": ti}
                break
        if witness:
            break
    report.add("normal_in_dilations", witness is None, witness)
    return report


def verify_conjugation_direction(
    plane: AffinePlane, group: TranslationGroup, dilations: list[Dilation]
) -> VerificationReport:
    """Conjugation by a dilation preserves the direction of a translation."""
    report = VerificationReport()
    witness = None
    for di, d in enumerate(dilations):
        d_inv = inverse(d.perm)
        for ti, t in enumerate(group.elements):
            if t.is_identity:
                continue
            conj = group.index_of.get(compose(compose(d_inv, t.perm), d.perm))
            if conj is None or group.direction_of[conj] != group.direction_of[ti]:
                witness = {
                    "dilation": di,
                    "translation": ti,
                    "direction": group.direction_of[ti],
                    "conjugate_direction": None if conj is None else group.direction_of[conj],
                }
                break
        if witness:
            break
    report.add("conjugation_preserves_direction", witness is None, witness)
    return report


def verify_direction_closure(group: TranslationGroup) -> VerificationReport:
    """Composites of same-direction translations stay in the class or vanish."""
    report = VerificationReport()
    witness = None
    for i in range(1, group.order):
        for j in range(1, group.order):
            if group.direction_of[i] != group.direction_of[j]:
                continue
            k = group.cayley[i][j]
            if k != 0 and group.direction_of[k] != group.direction_of[i]:
                witness = {
                    "pair": [i, j],
                    "direction": group.direction_of[i],
                    "composite_direction": group.direction_of[k],
                }
                break
        if witness:
            break
    report.add("direction_closure", witness is None, witness)
    return report
