"""Generation and verification of the trace-preserving endomorphism algebra.

The generated set is {zero} plus one conjugation map per dilation fixing a
chosen base point.  Dilation recovery inverts that correspondence: given a
nonzero trace-preserving endomorphism a, the dilation d with
a(s) = d . s . d^-1 is reconstructed pointwise as
d(Q) = [a(translation taking P to Q)](P), then every postcondition is
re-checked rather than trusted; the validation is the machine-checked
content of the uniqueness argument.  Multiplicative inverses come out of
the recovered dilation's opposite-orientation conjugation map.

``brute_force_trace_preserving`` is an independent oracle: it enumerates
every group endomorphism from generator images through the Cayley table
and filters by the direction predicate, never touching geometry.
"""

from dataclasses import dataclass
from itertools import product

from .collineations import Dilation, classify_dilation, compose, dilations_fixing, inverse
from .endos import (
    Endo,
    endo_add,
    endo_compose,
    endo_conjugation,
    endo_negate,
    endo_one,
    endo_zero,
    is_group_endomorphism,
    is_trace_preserving,
)
from .errors import ClosureError, RecoveryError
from .incidence import AffinePlane
from .reports import VerificationReport
from .trgroup import TranslationGroup

_ORACLE_MAX_ORDER = 25
_ORACLE_MAX_GENERATORS = 4


@dataclass(frozen=True)
class EndoAlgebra:
    """The generated trace-preserving set with element 0 = zero, 1 = one.

    ``provenance[i]`` is the base-point-fixing dilation whose conjugation
    map produced element i (None for the zero map).
    """

    elements: tuple[Endo, ...]
    provenance: tuple[Dilation | None, ...]
    base_point: int

    @property
    def zero(self) -> Endo:
        return self.elements[0]

    @property
    def one(self) -> Endo:
        return self.elements[1]

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, e: Endo) -> int:
        return self.elements.index(e)

    def addition_table(self, group: TranslationGroup) -> list[list[int]]:
        return [
            [self.index_of(endo_add(group, a, b)) for b in self.elements]
            for a in self.elements
        ]

    def multiplication_table(self, group: TranslationGroup) -> list[list[int]]:
        return [
            [self.index_of(endo_compose(group, a, b)) for b in self.elements]
            for a in self.elements
        ]


def generate_trace_preserving(
    plane: AffinePlane, group: TranslationGroup, base_point: int = 0
) -> EndoAlgebra:
    """Generate the algebra from the dilations fixing a base point.

    Requires a point-transitive translation group (the construction of
    inverses relies on it).  The element *set* does not depend on the base
    point; the provenance dilations do.
    """
    if not group.is_transitive:
        pair = group.missing_pair()
        assert pair is not None
        raise ValueError(
            f"translation group is not point-transitive: no translation takes {pair[0]} to {pair[1]}"
        )

    zero = endo_zero(group)
    by_endo: dict[Endo, Dilation] = {}
    for d in dilations_fixing(plane, base_point):
        by_endo.setdefault(endo_conjugation(group, d), d)

    one = endo_one(group)
    if one not in by_endo:
        raise ClosureError("identity dilation did not produce the unit element")
    rest = sorted((e for e in by_endo if e != one), key=lambda e: e.image)
    elements = (zero, one, *rest)
    provenance = (None, by_endo[one], *(by_endo[e] for e in rest))
    algebra = EndoAlgebra(elements=elements, provenance=provenance, base_point=base_point)
    _assert_closure(group, algebra)
    return algebra


def _assert_closure(group: TranslationGroup, algebra: EndoAlgebra) -> None:
    members = set(algebra.elements)
    for e in algebra.elements:
        if not is_group_endomorphism(group, e) or not is_trace_preserving(group, e):
            raise ClosureError("generated element is not a trace-preserving endomorphism")
        if endo_negate(group, e) not in members:
            raise ClosureError("generated set is not closed under negation")
    for a in algebra.elements:
        for b in algebra.elements:
            if endo_add(group, a, b) not in members:
                raise ClosureError("generated set is not closed under addition")
            if endo_compose(group, a, b) not in members:
                raise ClosureError("generated set is not closed under composition")


def _generator_chain(group: TranslationGroup) -> tuple[list[int], list[tuple[int, int, int]]]:
    """Greedy minimal generators plus a derivation chain for the whole group.

    The chain lists (element, left, right) triples with element =
    left . right, each element derived exactly once from already-known
    factors, so any assignment of generator images extends to a candidate
    table by replaying cayley[img[left]][img[right]].
    """
    n = group.order
    generators: list[int] = []
    chain: list[tuple[int, int, int]] = []
    known = {0}
    while len(known) < n:
        g = next(i for i in range(n) if i not in known)
        generators.append(g)
        known.add(g)
        grew = True
        while grew:
            grew = False
            for f in sorted(known):
                for h in sorted(known):
                    e = group.cayley[f][h]
                    if e not in known:
                        known.add(e)
                        chain.append((e, f, h))
                        grew = True
    return generators, chain


def brute_force_trace_preserving(group: TranslationGroup) -> list[Endo]:
    """Oracle: all trace-preserving group endomorphisms, by exhaustion.

    Every assignment of images to a minimal generating set is replayed
    through the Cayley table, kept only if the full homomorphism law holds,
    then filtered by the direction predicate.  Bounded to desk scale.
    """
    n = group.order
    if n > _ORACLE_MAX_ORDER:
        raise ValueError(f"group order {n} exceeds the brute-force bound {_ORACLE_MAX_ORDER}")
    generators, chain = _generator_chain(group)
    if len(generators) > _ORACLE_MAX_GENERATORS:
        raise ValueError(
            f"{len(generators)} generators exceed the brute-force bound {_ORACLE_MAX_GENERATORS}"
        )

    cayley = group.cayley
    dirs = group.direction_of
    found = []
    for images in product(range(n), repeat=len(generators)):
        table = [0] * n
        for g, img in zip(generators, images):
            table[g] = img
        for e, f, h in chain:
            table[e] = cayley[table[f]][table[h]]
        ok = True
        for i in range(n):
            row = cayley[i]
            ti = table[i]
            for j in range(n):
                if table[row[j]] != cayley[ti][table[j]]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        if all(table[i] == 0 or dirs[table[i]] == dirs[i] for i in range(1, n)):
            found.append(Endo(tuple(table)))
    return sorted(found, key=lambda e: e.image)


def recover_dilation(
    plane: AffinePlane, group: TranslationGroup, a: Endo, base_point: int = 0
) -> Dilation:
    """The unique dilation d fixing base_point with a(s) = d . s . d^-1.

    Built pointwise from the taking table, then validated in full: the map
    must be a bijection, a dilation, fix the base point, and satisfy the
    conjugation identity for every group element.  Violations raise
    :class:`RecoveryError`; the zero map is rejected up front because only
    a collapsed, non-bijective map could represent it.
    """
    if a == endo_zero(group):
        raise ValueError("the zero endomorphism is not induced by any dilation")
    n = plane.num_points
    image = []
    for q in range(n):
        t = group.taking_index(base_point, q)
        if t is None:
            raise RecoveryError(
                f"translation group is not transitive: nothing takes {base_point} to {q}"
            )
        image.append(group.elements[a(t)].perm[base_point])
    if len(set(image)) != n:
        raise RecoveryError("recovered map is not a bijection")
    perm = tuple(image)

    dil = classify_dilation(plane, perm)
    if dil is None:
        raise RecoveryError("recovered map is not a dilation")
    if perm[base_point] != base_point:
        raise RecoveryError("recovered dilation does not fix the base point")
    d_inv = inverse(perm)
    for i, t in enumerate(group.elements):
        conj = group.index_of.get(compose(compose(perm, t.perm), d_inv))
        if conj != a(i):
            raise RecoveryError(f"conjugation identity fails on element {i}")
    return dil


def invert(plane: AffinePlane, group: TranslationGroup, a: Endo) -> Endo:
    """Two-sided multiplicative inverse of a nonzero trace-preserving endo.

    The recovered dilation conjugates in one orientation; its conjugation
    map in the opposite orientation is the inverse, and both compositions
    are re-checked against the unit before returning.
    """
    if a == endo_zero(group):
        raise ZeroDivisionError("the zero endomorphism has no multiplicative inverse")
    d = recover_dilation(plane, group, a, base_point=0)
    b = endo_conjugation(group, d)
    one = endo_one(group)
    if endo_compose(group, a, b) != one or endo_compose(group, b, a) != one:
        raise RecoveryError("recovered conjugation map is not a two-sided inverse")
    return b


def _sweep(report: VerificationReport, name: str, witnesses) -> None:
    """Record a check that passes iff the witness generator is empty."""
    w = next(witnesses, None)
    report.add(name, w is None, w)


def verify_skew_field(
    plane: AffinePlane, group: TranslationGroup, algebra: EndoAlgebra
) -> VerificationReport:
    """Full skew-field verification over the generated set.

    Covers the abelian additive group, the associative unitary ring laws
    with two-sided distributivity, absence of zero divisors, and a verified
    two-sided inverse inside the set for every nonzero element, plus the
    dilation-recovery round trip that backs the inverse construction.
    """
    report = VerificationReport()
    elems = algebra.elements
    members = set(elems)
    m = len(elems)
    zero, one = algebra.zero, algebra.one
    rng = range(m)

    def add(i: int, j: int) -> Endo:
        return endo_add(group, elems[i], elems[j])

    def mul(i: int, j: int) -> Endo:
        return endo_compose(group, elems[i], elems[j])

    _sweep(report, "elements_are_trace_preserving_endos", (
        {"element": i}
        for i, e in enumerate(elems)
        if not is_group_endomorphism(group, e) or not is_trace_preserving(group, e)
    ))
    _sweep(report, "additive_closure", (
        {"pair": [i, j]} for i in rng for j in rng if add(i, j) not in members
    ))
    _sweep(report, "additive_commutativity", (
        {"pair": [i, j]} for i in rng for j in rng if add(i, j) != add(j, i)
    ))
    _sweep(report, "additive_associativity", (
        {"triple": [i, j, k]}
        for i in rng for j in rng for k in rng
        if endo_add(group, add(i, j), elems[k]) != endo_add(group, elems[i], add(j, k))
    ))
    _sweep(report, "additive_identity", (
        {"element": i}
        for i, x in enumerate(elems)
        if endo_add(group, x, zero) != x or endo_add(group, zero, x) != x
    ))
    _sweep(report, "additive_inverses", (
        {"element": i}
        for i, x in enumerate(elems)
        if endo_negate(group, x) not in members
        or endo_add(group, x, endo_negate(group, x)) != zero
    ))

    _sweep(report, "multiplicative_closure", (
        {"pair": [i, j]} for i in rng for j in rng if mul(i, j) not in members
    ))
    _sweep(report, "multiplicative_associativity", (
        {"triple": [i, j, k]}
        for i in rng for j in rng for k in rng
        if endo_compose(group, mul(i, j), elems[k]) != endo_compose(group, elems[i], mul(j, k))
    ))
    _sweep(report, "multiplicative_identity", (
        {"element": i}
        for i, x in enumerate(elems)
        if endo_compose(group, x, one) != x or endo_compose(group, one, x) != x
    ))
    _sweep(report, "left_distributivity", (
        {"triple": [i, j, k]}
        for i in rng for j in rng for k in rng
        if endo_compose(group, elems[i], add(j, k)) != endo_add(group, mul(i, j), mul(i, k))
    ))
    # Right distributivity is the side where trace preservation genuinely
    # enters, so it gets its own sweep instead of being assumed symmetric.
    _sweep(report, "right_distributivity", (
        {"triple": [i, j, k]}
        for i in rng for j in rng for k in rng
        if endo_compose(group, add(i, j), elems[k]) != endo_add(group, mul(i, k), mul(j, k))
    ))

    report.add("one_not_zero", one != zero, {"reason": "unit equals zero"})

    _sweep(report, "no_zero_divisors", (
        {"pair": [i, j]} for i in range(1, m) for j in range(1, m) if mul(i, j) == zero
    ))

    witness = None
    for i in range(1, m):
        try:
            inv_i = invert(plane, group, elems[i])
        except (RecoveryError, ZeroDivisionError) as exc:
            witness = {"element": i, "reason": str(exc)}
            break
        if inv_i not in members:
            witness = {"element": i, "reason": "inverse escapes the generated set"}
            break
    report.add("multiplicative_inverses", witness is None, witness)

    witness = None
    for i, d in enumerate(algebra.provenance):
        if d is None:
            continue
        # The element produced by d conjugates one way; recovery inverts the
        # opposite orientation, so feed it the inverse dilation's map.
        forward = endo_conjugation(group, _inverse_dilation(d))
        try:
            recovered = recover_dilation(plane, group, forward, algebra.base_point)
        except (RecoveryError, ValueError) as exc:
            witness = {"element": i, "reason": str(exc)}
            break
        if recovered.perm != d.perm:
            witness = {"element": i, "reason": "round trip returned a different dilation"}
            break
    report.add("dilation_recovery_roundtrip", witness is None, witness)

    return report


def _inverse_dilation(d: Dilation) -> Dilation:
    return Dilation(inverse(d.perm), d.fixed_points)


def check_commutativity(group: TranslationGroup, algebra: EndoAlgebra) -> tuple[bool, dict | None]:
    """Diagnostic only: multiplication of the verified set need not commute
    in general, though it does on every desk-scale instance."""
    for i, x in enumerate(algebra.elements):
        for j, y in enumerate(algebra.elements):
            if endo_compose(group, x, y) != endo_compose(group, y, x):
                return False, {"pair": [i, j]}
    return True, None
