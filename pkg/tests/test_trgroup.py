"""Translation group tables and the group-theoretic verification sweeps."""

import dataclasses
import itertools

import pytest

from planealg import (
    ClosureError,
    build_translation_group,
    enumerate_dilations,
    enumerate_translations,
    identity_perm,
    point_id,
    translation_taking,
    verify_abelian,
    verify_conjugation_direction,
    verify_direction_closure,
    verify_normal_in_dilations,
)
from conftest import shift_perm


def element_order(group, i):
    acc, n = i, 1
    while acc != 0:
        acc = group.mul(acc, i)
        n += 1
    return n


def test_identity_first_and_sorted(make_group):
    for q in (2, 3, 4, 5):
        group = make_group(q)
        assert group.elements[0].perm == identity_perm(q * q)
        perms = [t.perm for t in group.elements]
        assert perms == sorted(perms)


def test_ag22_is_klein_four(make_group):
    group = make_group(2)
    assert group.order == 4
    assert all(element_order(group, i) == 2 for i in range(1, 4))


def test_ag23_has_exponent_3(make_group):
    group = make_group(3)
    assert group.order == 9
    assert all(element_order(group, i) == 3 for i in range(1, 9))


def test_ag24_has_exponent_2(make_group):
    group = make_group(4)
    assert group.order == 16
    assert all(element_order(group, i) == 2 for i in range(1, 16))


def test_group_axioms_exhaustively(make_group):
    for q in (2, 3, 4):
        group = make_group(q)
        n = group.order
        for i in range(n):
            assert group.mul(0, i) == i == group.mul(i, 0)
            assert group.mul(i, group.inv(i)) == 0
            for j in range(n):
                for k in range(n):
                    assert group.mul(group.mul(i, j), k) == group.mul(i, group.mul(j, k))


def test_build_rejects_non_closed_input(make_plane):
    plane = make_plane(2)
    translations = enumerate_translations(plane)
    with pytest.raises(ClosureError):
        build_translation_group(plane, translations[:-1])


def test_build_requires_identity(make_plane):
    plane = make_plane(2)
    translations = enumerate_translations(plane)
    with pytest.raises(ClosureError, match="identity"):
        build_translation_group(plane, translations[1:])


@pytest.mark.parametrize("q", [3, 5])
def test_verify_abelian_passes(q, make_group):
    assert verify_abelian(make_group(q)).ok


def test_verify_abelian_fails_on_tampered_table(make_group):
    group = make_group(3)
    rows = [list(r) for r in group.cayley]
    rows[1][2] = rows[1][1]  # break symmetry at (1, 2)
    bad = dataclasses.replace(group, cayley=tuple(tuple(r) for r in rows))
    report = verify_abelian(bad)
    assert not report.ok
    assert report["abelian"].witness == {"pair": [1, 2]}


def test_taking_identity_case(make_group):
    group = make_group(3)
    for r in range(9):
        assert translation_taking(group, r, r) == 0


def test_taking_example(make_group, make_field):
    group = make_group(3)
    idx = translation_taking(group, point_id(3, 0, 0), point_id(3, 2, 1))
    assert idx is not None
    assert group.elements[idx].perm == shift_perm(make_field(3), 2, 1)


def test_taking_total_on_coordinate_planes(make_group):
    for q in (2, 3, 4, 5):
        group = make_group(q)
        assert group.is_transitive
        assert group.missing_pair() is None
        for r in range(q * q):
            for target in range(q * q):
                idx = translation_taking(group, r, target)
                assert group.elements[idx].perm[r] == target


def test_taking_agrees_with_extension(make_plane, make_group):
    plane, group = make_plane(3), make_group(3)
    from planealg import extend_translation

    for r in range(9):
        for target in range(9):
            idx = translation_taking(group, r, target)
            assert group.elements[idx].perm == extend_translation(plane, r, target).perm


@pytest.mark.parametrize("q", [2, 3, 4])
def test_normality_and_direction_sweeps(q, make_plane, make_group):
    plane, group = make_plane(q), make_group(q)
    dilations = enumerate_dilations(plane)
    assert verify_normal_in_dilations(plane, group, dilations).ok
    assert verify_conjugation_direction(plane, group, dilations).ok
    assert verify_direction_closure(group).ok


def test_direction_closure_detects_injected_violation(make_group):
    group = make_group(3)
    # Pretend two translations of genuinely different directions share one;
    # their composite then exposes the inconsistency.
    dirs = list(group.direction_of)
    donor = next(i for i in range(1, 9) if dirs[i] != dirs[1])
    dirs[donor] = dirs[1]
    bad = dataclasses.replace(group, direction_of=tuple(dirs))
    assert not verify_direction_closure(bad).ok


def test_same_direction_elements_form_subgroups(make_group):
    for q in (2, 3, 4, 5):
        group = make_group(q)
        by_direction = {}
        for i in range(1, group.order):
            by_direction.setdefault(group.direction_of[i], []).append(i)
        assert all(len(members) == q - 1 for members in by_direction.values())
        for members in by_direction.values():
            closure = {0, *members}
            for i, j in itertools.product(members, repeat=2):
                assert group.mul(i, j) in closure
            assert all(group.inv(i) in closure for i in members)


def test_group_order_equals_point_count(make_plane, make_group):
    for q in (2, 3, 4, 5):
        assert make_group(q).order == make_plane(q).num_points


def test_group_from_rotated_base_point_has_same_elements(make_plane):
    plane = make_plane(3)
    a = build_translation_group(plane, enumerate_translations(plane, base_point=0))
    b = build_translation_group(plane, enumerate_translations(plane, base_point=8))
    assert [t.perm for t in a.elements] == [t.perm for t in b.elements]
    assert a.cayley == b.cayley
