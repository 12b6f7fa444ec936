"""Finite field construction: tables, axioms, pinned defaults, rejections."""

import pytest

from planealg import FieldError, gf
from planealg.fields import DEFAULT_IRREDUCIBLE


def test_gf2_tables_are_xor_and_and():
    f = gf(2)
    assert f.add_table == ((0, 1), (1, 0))
    assert f.mul_table == ((0, 0), (0, 1))


def test_gf4_multiplicative_group_is_cyclic_of_order_3():
    f = gf(2, 2, [1, 1, 1])
    # powers of x (index 2): x, x^2 = x+1, x^3 = 1
    assert f.mul(2, 2) == 3
    assert f.mul(2, 3) == 1
    orders = {a: next(n for n in range(1, 5) if _power(f, a, n) == 1) for a in (1, 2, 3)}
    assert sorted(orders.values()) == [1, 3, 3]


def _power(f, a, n):
    acc = 1
    for _ in range(n):
        acc = f.mul(acc, a)
    return acc


def test_non_prime_base_rejected():
    with pytest.raises(FieldError, match="not prime"):
        gf(4, 1)


def test_reducible_polynomial_rejected():
    # x^2 + 1 = (x + 1)^2 over GF(2)
    with pytest.raises(FieldError, match="reducible"):
        gf(2, 2, [1, 0, 1])
    # x^4 + x^2 + 1 = (x^2 + x + 1)^2 over GF(2): no roots, still reducible
    with pytest.raises(FieldError, match="reducible"):
        gf(2, 4, [1, 0, 1, 0, 1])


def test_non_monic_and_wrong_degree_rejected():
    with pytest.raises(FieldError, match="monic"):
        gf(3, 2, [1, 0, 2])
    with pytest.raises(FieldError, match="degree"):
        gf(2, 2, [1, 1])


def test_polynomial_on_prime_field_rejected():
    with pytest.raises(FieldError, match="extension"):
        gf(3, 1, [1, 1])


def test_order_cap():
    with pytest.raises(FieldError, match="maximum"):
        gf(5, 2)
    with pytest.raises(FieldError, match="maximum"):
        gf(17)


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4)])
def test_field_axioms_exhaustively(p, k):
    f = gf(p, k)
    q = f.q
    for a in range(q):
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.mul(a, 0) == 0
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
        acc = 0
        for _ in range(p):
            acc = f.add(acc, a)
        assert acc == 0, "characteristic must be p"
    for a in range(q):
        for b in range(q):
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in range(q):
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_default_polynomials_are_pinned():
    assert DEFAULT_IRREDUCIBLE == {
        (2, 2): (1, 1, 1),
        (2, 3): (1, 1, 0, 1),
        (3, 2): (1, 0, 1),
        (2, 4): (1, 1, 0, 0, 1),
    }
    for (p, k), poly in DEFAULT_IRREDUCIBLE.items():
        assert gf(p, k).irreducible == poly


def test_index_identities():
    for q in (2, 3, 4, 5, 8, 9):
        p = {2: 2, 3: 3, 4: 2, 5: 5, 8: 2, 9: 3}[q]
        k = {2: 1, 3: 1, 4: 2, 5: 1, 8: 3, 9: 2}[q]
        f = gf(p, k)
        assert f.add(0, 0) == 0 and f.mul(1, 1) == 1
        assert f.q == q
