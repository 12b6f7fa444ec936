"""Finite fields GF(p^k) with fully materialized arithmetic tables.

Elements are indices in [0, q).  Index n encodes the polynomial residue
whose coefficients are the base-p digits of n, least significant first,
so index 0 is the additive identity and index 1 the multiplicative one.
Every table is self-checked against the field axioms at construction;
table lookup then removes all arithmetic subtlety from enumeration loops.
"""

from dataclasses import dataclass
from itertools import product

from .errors import FieldError

MAX_ORDER = 16

# Pinned monic irreducibles (little-endian coefficients, constant term first)
# so that the same field, hence the same plane, is produced on every run.
DEFAULT_IRREDUCIBLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),        # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),     # x^3 + x + 1
    (3, 2): (1, 0, 1),        # x^2 + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
}


@dataclass(frozen=True)
class FiniteField:
    p: int
    k: int
    q: int
    irreducible: tuple[int, ...] | None
    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.add_table[a].index(0)

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg(b)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.mul_table[a].index(1)

    def __repr__(self) -> str:
        return f"FiniteField(q={self.q})"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _digits(n: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(n % p)
        n //= p
    return out


def _index(coeffs: list[int], p: int) -> int:
    n = 0
    for c in reversed(coeffs):
        n = n * p + c
    return n


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_mod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    # m is monic; plain long division over GF(p).
    a = list(a)
    deg_m = len(m) - 1
    while len(a) > deg_m:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - deg_m
            for i, c in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    while len(a) < deg_m:
        a.append(0)
    return a


def _check_irreducible(poly: tuple[int, ...], p: int) -> None:
    k = len(poly) - 1
    # Exhaustive trial division by every monic polynomial of degree 1..k//2
    # (enough to witness any factorization; k <= 4 keeps this tiny).
    for d in range(1, k // 2 + 1):
        for tail in product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if any(_poly_mod(list(poly), tuple(divisor), p)):
                continue
            raise FieldError(
                f"polynomial {list(poly)} is reducible over GF({p}): "
                f"divisible by {divisor}"
            )


def _self_check(field: FiniteField) -> None:
    q, add, mul = field.q, field.add_table, field.mul_table
    elems = range(q)
    for a in elems:
        if add[a][0] != a or mul[a][1] != a:
            raise FieldError("identity law failed")
        if 0 not in add[a]:
            raise FieldError("missing additive inverse")
        if a and 1 not in mul[a]:
            raise FieldError("missing multiplicative inverse")
        if mul[a][0] != 0:
            raise FieldError("0 must annihilate")
        acc = 0
        for _ in range(field.p):
            acc = add[acc][a]
        if acc != 0:
            raise FieldError(f"characteristic is not {field.p}")
    for a in elems:
        for b in elems:
            if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                raise FieldError("commutativity failed")
            if a and b and mul[a][b] == 0:
                raise FieldError("zero divisor found")
            for c in elems:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    raise FieldError("additive associativity failed")
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    raise FieldError("multiplicative associativity failed")
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    raise FieldError("distributivity failed")


def gf(p: int, k: int = 1, irreducible: list[int] | tuple[int, ...] | None = None) -> FiniteField:
    """Construct GF(p^k), optionally with an explicit irreducible polynomial.

    The polynomial is given little-endian (constant term first) and must be
    monic of degree k.  For k > 1 without an explicit polynomial a pinned
    default exists for q in {4, 8, 9, 16}.
    """
    if not _is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1:
        raise FieldError("exponent must be >= 1")
    q = p**k
    if q > MAX_ORDER:
        raise FieldError(f"field order {q} exceeds the supported maximum {MAX_ORDER}")

    poly: tuple[int, ...] | None = None
    if k == 1:
        if irreducible is not None:
            raise FieldError("an irreducible polynomial only applies to extension fields (k > 1)")
    else:
        if irreducible is None:
            if (p, k) not in DEFAULT_IRREDUCIBLE:
                raise FieldError(f"no default irreducible polynomial for q = {q}")
            poly = DEFAULT_IRREDUCIBLE[(p, k)]
        else:
            poly = tuple(int(c) % p for c in irreducible)
            if len(poly) != k + 1:
                raise FieldError(f"polynomial must have degree {k} (length {k + 1})")
            if poly[-1] != 1:
                raise FieldError("polynomial must be monic")
            _check_irreducible(poly, p)

    if k == 1:
        add = tuple(tuple((a + b) % p for b in range(p)) for a in range(p))
        mul = tuple(tuple((a * b) % p for b in range(p)) for a in range(p))
    else:
        assert poly is not None
        coeffs = [_digits(n, p, k) for n in range(q)]
        add = tuple(
            tuple(_index([(x + y) % p for x, y in zip(coeffs[a], coeffs[b])], p) for b in range(q))
            for a in range(q)
        )
        mul = tuple(
            tuple(_index(_poly_mod(_poly_mul(coeffs[a], coeffs[b], p), poly, p), p) for b in range(q))
            for a in range(q)
        )

    field = FiniteField(p=p, k=k, q=q, irreducible=poly, add_table=add, mul_table=mul)
    _self_check(field)
    return field
