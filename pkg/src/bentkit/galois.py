"""GF(2^m) arithmetic in polynomial basis, 1 <= m <= 16.

Elements are m-bit ints, bit j = coefficient of X^j.  Each degree uses
the lexicographically smallest irreducible reduction polynomial so that
identical parameters always produce identical truth tables.  Division
follows the x/0 = 0 convention used by the partial-spread bent class.
"""

from __future__ import annotations

from typing import Sequence

MAX_DEGREE = 16


def _polymod(a: int, q: int) -> int:
    """a mod q over GF(2)[X]."""
    dq = q.bit_length() - 1
    while a.bit_length() - 1 >= dq:
        a ^= q << (a.bit_length() - 1 - dq)
    return a


def is_irreducible(poly: int, m: int) -> bool:
    """Exhaustive trial division by every factor of degree 1..m//2."""
    if poly.bit_length() - 1 != m:
        return False
    if m == 1:
        return True
    for q in range(2, 1 << (m // 2 + 1)):
        if q.bit_length() - 1 < 1:
            continue
        if _polymod(poly, q) == 0:
            return False
    return True


def smallest_irreducible(m: int) -> int:
    for cand in range(1 << m, 1 << (m + 1)):
        if is_irreducible(cand, m):
            return cand
    raise RuntimeError(f"no irreducible polynomial of degree {m}")  # unreachable


class GaloisField:
    """GF(2^m) with a fixed irreducible reduction polynomial."""

    __slots__ = ("m", "reduction_poly", "order")

    def __init__(self, m: int, reduction_poly: int | None = None):
        if not 1 <= m <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in [1, {MAX_DEGREE}], got {m}")
        if reduction_poly is None:
            reduction_poly = smallest_irreducible(m)
        elif not is_irreducible(reduction_poly, m):
            raise ValueError(
                f"reduction polynomial {reduction_poly:#x} is not an "
                f"irreducible of degree {m}"
            )
        self.m = m
        self.reduction_poly = reduction_poly
        self.order = 1 << m

    def _check(self, *elems: int) -> None:
        for e in elems:
            if not 0 <= e < self.order:
                raise ValueError(f"{e} is not an element of GF(2^{self.m})")

    def add(self, p: int, q: int) -> int:
        self._check(p, q)
        return p ^ q

    def mul(self, p: int, q: int) -> int:
        self._check(p, q)
        acc = 0
        while q:
            if q & 1:
                acc ^= p
            p <<= 1
            if p >> self.m:
                p ^= self.reduction_poly
            q >>= 1
        return acc

    def pow(self, p: int, e: int) -> int:
        self._check(p)
        acc = 1
        base = p
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def inv(self, p: int) -> int:
        self._check(p)
        if p == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.pow(p, self.order - 2)

    def div(self, p: int, q: int) -> int:
        """p/q with the convention p/0 = 0."""
        self._check(p, q)
        if q == 0:
            return 0
        return self.mul(p, self.inv(q))

    def trace(self, p: int) -> int:
        """Absolute trace sum_{i<m} p^(2^i); always lands in {0, 1}."""
        self._check(p)
        acc = p
        t = p
        for _ in range(self.m - 1):
            t = self.mul(t, t)
            acc ^= t
        assert acc in (0, 1)
        return acc

    # identification of F_2^m with the field: bit j-1 of the element
    # carries vector coordinate x_j

    def from_vector(self, x: Sequence[int]) -> int:
        vec = tuple(x)
        if len(vec) != self.m:
            raise ValueError(f"expected {self.m} coordinates, got {len(vec)}")
        e = 0
        for j, b in enumerate(vec, start=1):
            if b not in (0, 1):
                raise ValueError(f"vector entries must be bits, got {b!r}")
            e |= b << (j - 1)
        return e

    def to_vector(self, p: int) -> tuple[int, ...]:
        self._check(p)
        return tuple((p >> (j - 1)) & 1 for j in range(1, self.m + 1))

    def element(self, bits: int) -> "FieldElement":
        return FieldElement(self, bits)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GaloisField)
            and self.m == other.m
            and self.reduction_poly == other.reduction_poly
        )

    def __hash__(self) -> int:
        return hash((self.m, self.reduction_poly))

    def __repr__(self) -> str:
        return f"GaloisField(m={self.m}, poly={self.reduction_poly:#x})"


class FieldElement:
    """A GF(2^m) element bound to its field, with operator sugar."""

    __slots__ = ("field", "bits")

    def __init__(self, field: GaloisField, bits: int):
        field._check(bits)
        self.field = field
        self.bits = bits

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other.bits
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        q = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.bits, q))

    __xor__ = __add__
    __sub__ = __add__

    def __mul__(self, other):
        q = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.bits, q))

    def __truediv__(self, other):
        q = self._coerce(other)
        return FieldElement(self.field, self.field.div(self.bits, q))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.bits))

    def trace(self) -> int:
        return self.field.trace(self.bits)

    def __int__(self) -> int:
        return self.bits

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.bits == other.bits
        if isinstance(other, int):
            return self.bits == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.bits))

    def __repr__(self) -> str:
        return f"FieldElement(GF(2^{self.field.m}), {self.bits:#x})"
