"""Deterministic random generation for corpora and parameter files.

A self-contained xorshift64* generator keeps outputs byte-identical for
a given seed across platforms and interpreter versions; nothing here
touches the stdlib RNG.
"""

from __future__ import annotations

from .constructions import (
    BentTriple,
    LinearSubspace,
    PermutationMap,
    bent_triple_from_derivative,
    class_d_bent,
    mm_function,
    psap_bent,
)
from .core import BooleanFunction
from .galois import GaloisField
from .analysis import resiliency_report

_MASK64 = (1 << 64) - 1


class XorShift64Star:
    """xorshift64* with the usual multiplier; state must stay nonzero."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64 or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK64

    def bits(self, k: int) -> int:
        """A uniform k-bit integer."""
        out = 0
        got = 0
        while got < k:
            out = (out << 64) | self.next_u64()
            got += 64
        return out >> (got - k) if k else 0

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("empty range")
        k = (n - 1).bit_length()
        while True:
            v = self.bits(k)
            if v < n:
                return v

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.randrange(hi - lo + 1)

    def choice(self, seq):
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]


_FIELDS: dict[int, GaloisField] = {}


def _field(m: int) -> GaloisField:
    if m not in _FIELDS:
        _FIELDS[m] = GaloisField(m)
    return _FIELDS[m]


def random_function(n: int, rng: XorShift64Star) -> BooleanFunction:
    return BooleanFunction(n, rng.bits(1 << n))


def random_balanced(n: int, rng: XorShift64Star) -> BooleanFunction:
    half = 1 << (n - 1)
    table = [1] * half + [0] * half
    rng.shuffle(table)
    return BooleanFunction(n, table)


def random_permutation(k: int, rng: XorShift64Star, fix_zero: bool = False):
    images = list(range(1 << k))
    rng.shuffle(images)
    if fix_zero and images[0] != 0:
        j = images.index(0)
        images[0], images[j] = images[j], images[0]
    return PermutationMap(images)


def random_affine(n: int, rng: XorShift64Star, min_weight: int = 0) -> BooleanFunction:
    while True:
        mask = rng.bits(n)
        if mask.bit_count() >= min_weight:
            return BooleanFunction.linear(n, mask, rng.bits(1))


def random_mm_bent(n: int, rng: XorShift64Star) -> BooleanFunction:
    k = n // 2
    return mm_function(random_permutation(k, rng), random_function(k, rng))


def random_balanced_field_table(m: int, rng: XorShift64Star) -> list[int]:
    """A balanced bit table over GF(2^m) with value 0 at the element 0."""
    half = 1 << (m - 1)
    rest = [1] * half + [0] * (half - 1)
    rng.shuffle(rest)
    return [0] + rest


def random_psap_bent(n: int, rng: XorShift64Star) -> BooleanFunction:
    m = n // 2
    return psap_bent(_field(m), random_balanced_field_table(m, rng))


def random_class_d_bent(n: int, rng: XorShift64Star) -> BooleanFunction:
    k = n // 2
    phi = random_permutation(k, rng, fix_zero=True)
    pick = rng.randrange(3)
    if pick == 0:
        e2 = LinearSubspace.zero(k)
    elif pick == 1:
        e2 = LinearSubspace.full(k)
    else:
        e2 = LinearSubspace(k, [rng.randint(1, (1 << k) - 1)])
    image = LinearSubspace(k, [phi(v) for v in e2.members()])
    e1 = image.orthogonal()
    return class_d_bent(phi, e1, e2)


_BENT_FAMILIES = (random_mm_bent, random_psap_bent, random_class_d_bent)


def random_bent(n: int, rng: XorShift64Star) -> BooleanFunction:
    """A bent function drawn from the M-M / PS_ap / class-D builders."""
    return _BENT_FAMILIES[rng.randrange(3)](n, rng)


def random_resilient(n: int, t: int, rng: XorShift64Star) -> BooleanFunction:
    """A t-resilient n-variable function (t >= 0)."""
    if t == 0:
        return random_balanced(n, rng)
    if t >= n:
        raise ValueError(f"no {t}-resilient functions on {n} variables")
    if rng.randrange(4) == 0 or n - t - 1 < 1:
        return random_affine(n, rng, min_weight=t + 1)
    s = rng.randint(1, n - t - 1)
    r = n - s
    heavy = [v for v in range(1 << r) if v.bit_count() >= t + 1]
    images = [rng.choice(heavy) for _ in range(1 << s)]
    return mm_function(PermutationMap(images, r=r), random_function(s, rng))


def random_resilient_triple(
    n: int, t: int, rng: XorShift64Star, max_tries: int = 400
) -> tuple[BooleanFunction, BooleanFunction, BooleanFunction]:
    """Three t-resilient functions whose XOR is also t-resilient."""
    for _ in range(max_tries):
        f1 = random_resilient(n, t, rng)
        f2 = random_resilient(n, t, rng)
        f3 = random_resilient(n, t, rng)
        if resiliency_report(f1 ^ f2 ^ f3).resiliency >= t:
            return f1, f2, f3
    # fall back to affine masks, where the XOR condition is a one-liner
    while True:
        masks = [rng.bits(n) for _ in range(3)]
        if all(m.bit_count() >= t + 1 for m in masks) and (
            masks[0] ^ masks[1] ^ masks[2]
        ).bit_count() >= t + 1:
            return tuple(
                BooleanFunction.linear(n, m, rng.bits(1)) for m in masks
            )


def random_mm_bent_triple(
    n: int, rng: XorShift64Star
) -> tuple[BooleanFunction, BooleanFunction, BooleanFunction]:
    """Three M-M bent functions over one permutation; their XOR is bent."""
    k = n // 2
    phi = random_permutation(k, rng)
    return tuple(mm_function(phi, random_function(k, rng)) for _ in range(3))


def random_derivative_triple(n: int, rng: XorShift64Star) -> tuple[BentTriple, int]:
    """A certified triple (f, f(.+a), g) where f, g are M-M functions
    over one permutation and a is nonzero on the affine block only."""
    k = n // 2
    phi = random_permutation(k, rng)
    f = mm_function(phi, random_function(k, rng))
    g = mm_function(phi, random_function(k, rng))
    a = rng.randint(1, (1 << k) - 1) << k  # (a', 0) as a table index
    return bent_triple_from_derivative(f, g, a), a
