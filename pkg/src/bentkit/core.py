"""Truth-table representation and the elementary Boolean-function algebra.

Index convention: a point x = (x_1, ..., x_n) of F_2^n maps to the table
index i = sum_j x_j * 2^(n-j), i.e. x_1 is the most significant bit and
x_n varies fastest.  Every table, spectrum and ANF in the package is
indexed this way.  Truth tables are stored bit-packed in a Python int
(bit i of the int is f at index i); numpy views are materialised on
demand for the transform kernels.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import TruthTableFormatError

MAX_VARS = 26  # 2^26-bit table ~ 8 MiB; all constructions here stay far below

_POPCOUNT_CACHE: dict[int, np.ndarray] = {}


def popcount_table(n: int) -> np.ndarray:
    """Hamming weights of all indices in [0, 2^n), cached per n."""
    tab = _POPCOUNT_CACHE.get(n)
    if tab is None:
        idx = np.arange(1 << n, dtype=np.uint32)
        tab = np.bitwise_count(idx).astype(np.uint8)
        tab.flags.writeable = False
        _POPCOUNT_CACHE[n] = tab
    return tab


def encode_point(x: Sequence[int]) -> int:
    """Map a bit vector (x_1, ..., x_n) to its table index."""
    i = 0
    for b in x:
        if b not in (0, 1):
            raise ValueError(f"vector entries must be bits, got {b!r}")
        i = (i << 1) | b
    return i


def decode_point(i: int, n: int) -> tuple[int, ...]:
    """Inverse of encode_point for n variables."""
    return tuple((i >> (n - j)) & 1 for j in range(1, n + 1))


def _as_index(a, n: int) -> int:
    """Accept a point either as a bit vector of length n or a raw index."""
    if isinstance(a, (int, np.integer)):
        a = int(a)
        if not 0 <= a < (1 << n):
            raise ValueError(f"index {a} out of range for n={n}")
        return a
    vec = tuple(a)
    if len(vec) != n:
        raise ValueError(f"expected a vector of length {n}, got {len(vec)}")
    return encode_point(vec)


def _unpack_bits(mask: int, n: int) -> np.ndarray:
    """Bit-packed table -> uint8 array of length 2^n (index order)."""
    size = 1 << n
    nbytes = max(1, size // 8)
    raw = mask.to_bytes(nbytes, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return bits[:size]


def _pack_bits(bits: np.ndarray) -> int:
    packed = np.packbits(bits.astype(np.uint8, copy=False), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


class BooleanFunction:
    """A function F_2^n -> F_2 held as a bit-packed truth table."""

    __slots__ = ("_n", "_mask", "_spectrum", "_weight")

    def __init__(self, n: int, table):
        if not 1 <= n <= MAX_VARS:
            raise ValueError(f"variable count must be in [1, {MAX_VARS}], got {n}")
        size = 1 << n
        if isinstance(table, (int, np.integer)):
            mask = int(table)
            if mask < 0 or mask >> size:
                raise ValueError("table mask has bits beyond 2^n entries")
        elif isinstance(table, np.ndarray):
            if table.shape != (size,):
                raise ValueError(f"table length must be {size}, got {table.shape}")
            mask = _pack_bits(table & 1)
        else:
            vals = list(table)
            if len(vals) != size:
                raise ValueError(f"table length must be {size}, got {len(vals)}")
            mask = 0
            for i, v in enumerate(vals):
                if v not in (0, 1):
                    raise ValueError(f"table entries must be bits, got {v!r}")
                mask |= v << i
        self._n = n
        self._mask = mask
        self._spectrum = None
        self._weight = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "BooleanFunction":
        return cls(n, 0)

    @classmethod
    def constant(cls, n: int, bit: int) -> "BooleanFunction":
        return cls(n, ((1 << (1 << n)) - 1) if bit else 0)

    @classmethod
    def variable(cls, n: int, j: int) -> "BooleanFunction":
        """The coordinate function x_j."""
        if not 1 <= j <= n:
            raise ValueError(f"variable index {j} out of range for n={n}")
        return cls.linear(n, 1 << (n - j))

    @classmethod
    def linear(cls, n: int, mask: int, const: int = 0) -> "BooleanFunction":
        """The affine function x -> mask.x (+ const), mask index-encoded."""
        if not 0 <= mask < (1 << n):
            raise ValueError(f"linear mask {mask} out of range for n={n}")
        idx = np.arange(1 << n, dtype=np.uint32)
        bits = (np.bitwise_count(idx & np.uint32(mask)) & 1).astype(np.uint8)
        if const:
            bits ^= 1
        return cls(n, bits)

    @classmethod
    def indicator(cls, n: int, points: Iterable) -> "BooleanFunction":
        """1 on the given points (vectors or indices), 0 elsewhere."""
        mask = 0
        for p in points:
            mask |= 1 << _as_index(p, n)
        return cls(n, mask)

    # -- basic accessors ----------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def mask(self) -> int:
        """The bit-packed table (bit i = value at index i)."""
        return self._mask

    @property
    def weight(self) -> int:
        if self._weight is None:
            self._weight = self._mask.bit_count()
        return self._weight

    @property
    def is_balanced(self) -> bool:
        return self.weight == 1 << (self._n - 1)

    def bit(self, i: int) -> int:
        """Table value at index i."""
        return (self._mask >> i) & 1

    def evaluate(self, x: Sequence[int]) -> int:
        vec = tuple(x)
        if len(vec) != self._n:
            raise ValueError(f"expected {self._n} coordinates, got {len(vec)}")
        return self.bit(encode_point(vec))

    __call__ = evaluate

    def values(self) -> np.ndarray:
        """The full table as a fresh uint8 array in index order."""
        return _unpack_bits(self._mask, self._n)

    def signs(self) -> np.ndarray:
        """(-1)^f as an int64 array."""
        return 1 - 2 * self.values().astype(np.int64)

    # -- algebra -------------------------------------------------------

    def _check_same_n(self, other: "BooleanFunction") -> None:
        if self._n != other._n:
            raise ValueError(
                f"variable counts differ: {self._n} vs {other._n}"
            )

    def __xor__(self, other: "BooleanFunction") -> "BooleanFunction":
        self._check_same_n(other)
        return BooleanFunction(self._n, self._mask ^ other._mask)

    def __and__(self, other: "BooleanFunction") -> "BooleanFunction":
        self._check_same_n(other)
        return BooleanFunction(self._n, self._mask & other._mask)

    def __invert__(self) -> "BooleanFunction":
        return BooleanFunction(self._n, self._mask ^ ((1 << (1 << self._n)) - 1))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BooleanFunction)
            and self._n == other._n
            and self._mask == other._mask
        )

    def __hash__(self) -> int:
        return hash((self._n, self._mask))

    def __repr__(self) -> str:
        if self._n <= 6:
            body = format(self._mask, f"0{max(1, (1 << self._n) // 4)}x")
        else:
            body = f"weight={self.weight}"
        return f"BooleanFunction(n={self._n}, {body})"

    def translate(self, a) -> "BooleanFunction":
        """x -> f(x xor a)."""
        shift = _as_index(a, self._n)
        if shift == 0:
            return self
        idx = np.arange(1 << self._n, dtype=np.intp)
        return BooleanFunction(self._n, self.values()[idx ^ shift])

    def derivative(self, a) -> "BooleanFunction":
        """D_a f: x -> f(x) xor f(x xor a)."""
        return self ^ self.translate(a)

    def restrict(self, j: int, b: int) -> "BooleanFunction":
        """Fix x_j = b; remaining variables keep their relative order."""
        if self._n < 2:
            raise ValueError("cannot restrict a 1-variable function")
        if not 1 <= j <= self._n:
            raise ValueError(f"variable index {j} out of range for n={self._n}")
        if b not in (0, 1):
            raise ValueError(f"restriction value must be a bit, got {b!r}")
        p = self._n - j  # bit position of x_j inside the index
        block = 1 << p
        sub = self.values().reshape(-1, 2 * block)[:, b * block : (b + 1) * block]
        return BooleanFunction(self._n - 1, sub.reshape(-1))


def combine(f: BooleanFunction, g: BooleanFunction, kind: str) -> BooleanFunction:
    """Pointwise XOR or AND of two functions on the same variables."""
    if kind == "xor":
        return f ^ g
    if kind == "and":
        return f & g
    raise ValueError(f"unknown combination kind {kind!r}")


def translate(f: BooleanFunction, a) -> BooleanFunction:
    return f.translate(a)


def derivative(f: BooleanFunction, a) -> BooleanFunction:
    return f.derivative(a)


def restrict(f: BooleanFunction, j: int, b: int) -> BooleanFunction:
    return f.restrict(j, b)


# -- truth-table file format ------------------------------------------
#
# line 1: n=<decimal>
# line 2: bits=<payload>, LF-terminated, no trailing whitespace.
# For n >= 2 the payload is 2^n / 4 lowercase hex digits; bit i of the
# table is bit (3 - (i mod 4)) of hex digit floor(i/4) (MSB-first within
# a digit).  For n = 1 the payload is two literal 0/1 characters giving
# f(0) and f(1).

_HEX = "0123456789abcdef"


def serialize_truth_table(f: BooleanFunction) -> str:
    if f.n == 1:
        payload = f"{f.bit(0)}{f.bit(1)}"
    else:
        nibbles = f.values().reshape(-1, 4)
        digits = nibbles @ np.array([8, 4, 2, 1], dtype=np.uint8)
        payload = "".join(_HEX[d] for d in digits)
    return f"n={f.n}\nbits={payload}\n"


def parse_truth_table(text: str) -> BooleanFunction:
    lines = text.split("\n")
    # tolerate CR and trailing blank lines, nothing else
    lines = [ln.rstrip("\r") for ln in lines]
    while lines and lines[-1] == "":
        lines.pop()
    if len(lines) != 2:
        raise TruthTableFormatError(
            f"expected exactly two lines (n=..., bits=...), got {len(lines)}"
        )
    head, body = lines
    if not head.startswith("n=") or not head[2:].isdigit():
        raise TruthTableFormatError(f"malformed header line {head!r}")
    n = int(head[2:])
    if not 1 <= n <= MAX_VARS:
        raise TruthTableFormatError(f"variable count {n} outside [1, {MAX_VARS}]")
    if not body.startswith("bits="):
        raise TruthTableFormatError("second line must start with 'bits='")
    payload = body[5:]
    if n == 1:
        if len(payload) != 2 or any(c not in "01" for c in payload):
            raise TruthTableFormatError(
                "n=1 payload must be two literal 0/1 characters"
            )
        return BooleanFunction(1, [int(payload[0]), int(payload[1])])
    want = (1 << n) // 4
    if len(payload) != want:
        raise TruthTableFormatError(
            f"payload carries {len(payload) * 4} bits, table needs {1 << n}"
        )
    try:
        digits = np.array([_HEX.index(c) for c in payload.lower()], dtype=np.uint8)
    except ValueError:
        raise TruthTableFormatError("payload contains non-hex characters") from None
    bits = ((digits[:, None] >> np.array([3, 2, 1, 0], dtype=np.uint8)) & 1).reshape(-1)
    return BooleanFunction(n, bits)


# -- Walsh transform ---------------------------------------------------


class WalshSpectrum:
    """The 2^n signed values W_f(w), same index encoding as the table.

    Parseval's identity (sum of squares = 2^(2n)) is enforced at
    construction; a sequence failing it cannot be a Walsh spectrum.
    """

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: np.ndarray):
        values = np.asarray(values, dtype=np.int64)
        if values.shape != (1 << n,):
            raise ValueError(f"spectrum length must be {1 << n}")
        if int(np.dot(values, values)) != 1 << (2 * n):
            raise ValueError("Parseval check failed: not a Walsh spectrum")
        values = values.copy()
        values.flags.writeable = False
        self.n = n
        self.values = values

    def __getitem__(self, w) -> int:
        return int(self.values[_as_index(w, self.n)])

    def __len__(self) -> int:
        return 1 << self.n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WalshSpectrum)
            and self.n == other.n
            and bool(np.array_equal(self.values, other.values))
        )

    def __repr__(self) -> str:
        return f"WalshSpectrum(n={self.n}, max_abs={self.max_abs})"

    @property
    def max_abs(self) -> int:
        return int(np.max(np.abs(self.values)))

    @property
    def support_size(self) -> int:
        return int(np.count_nonzero(self.values))


def walsh_transform(f: BooleanFunction) -> WalshSpectrum:
    """W_f(w) = sum_x (-1)^(f(x) xor w.x) via the in-place butterfly.

    O(n 2^n); bit-exact in int64 (|W| <= 2^26 at the size cap).  The
    result is cached on the function, which is immutable.
    """
    if f._spectrum is None:
        a = f.signs()
        size = a.shape[0]
        h = 1
        while h < size:
            b = a.reshape(-1, 2 * h)
            left = b[:, :h].copy()
            right = b[:, h:].copy()
            b[:, :h] = left + right
            b[:, h:] = left - right
            h *= 2
        f._spectrum = WalshSpectrum(f.n, a)
    return f._spectrum


# -- algebraic normal form --------------------------------------------


class AnfPolynomial:
    """Moebius coefficients, bit-packed: bit I = a_I for prod_{l in I} x_l.

    Subset index encoding matches the table encoding: variable j sits at
    bit (n - j) of I.
    """

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int):
        if not 1 <= n <= MAX_VARS:
            raise ValueError(f"variable count must be in [1, {MAX_VARS}], got {n}")
        if mask < 0 or mask >> (1 << n):
            raise ValueError("coefficient mask has bits beyond 2^n entries")
        self.n = n
        self.mask = mask

    def coefficient(self, subset: Iterable[int]) -> int:
        idx = 0
        for j in subset:
            if not 1 <= j <= self.n:
                raise ValueError(f"variable index {j} out of range")
            idx |= 1 << (self.n - j)
        return (self.mask >> idx) & 1

    def monomials(self) -> list[tuple[int, ...]]:
        """Sorted variable-index tuples of the nonzero coefficients."""
        out = []
        for idx in np.nonzero(_unpack_bits(self.mask, self.n))[0]:
            out.append(
                tuple(j for j in range(1, self.n + 1) if (int(idx) >> (self.n - j)) & 1)
            )
        return out

    @property
    def degree(self) -> int:
        """Max monomial size; 0 for the zero function by convention."""
        if self.mask == 0:
            return 0
        nz = np.nonzero(_unpack_bits(self.mask, self.n))[0]
        return int(popcount_table(self.n)[nz].max())

    def degree_of_variable(self, i: int) -> int:
        """Size of the longest monomial containing x_i (0 if x_i absent)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} out of range for n={self.n}")
        bit = 1 << (self.n - i)
        nz = np.nonzero(_unpack_bits(self.mask, self.n))[0]
        nz = nz[(nz & bit) != 0]
        if nz.size == 0:
            return 0
        return int(popcount_table(self.n)[nz].max())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AnfPolynomial)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __repr__(self) -> str:
        return f"AnfPolynomial(n={self.n}, degree={self.degree})"


def _mobius_kernel(bits: np.ndarray) -> np.ndarray:
    a = bits.copy()
    size = a.shape[0]
    h = 1
    while h < size:
        b = a.reshape(-1, 2 * h)
        b[:, h:] ^= b[:, :h]
        h *= 2
    return a


def mobius(f: BooleanFunction) -> AnfPolynomial:
    """Truth table -> ANF coefficients (binary Moebius transform)."""
    return AnfPolynomial(f.n, _pack_bits(_mobius_kernel(f.values())))


def mobius_inv(p: AnfPolynomial) -> BooleanFunction:
    """ANF coefficients -> truth table (the transform is an involution)."""
    return BooleanFunction(p.n, _pack_bits(_mobius_kernel(_unpack_bits(p.mask, p.n))))


def degree(f: BooleanFunction) -> int:
    return mobius(f).degree


def degree_of_variable(f: BooleanFunction, i: int) -> int:
    return mobius(f).degree_of_variable(i)
