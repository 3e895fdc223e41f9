"""Exact linear algebra over a large prime field Z_p.

All randomness flows through :func:`make_rng`, a Mersenne Twister
(``random.Random``) seeded with a 64-bit unsigned integer.  The generator
algorithm is fixed across platforms and CPython versions for the methods
used here (``getrandbits`` / ``randrange``), so every downstream verdict is
bit-reproducible from (seed, trials, p).
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

#: Default modulus: the Mersenne prime 2^61 - 1.  Large enough that a single
#: random evaluation misses the generic rank with probability < 2 m d n / p,
#: i.e. well below 1e-12 at desk scale.
DEFAULT_PRIME = (1 << 61) - 1

MASK64 = (1 << 64) - 1

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, exact for all 64-bit integers."""
    if m < 2:
        return False
    for q in _MR_BASES:
        if m % q == 0:
            return m == q
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def make_rng(seed: int) -> random.Random:
    """The documented PRNG: Mersenne Twister with a 64-bit unsigned seed."""
    return random.Random(seed & MASK64)


def derive_seed(seed: int, index: int) -> int:
    """Per-task seed: seed XOR task index, masked to 64 bits."""
    return (seed ^ index) & MASK64


@dataclass(frozen=True)
class FieldConfig:
    """Prime modulus and master seed for randomized rank computations."""

    p: int = DEFAULT_PRIME
    seed: int = 0

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        if self.p <= (1 << 32):
            raise ValueError("modulus must exceed 2^32 for negligible failure odds")
        if not (0 <= self.seed <= MASK64):
            raise ValueError("seed must be a 64-bit unsigned integer")


class ModMatrix:
    """Dense matrix over Z_p, entries stored row-major and reduced mod p."""

    __slots__ = ("rows", "cols", "p", "_data")

    def __init__(self, rows: int, cols: int, entries: Sequence[int], p: int = DEFAULT_PRIME):
        if rows < 0 or cols < 0:
            raise ValueError("dimensions must be non-negative")
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        if p < 2:
            raise ValueError("modulus must be at least 2")
        self.rows = rows
        self.cols = cols
        self.p = p
        self._data = [
            [entries[i * cols + j] % p for j in range(cols)] for i in range(rows)
        ]

    @classmethod
    def from_rows(cls, row_lists: Iterable[Iterable[int]], cols: int, p: int = DEFAULT_PRIME) -> "ModMatrix":
        flat: list[int] = []
        count = 0
        for row in row_lists:
            row = list(row)
            if len(row) != cols:
                raise ValueError("ragged rows")
            flat.extend(row)
            count += 1
        return cls(count, cols, flat, p)

    def entry(self, i: int, j: int) -> int:
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(self._data[i])

    def row_lists(self) -> list[list[int]]:
        """Fresh mutable copies of the rows."""
        return [row[:] for row in self._data]

    def transpose(self) -> "ModMatrix":
        flat = [self._data[i][j] for j in range(self.cols) for i in range(self.rows)]
        return ModMatrix(self.cols, self.rows, flat, self.p)

    def __repr__(self) -> str:
        return f"ModMatrix({self.rows}x{self.cols} mod {self.p})"


def rank_of_rows(rows: list[list[int]], cols: int, p: int) -> int:
    """Rank via in-place Gaussian elimination; the row lists are consumed."""
    nrows = len(rows)
    rk = 0
    col = 0
    while rk < nrows and col < cols:
        piv = -1
        for i in range(rk, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv < 0:
            col += 1
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        prow = rows[rk]
        inv = pow(prow[col], -1, p)
        prow[col:] = [x * inv % p for x in prow[col:]]
        for i in range(rk + 1, nrows):
            ri = rows[i]
            f = ri[col]
            if f:
                ri[col:] = [(a - f * b) % p for a, b in zip(ri[col:], prow[col:])]
        rk += 1
        col += 1
    return rk


def rank(m: ModMatrix) -> int:
    """Exact rank over Z_p; 0 for empty matrices."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return rank_of_rows(m.row_lists(), m.cols, m.p)


def _rref(rows: list[list[int]], cols: int, p: int) -> list[int]:
    """Reduced row echelon form in place; returns the pivot column list."""
    nrows = len(rows)
    pivots: list[int] = []
    rk = 0
    for col in range(cols):
        piv = -1
        for i in range(rk, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        prow = rows[rk]
        inv = pow(prow[col], -1, p)
        prow[col:] = [x * inv % p for x in prow[col:]]
        for i in range(nrows):
            if i != rk:
                ri = rows[i]
                f = ri[col]
                if f:
                    ri[col:] = [(a - f * b) % p for a, b in zip(ri[col:], prow[col:])]
        pivots.append(col)
        rk += 1
        if rk == nrows:
            break
    return pivots


def left_kernel_basis(m: ModMatrix) -> list[list[int]]:
    """Basis of {w : w.m = 0}, each vector of length m.rows.

    Computed from the RREF of the transpose; the basis is deterministic for
    a given matrix.
    """
    if m.rows == 0:
        return []
    if m.cols == 0:
        return [[1 if j == i else 0 for j in range(m.rows)] for i in range(m.rows)]
    at = m.transpose().row_lists()
    pivots = _rref(at, m.rows, m.p)
    pivot_set = set(pivots)
    p = m.p
    basis = []
    for free in range(m.rows):
        if free in pivot_set:
            continue
        vec = [0] * m.rows
        vec[free] = 1
        for prow, pcol in enumerate(pivots):
            vec[pcol] = (-at[prow][free]) % p
        basis.append(vec)
    return basis


def left_kernel_sample(m: ModMatrix, seed: int) -> list[int]:
    """A seeded random left-kernel element; all-zero iff the kernel is trivial.

    Drawn as a uniform Z_p-combination of a kernel basis, resampling the rare
    all-zero combination so the zero vector uniquely signals a trivial kernel.
    """
    basis = left_kernel_basis(m)
    if not basis:
        return [0] * m.rows
    p = m.p
    rng = make_rng(seed)
    for _ in range(8):
        coeffs = [rng.randrange(p) for _ in basis]
        vec = [0] * m.rows
        for c, b in zip(coeffs, basis):
            if c:
                for i, x in enumerate(b):
                    if x:
                        vec[i] = (vec[i] + c * x) % p
        if any(vec):
            return vec
    return list(basis[0])


def vec_mat(w: Sequence[int], m: ModMatrix) -> list[int]:
    """Row vector times matrix over Z_p (for kernel verification)."""
    if len(w) != m.rows:
        raise ValueError("vector length must match row count")
    p = m.p
    out = [0] * m.cols
    for wi, row in zip(w, m._data):
        if wi:
            for j, x in enumerate(row):
                if x:
                    out[j] = (out[j] + wi * x) % p
    return out
