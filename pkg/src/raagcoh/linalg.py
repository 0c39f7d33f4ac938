"""Dense linear algebra over the prime field F_p.

Vectors are tuples of residues; matrices are immutable row-major tuples.
Sizes in this package stay in the low hundreds, so plain Python
Gauss-Jordan elimination is enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from raagcoh.errors import DimensionError, SingularMatrixError

Vector = tuple[int, ...]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")
    if p >= 1 << 16:
        raise ValueError(f"prime {p} too large (supported: p < 65536)")


def rref(rows: Iterable[Sequence[int]], p: int, ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row-echelon form. Returns (nonzero rows, pivot columns)."""
    work = [[x % p for x in r] for r in rows]
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        piv = next((r for r in range(top, len(work)) if work[r][col]), None)
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        inv = pow(work[top][col], -1, p)
        if inv != 1:
            work[top] = [(x * inv) % p for x in work[top]]
        prow = work[top]
        for r in range(len(work)):
            if r != top and work[r][col]:
                f = work[r][col]
                work[r] = [(a - f * b) % p for a, b in zip(work[r], prow)]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rank_of(rows: Iterable[Sequence[int]], p: int, ncols: int) -> int:
    return len(rref(rows, p, ncols)[1])


def vec_add(x: Sequence[int], y: Sequence[int], p: int) -> Vector:
    return tuple((a + b) % p for a, b in zip(x, y))


def vec_scale(c: int, x: Sequence[int], p: int) -> Vector:
    return tuple((c * a) % p for a in x)


def unit(i: int, n: int) -> Vector:
    return tuple(1 if k == i else 0 for k in range(n))


class Echelon:
    """Incrementally maintained echelon basis, used for independence tests
    inside search loops. Not reduced; pivots are kept sorted by insertion."""

    __slots__ = ("p", "rows", "pivots")

    def __init__(self, p: int, rows=None, pivots=None):
        self.p = p
        self.rows: list[Vector] = rows or []
        self.pivots: list[int] = pivots or []

    def reduce(self, v: Sequence[int]) -> list[int]:
        p = self.p
        w = list(v)
        for row, col in zip(self.rows, self.pivots):
            c = w[col]
            if c:
                w = [(a - c * b) % p for a, b in zip(w, row)]
        return w

    def try_add(self, v: Sequence[int]) -> "Echelon | None":
        """Return a new Echelon including v, or None if v is in the span."""
        w = self.reduce(v)
        col = next((i for i, a in enumerate(w) if a), None)
        if col is None:
            return None
        inv = pow(w[col], -1, self.p)
        w = tuple((a * inv) % self.p for a in w)
        return Echelon(self.p, self.rows + [w], self.pivots + [col])

    def __len__(self):
        return len(self.rows)


@dataclass(frozen=True)
class Matrix:
    p: int
    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise DimensionError("matrix data does not match its shape")

    @classmethod
    def from_rows(cls, p: int, rows: Sequence[Sequence[int]], cols: int | None = None) -> "Matrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(p, len(rows), cols, tuple(tuple(x % p for x in r) for r in rows))

    @classmethod
    def from_columns(cls, p: int, columns: Sequence[Sequence[int]], rows: int) -> "Matrix":
        return cls.from_rows(p, [[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def identity(cls, p: int, n: int) -> "Matrix":
        return cls(p, n, n, tuple(unit(i, n) for i in range(n)))

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "Matrix":
        return cls(p, rows, cols, tuple((0,) * cols for _ in range(rows)))

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def transpose(self) -> "Matrix":
        return Matrix(self.p, self.cols, self.rows, tuple(zip(*self.data)) if self.rows else ((),) * self.cols)

    def apply(self, v: Sequence[int]) -> Vector:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for {self.rows}x{self.cols} matrix")
        p = self.p
        return tuple(sum(a * b for a, b in zip(r, v)) % p for r in self.data)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows or self.p != other.p:
            raise DimensionError("incompatible matrices")
        cols = other.transpose().data
        p = self.p
        return Matrix(p, self.rows, other.cols,
                      tuple(tuple(sum(a * b for a, b in zip(r, c)) % p for c in cols) for r in self.data))

    def rank(self) -> int:
        return rank_of(self.data, self.p, self.cols)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "Matrix":
        n = self.rows
        if n != self.cols:
            raise DimensionError("only square matrices are invertible")
        aug = [list(r) + list(unit(i, n)) for i, r in enumerate(self.data)]
        red, piv = rref(aug, self.p, n)
        if piv[:n] != list(range(n)) or len(red) < n:
            raise SingularMatrixError("matrix is singular")
        return Matrix(self.p, n, n, tuple(tuple(r[n:]) for r in red))


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_p^ambient_dim stored by its reduced echelon basis,
    which makes equality of dataclasses equality of subspaces."""

    p: int
    ambient_dim: int
    basis: Matrix
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, p: int, ambient_dim: int, vectors: Iterable[Sequence[int]]) -> "Subspace":
        red, piv = rref(vectors, p, ambient_dim)
        return cls(p, ambient_dim, Matrix.from_rows(p, red, ambient_dim), tuple(piv))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.residue(v))

    def residue(self, v: Sequence[int]) -> Vector:
        """Reduce v against the basis; zero exactly on the pivot columns."""
        p = self.p
        w = list(v)
        for row, col in zip(self.basis.data, self.pivots):
            c = w[col]
            if c:
                w = [(a - c * b) % p for a, b in zip(w, row)]
        return tuple(w)

    def image(self, m: Matrix) -> "Subspace":
        return Subspace.span(self.p, m.rows, [m.apply(r) for r in self.basis.data])
