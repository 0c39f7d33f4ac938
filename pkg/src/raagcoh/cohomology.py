"""Degree one and two cup-product algebras of RAAGs and RACGs over F_p.

A :class:`CupAlgebra` records H^1 = F_p^dim1, H^2 = F_p^dim2 and the values
``tensor[i][j] = e_i cup e_j`` on a basis of H^1. For A(G) the product is
alternating; for C(G) (only over F_2) it is symmetric with squares
``v* cup v*`` spanning an extra copy of F_2^|V|.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from raagcoh.errors import (
    DimensionError,
    GraphFormatError,
    MalformedAlgebraError,
    SingularMatrixError,
)
from raagcoh.graphs import Graph
from raagcoh.linalg import Matrix, Subspace, Vector, check_prime, rank_of, unit
from raagcoh.rng import SplitMix64

RAAG = "raag"
RACG = "racg"


@dataclass(frozen=True)
class CupAlgebra:
    p: int
    dim1: int
    dim2: int
    tensor: tuple[tuple[Vector, ...], ...]
    flavor: str = RAAG

    def __post_init__(self):
        check_prime(self.p)
        if self.flavor not in (RAAG, RACG):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if self.flavor == RACG and self.p != 2:
            raise ValueError("RACG algebras are defined over F_2 only")
        t = self.tensor
        if len(t) != self.dim1 or any(len(row) != self.dim1 for row in t):
            raise DimensionError("tensor must be dim1 x dim1")
        if any(len(x) != self.dim2 for row in t for x in row):
            raise DimensionError("tensor entries must lie in F_p^dim2")
        p = self.p
        for i in range(self.dim1):
            for j in range(self.dim1):
                tij, tji = t[i][j], t[j][i]
                if self.flavor == RAAG:
                    if i == j and any(tij):
                        raise MalformedAlgebraError(f"alternating tensor has nonzero square at {i}")
                    if any((a + b) % p for a, b in zip(tij, tji)):
                        raise MalformedAlgebraError(f"tensor not antisymmetric at ({i},{j})")
                elif tij != tji:
                    raise MalformedAlgebraError(f"tensor not symmetric at ({i},{j})")

    def entry(self, i: int, j: int) -> Vector:
        return self.tensor[i][j]


@dataclass(frozen=True)
class BasisChange:
    """P1 acts on H^1 (its columns are the new basis), P2 on H^2."""

    P1: Matrix
    P2: Matrix

    def inverse(self) -> "BasisChange":
        return BasisChange(self.P1.inverse(), self.P2.inverse())

    def then(self, other: "BasisChange") -> "BasisChange":
        """The change equivalent to applying self, then other."""
        return BasisChange(self.P1 @ other.P1, other.P2 @ self.P2)

    @classmethod
    def identity(cls, p: int, dim1: int, dim2: int) -> "BasisChange":
        return cls(Matrix.identity(p, dim1), Matrix.identity(p, dim2))


def _zero(m: int) -> Vector:
    return (0,) * m


def _edge_index(g: Graph) -> dict[tuple[int, int], int]:
    return {e: k for k, e in enumerate(g.sorted_edges())}


def raag_algebra(g: Graph, p: int) -> CupAlgebra:
    check_prime(p)
    n, edges = g.n, _edge_index(g)
    m = len(edges)
    t = [[_zero(m)] * n for _ in range(n)]
    for (u, v), k in edges.items():
        # orientation: +e_uv when u < v
        t[u][v] = unit(k, m)
        t[v][u] = tuple((-x) % p for x in unit(k, m))
    return CupAlgebra(p, n, m, tuple(map(tuple, t)), RAAG)


def racg_algebra(g: Graph) -> CupAlgebra:
    n, edges = g.n, _edge_index(g)
    m = len(edges) + n
    t = [[_zero(m)] * n for _ in range(n)]
    for (u, v), k in edges.items():
        t[u][v] = t[v][u] = unit(k, m)
    for v in range(n):
        t[v][v] = unit(len(edges) + v, m)
    return CupAlgebra(2, n, m, tuple(map(tuple, t)), RACG)


def _check_vec(a: CupAlgebra, x: Sequence[int]) -> None:
    if len(x) != a.dim1:
        raise DimensionError(f"vector of length {len(x)}, expected dim1={a.dim1}")


def left_matrix(a: CupAlgebra, x: Sequence[int]) -> list[list[int]]:
    """Rows are x cup e_j for j < dim1."""
    _check_vec(a, x)
    p, m = a.p, a.dim2
    rows = []
    for j in range(a.dim1):
        acc = [0] * m
        for i, c in enumerate(x):
            if c:
                tij = a.tensor[i][j]
                for k in range(m):
                    if tij[k]:
                        acc[k] += c * tij[k]
        rows.append([v % p for v in acc])
    return rows


def cup(a: CupAlgebra, x: Sequence[int], y: Sequence[int]) -> Vector:
    _check_vec(a, x)
    _check_vec(a, y)
    p, m = a.p, a.dim2
    acc = [0] * m
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = a.tensor[i]
        for j, yj in enumerate(y):
            if yj:
                c = xi * yj
                for k, t in enumerate(row[j]):
                    if t:
                        acc[k] += c * t
    return tuple(v % p for v in acc)


def cup_rank(a: CupAlgebra, x: Sequence[int]) -> int:
    """Rank of the linear map y -> x cup y."""
    return rank_of(left_matrix(a, x), a.p, a.dim2)


def apply_basis_change(a: CupAlgebra, c: BasisChange) -> CupAlgebra:
    P1, P2 = c.P1, c.P2
    if (P1.rows, P1.cols) != (a.dim1, a.dim1) or (P2.rows, P2.cols) != (a.dim2, a.dim2):
        raise DimensionError("basis change does not match algebra dimensions")
    if P1.p != a.p or P2.p != a.p:
        raise DimensionError("basis change over a different field")
    if not (P1.is_invertible() and P2.is_invertible()):
        raise SingularMatrixError("basis change matrices must be invertible")
    cols = [P1.column(i) for i in range(a.dim1)]
    t = tuple(
        tuple(P2.apply(cup(a, cols[i], cols[j])) for j in range(a.dim1))
        for i in range(a.dim1)
    )
    return CupAlgebra(a.p, a.dim1, a.dim2, t, a.flavor)


def random_invertible(rng: SplitMix64, p: int, n: int) -> Matrix:
    """Uniform invertible n x n matrix: draw entries row-major, retry until
    invertible."""
    while True:
        rows = [[rng.below(p) for _ in range(n)] for _ in range(n)]
        m = Matrix.from_rows(p, rows, n)
        if m.is_invertible():
            return m


def random_scramble(a: CupAlgebra, seed: int) -> tuple[CupAlgebra, BasisChange]:
    rng = SplitMix64(seed)
    P1 = random_invertible(rng, a.p, a.dim1)
    P2 = random_invertible(rng, a.p, a.dim2)
    c = BasisChange(P1, P2)
    return apply_basis_change(a, c), c


def sigma_subspace(a: CupAlgebra) -> Subspace:
    """Span of the squares e_i cup e_i. Squaring is additive mod 2, so this
    is the whole image of x -> x cup x."""
    if a.flavor != RACG or a.p != 2:
        raise ValueError("squaring subspace is only defined for RACG algebras over F_2")
    return Subspace.span(2, a.dim2, [a.tensor[i][i] for i in range(a.dim1)])


def reduce_racg(a: CupAlgebra) -> CupAlgebra:
    """Pass to H^2 / Sigma, recovering the RAAG-type algebra over F_2.

    Quotient coordinates are the non-pivot coordinates of Sigma's reduced
    echelon basis.
    """
    sigma = sigma_subspace(a)
    if sigma.dim != a.dim1:
        raise MalformedAlgebraError(
            f"squaring subspace has dimension {sigma.dim}, expected {a.dim1}"
        )
    keep = [k for k in range(a.dim2) if k not in set(sigma.pivots)]

    def project(v):
        r = sigma.residue(v)
        return tuple(r[k] for k in keep)

    t = tuple(tuple(project(x) for x in row) for row in a.tensor)
    return CupAlgebra(2, a.dim1, len(keep), t, RAAG)


# -- text and JSON forms --------------------------------------------------

def format_algebra(a: CupAlgebra) -> str:
    """Header line, then ``cup i j v_0 .. v_{dim2-1}`` for each nonzero entry
    with i < j (RAAG) or i <= j (RACG)."""
    lines = [f"algebra p={a.p} flavor={a.flavor} dim1={a.dim1} dim2={a.dim2}"]
    for i in range(a.dim1):
        for j in range(i if a.flavor == RACG else i + 1, a.dim1):
            x = a.tensor[i][j]
            if any(x):
                lines.append(f"cup {i} {j} " + " ".join(map(str, x)))
    return "\n".join(lines) + "\n"


def parse_algebra(text: str) -> CupAlgebra:
    header = None
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if header is None:
                if parts[0] != "algebra":
                    raise GraphFormatError("expected 'algebra' header", lineno)
                kv = dict(tok.split("=", 1) for tok in parts[1:])
                header = (int(kv["p"]), kv["flavor"], int(kv["dim1"]), int(kv["dim2"]))
                continue
            if parts[0] != "cup":
                raise GraphFormatError(f"expected 'cup' line, got {line!r}", lineno)
            i, j = int(parts[1]), int(parts[2])
            vec = tuple(int(x) for x in parts[3:])
        except (KeyError, ValueError, IndexError):
            raise GraphFormatError(f"malformed line {line!r}", lineno) from None
        if len(vec) != header[3] or not (0 <= i < header[2] and 0 <= j < header[2]):
            raise GraphFormatError("cup entry does not fit declared dimensions", lineno)
        if (i, j) in entries:
            raise GraphFormatError(f"duplicate entry {i} {j}", lineno)
        entries[(i, j)] = vec
    if header is None:
        raise GraphFormatError("missing 'algebra' header", 1)
    p, flavor, n, m = header
    return algebra_from_entries(p, flavor, n, m, entries)


def algebra_from_entries(p, flavor, n, m, entries) -> CupAlgebra:
    """Build from upper-triangle entries, filling the rest by symmetry."""
    t = [[_zero(m)] * n for _ in range(n)]
    for (i, j), vec in entries.items():
        if i > j:
            i, j = j, i
            vec = tuple(vec) if flavor == RACG else tuple((-x) % p for x in vec)
        vec = tuple(x % p for x in vec)
        t[i][j] = vec
        if i != j:
            t[j][i] = vec if flavor == RACG else tuple((-x) % p for x in vec)
    return CupAlgebra(p, n, m, tuple(map(tuple, t)), flavor)


def algebra_to_json(a: CupAlgebra) -> dict:
    return {"p": a.p, "flavor": a.flavor, "dim1": a.dim1, "dim2": a.dim2,
            "tensor": [[list(x) for x in row] for row in a.tensor]}


def matrix_to_json(m: Matrix) -> list[list[int]]:
    return [list(r) for r in m.data]
