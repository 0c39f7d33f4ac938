"""Recover a graph from an abstract alternating cup-product algebra.

For a RAAG algebra, the vertex duals f_v form a basis of H^1 with

* rank(f_v cup -) = deg(v),
* f_v cup f_w != 0 exactly when v, w are adjacent,
* the nonzero products f_v cup f_w (v < w) forming a basis of H^2.

Conversely any basis with the last two properties presents the algebra as
``raag_algebra(G, p)`` for the graph G it defines. :func:`reconstruct`
searches projective classes of H^1 for such a basis and then verifies the
resulting basis change entrywise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from raagcoh.cohomology import (
    RAAG,
    BasisChange,
    CupAlgebra,
    apply_basis_change,
    cup,
    cup_rank,
    raag_algebra,
)
from raagcoh.errors import EnumerationCapError, MalformedAlgebraError, VerificationError
from raagcoh.graphs import Graph, IsoWitness, are_isomorphic
from raagcoh.linalg import Echelon, Matrix, Vector

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class ReconstructionResult:
    graph: Graph
    vertex_classes: tuple[Vector, ...]
    witness: BasisChange


def projective_count(p: int, dim: int) -> int:
    return (p**dim - 1) // (p - 1)


def projective_classes(p: int, dim: int, cap: int = DEFAULT_CAP) -> Iterator[Vector]:
    """One representative per line of F_p^dim, first nonzero entry 1, in
    lexicographic order."""
    required = projective_count(p, dim)
    if required > cap:
        raise EnumerationCapError(required, cap)
    for lead in range(dim - 1, -1, -1):
        prefix = (0,) * lead + (1,)
        for tail in product(range(p), repeat=dim - lead - 1):
            yield prefix + tail


def _search(a: CupAlgebra, cands: list[Vector], ranks: list[int]) -> Optional[list[int]]:
    n, m, p = a.dim1, a.dim2, a.p
    total = len(cands)
    target_sum = 2 * m
    cup_cache: dict[tuple[int, int], Vector] = {}

    def product_of(i: int, j: int) -> Vector:
        key = (i, j) if i < j else (j, i)
        v = cup_cache.get(key)
        if v is None:
            v = cup(a, cands[key[0]], cands[key[1]])
            cup_cache[key] = v
        return v

    chosen: list[int] = []
    counts: list[int] = []

    def extend(start: int, span: Echelon, prods: Echelon, rsum: int) -> bool:
        k = n - len(chosen)
        if k == 0:
            return rsum == target_sum and len(prods) == m and all(
                c == ranks[f] for c, f in zip(counts, chosen))
        for idx in range(start, total - k + 1):
            r = ranks[idx]
            # ranks are sorted, so every later candidate overshoots as well
            if rsum + r * k > target_sum:
                break
            if r > n - 1:
                break
            new_span = span.try_add(cands[idx])
            if new_span is None:
                continue
            nbrs = [pos for pos, f in enumerate(chosen) if any(product_of(f, idx))]
            deg = len(nbrs)
            if deg > r or r - deg > k - 1:
                continue
            ok = True
            for pos, f in enumerate(chosen):
                c = counts[pos] + (pos in nbrs)
                if c > ranks[f] or ranks[f] - c > k - 1:
                    ok = False
                    break
            if not ok:
                continue
            new_prods = prods
            for pos in nbrs:
                new_prods = new_prods.try_add(product_of(chosen[pos], idx))
                if new_prods is None:
                    break
            if new_prods is None:
                continue
            for pos in nbrs:
                counts[pos] += 1
            chosen.append(idx)
            counts.append(deg)
            if extend(idx + 1, new_span, new_prods, rsum + r):
                return True
            chosen.pop()
            counts.pop()
            for pos in nbrs:
                counts[pos] -= 1
        return False

    if extend(0, Echelon(p), Echelon(p), 0):
        return chosen
    return None


def reconstruct(a: CupAlgebra, cap: int = DEFAULT_CAP) -> ReconstructionResult:
    if a.flavor != RAAG:
        raise ValueError("reconstruct expects an alternating algebra; reduce RACG input first")
    n, p = a.dim1, a.p
    if n == 0:
        if a.dim2:
            raise MalformedAlgebraError("H^1 = 0 but H^2 != 0")
        return ReconstructionResult(Graph(0), (), BasisChange.identity(p, 0, 0))
    cands = list(projective_classes(p, n, cap))
    ranks = [cup_rank(a, x) for x in cands]
    order = sorted(range(len(cands)), key=lambda i: (ranks[i], cands[i]))
    cands = [cands[i] for i in order]
    ranks = [ranks[i] for i in order]

    picked = _search(a, cands, ranks)
    if picked is None:
        raise MalformedAlgebraError("no basis of H^1 presents this algebra as a RAAG algebra")

    classes = tuple(cands[i] for i in picked)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if any(cup(a, classes[u], classes[v]))]
    graph = Graph.from_edges(n, edges)
    witness = BasisChange(
        Matrix.from_columns(p, classes, n).inverse(),
        Matrix.from_columns(p, [cup(a, classes[u], classes[v]) for u, v in graph.sorted_edges()], a.dim2),
    )
    if apply_basis_change(raag_algebra(graph, p), witness) != a:
        raise VerificationError("reconstruction witness does not reproduce the input algebra")
    return ReconstructionResult(graph, classes, witness)


def algebras_isomorphic(a: CupAlgebra, b: CupAlgebra, cap: int = DEFAULT_CAP) -> Optional[IsoWitness]:
    """Isomorphism of the defining graphs, which by cohomological rigidity
    is equivalent to isomorphism of the algebras."""
    if a.p != b.p:
        raise ValueError("algebras over different fields")
    if a.flavor != RAAG or b.flavor != RAAG:
        raise ValueError("both algebras must be alternating")
    if (a.dim1, a.dim2) != (b.dim1, b.dim2):
        return None
    return are_isomorphic(reconstruct(a, cap).graph, reconstruct(b, cap).graph)
