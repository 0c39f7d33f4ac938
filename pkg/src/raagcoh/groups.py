"""Small finite groups given by multiplication tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import lcm, prod
from typing import Callable, Hashable, Sequence

from raagcoh.linalg import check_prime, is_prime


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    name: str
    # bitmask of the centralizer of each element
    centralizers: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n, t = self.order, self.table
        if n < 1 or len(t) != n or any(len(r) != n for r in t):
            raise ValueError("table must be order x order")
        if any(not 0 <= x < n for r in t for x in r):
            raise ValueError("table entries out of range")
        e = self.identity
        if any(t[e][x] != x or t[x][e] != x for x in range(n)):
            raise ValueError(f"{e} is not an identity")
        for r in t:
            if sorted(r) != list(range(n)):
                raise ValueError("table row is not a permutation")
        if any(e not in r for r in t):
            raise ValueError("missing inverses")
        for a in range(n):
            ta = t[a]
            for b in range(n):
                tab = ta[b]
                tb = t[b]
                for c in range(n):
                    if t[tab][c] != ta[tb[c]]:
                        raise ValueError(f"not associative at ({a},{b},{c})")
        cent = []
        for a in range(n):
            mask = 0
            for b in range(n):
                if t[a][b] == t[b][a]:
                    mask |= 1 << b
            cent.append(mask)
        object.__setattr__(self, "centralizers", tuple(cent))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, a: int, k: int) -> int:
        x = self.identity
        for _ in range(k):
            x = self.table[x][a]
        return x

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        full = (1 << self.order) - 1
        return all(c == full for c in self.centralizers)

    def center(self) -> list[int]:
        full = (1 << self.order) - 1
        return [a for a in range(self.order) if self.centralizers[a] == full]

    def exponent(self) -> int:
        out = 1
        for a in range(self.order):
            out = lcm(out, self.element_order(a))
        return out


def from_elements(elements: Sequence[Hashable], mul: Callable, identity: Hashable, name: str) -> FiniteGroup:
    index = {x: i for i, x in enumerate(elements)}
    table = tuple(tuple(index[mul(a, b)] for b in elements) for a in elements)
    return FiniteGroup(len(elements), table, index[identity], name)


@lru_cache(maxsize=None)
def cyclic(k: int) -> FiniteGroup:
    if k < 1:
        raise ValueError("cyclic group order must be >= 1")
    return from_elements(range(k), lambda a, b: (a + b) % k, 0, f"Z{k}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    m = h.order
    table = tuple(
        tuple(g.table[a1][b1] * m + h.table[a2][b2] for b1 in range(g.order) for b2 in range(m))
        for a1 in range(g.order) for a2 in range(m)
    )
    return FiniteGroup(g.order * m, table, g.identity * m + h.identity, f"{g.name}x{h.name}")


@lru_cache(maxsize=None)
def dihedral(k: int) -> FiniteGroup:
    """Symmetries of a k-gon, order 2k; elements r^a s^b."""
    if k < 1:
        raise ValueError("dihedral parameter must be >= 1")
    elems = [(a, b) for a in range(k) for b in range(2)]

    def mul(x, y):
        a, b = x
        c, d = y
        return ((a + (c if b == 0 else -c)) % k, (b + d) % 2)

    return from_elements(elems, mul, (0, 0), f"D{2 * k}")


@lru_cache(maxsize=None)
def quaternion8() -> FiniteGroup:
    # unit quaternions (w, x, y, z) with one nonzero coordinate +-1
    elems = []
    for i in range(4):
        for s in (1, -1):
            q = [0, 0, 0, 0]
            q[i] = s
            elems.append(tuple(q))

    def mul(q, r):
        a1, b1, c1, d1 = q
        a2, b2, c2, d2 = r
        return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)

    return from_elements(elems, mul, (1, 0, 0, 0), "Q8")


@lru_cache(maxsize=None)
def heisenberg(p: int) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over F_p, order p^3."""
    if not is_prime(p) or p == 2:
        raise ValueError("heisenberg(p) needs an odd prime p")
    elems = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]

    def mul(x, y):
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p)

    return from_elements(elems, mul, (0, 0, 0), f"Heis{p}")


def _product(*groups: FiniteGroup) -> FiniteGroup:
    out = groups[0]
    for g in groups[1:]:
        out = direct_product(out, g)
    return out


def _catalog_2() -> list[tuple[int, Callable[[], FiniteGroup]]]:
    Z, D, Q = cyclic, dihedral, quaternion8
    specs = [(k, lambda k=k: Z(k)) for k in (2, 4, 8, 16, 32)]
    specs += [(8, lambda: D(4)), (16, lambda: D(8)), (32, lambda: D(16)), (8, Q)]
    specs += [(2**r, lambda r=r: _product(*(Z(2),) * r)) for r in range(2, 7)]
    for factors in [(2, 4), (2, 8), (4, 4), (2, 2, 4), (2, 16), (4, 8), (2, 2, 8),
                    (2, 4, 4), (8, 8), (4, 4, 4)]:
        specs.append((prod(factors), lambda fs=factors: _product(*(Z(k) for k in fs))))
    for base in (Q, lambda: D(4), lambda: D(8)):
        order = base().order
        for extra in [(2,), (4,), (2, 2), (8,)]:
            if order * prod(extra) <= 64:
                specs.append((order * prod(extra),
                              lambda b=base, ex=extra: _product(b(), *(Z(k) for k in ex))))
    specs += [(64, lambda: _product(Q(), Q())), (64, lambda: _product(D(4), D(4)))]
    return specs


def _catalog_odd(p: int) -> list[tuple[int, Callable[[], FiniteGroup]]]:
    Z = cyclic
    return [
        (p, lambda: Z(p)), (p**2, lambda: Z(p * p)), (p**3, lambda: Z(p**3)),
        (p**2, lambda: _product(Z(p), Z(p))), (p**3, lambda: heisenberg(p)),
        (p**3, lambda: _product(Z(p), Z(p * p))),
    ]


@lru_cache(maxsize=None)
def catalog(p: int, order_bound: int) -> tuple[FiniteGroup, ...]:
    """Catalog p-groups of order <= order_bound, sorted by order then name.

    For p = 2 the catalog stops at order 64; for odd p at p^3.
    """
    check_prime(p)
    specs = _catalog_2() if p == 2 else _catalog_odd(p)
    groups = [build() for order, build in specs if order <= order_bound]
    return tuple(sorted(groups, key=lambda g: (g.order, g.name)))


def group_by_name(p: int, name: str) -> FiniteGroup:
    for g in catalog(p, 64 if p == 2 else p**3):
        if g.name == name:
            return g
    raise KeyError(name)
