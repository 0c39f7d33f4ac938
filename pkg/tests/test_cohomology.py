import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import classes_up_to, graphs
from raagcoh.cohomology import (
    BasisChange,
    CupAlgebra,
    apply_basis_change,
    cup,
    cup_rank,
    format_algebra,
    parse_algebra,
    raag_algebra,
    racg_algebra,
    random_scramble,
    reduce_racg,
    sigma_subspace,
)
from raagcoh.errors import DimensionError, MalformedAlgebraError, SingularMatrixError
from raagcoh.graphs import Graph, degree
from raagcoh.linalg import Matrix, Subspace, unit
from raagcoh.reconstruction import algebras_isomorphic


def test_raag_algebra_k2_mod3(K2):
    a = raag_algebra(K2, 3)
    assert (a.dim1, a.dim2) == (2, 1)
    assert a.tensor[0][1] == (1,) and a.tensor[1][0] == (2,)
    assert a.tensor[0][0] == a.tensor[1][1] == (0,)


def test_raag_algebra_empty_graph():
    a = raag_algebra(Graph(3), 2)
    assert a.dim2 == 0
    assert all(x == () for row in a.tensor for x in row)


def test_raag_algebra_triangle_mod2():
    a = raag_algebra(Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)]), 2)
    assert a.dim2 == 3
    off = {a.tensor[i][j] for i in range(3) for j in range(3) if i != j}
    assert off == {unit(k, 3) for k in range(3)}
    assert all(a.tensor[i][j] == a.tensor[j][i] for i in range(3) for j in range(3))


def test_raag_algebra_rejects_nonprime(K2):
    with pytest.raises(ValueError):
        raag_algebra(K2, 4)


def test_racg_algebra_shapes(K2):
    assert racg_algebra(K2).dim2 == 3
    pt = racg_algebra(Graph(1))
    assert (pt.dim1, pt.dim2) == (1, 1) and pt.tensor[0][0] == (1,)
    e = racg_algebra(Graph(4))
    assert e.dim2 == 4
    assert all(any(e.tensor[i][j]) == (i == j) for i in range(4) for j in range(4))


def test_algebra_invariants_checked():
    with pytest.raises(MalformedAlgebraError):
        CupAlgebra(3, 2, 1, (((0,), (1,)), ((1,), (0,))), "raag")
    with pytest.raises(MalformedAlgebraError):
        CupAlgebra(2, 1, 1, (((1,),),), "raag")
    with pytest.raises(ValueError):
        CupAlgebra(3, 1, 1, (((1,),),), "racg")
    with pytest.raises(DimensionError):
        CupAlgebra(2, 2, 1, (((0,),),), "raag")


def test_cup_examples(K2):
    a = raag_algebra(K2, 3)
    assert cup(a, (1, 0), (0, 1)) == (1,)
    assert cup(a, (0, 0), (2, 1)) == (0,)
    with pytest.raises(DimensionError):
        cup(a, (1,), (0, 1))


@settings(max_examples=40)
@given(graphs(max_n=6), st.sampled_from([2, 3, 5]), st.randoms(use_true_random=False))
def test_cup_alternating(g, p, rnd):
    a = raag_algebra(g, p)
    for _ in range(25):
        x = [rnd.randrange(p) for _ in range(g.n)]
        assert not any(cup(a, x, x))


@settings(max_examples=40)
@given(graphs(max_n=6), st.sampled_from([2, 3, 5]), st.randoms(use_true_random=False))
def test_cup_bilinear(g, p, rnd):
    a = raag_algebra(g, p)
    x, y, z = ([rnd.randrange(p) for _ in range(g.n)] for _ in range(3))
    c = rnd.randrange(p)
    xy = [(c * s + t) % p for s, t in zip(x, y)]
    lhs = cup(a, xy, z)
    rhs = tuple((c * s + t) % p for s, t in zip(cup(a, x, z), cup(a, y, z)))
    assert lhs == rhs


def test_cup_rank_path(P3):
    a = raag_algebra(P3, 2)
    assert cup_rank(a, (0, 1, 0)) == 2
    assert cup_rank(a, (1, 0, 0)) == 1
    assert cup_rank(a, (0, 0, 0)) == 0


@settings(max_examples=60)
@given(graphs(max_n=7), st.sampled_from([2, 3, 5]))
def test_rank_equals_degree(g, p):
    a = raag_algebra(g, p)
    assert all(cup_rank(a, unit(v, g.n)) == degree(g, v) for v in range(g.n))
    assert a.dim2 == len(g.edges)
    assert racg_algebra(g).dim2 == len(g.edges) + g.n


def test_identity_basis_change(C4):
    a = raag_algebra(C4, 3)
    assert apply_basis_change(a, BasisChange.identity(3, 4, 4)) == a


def test_swap_basis_change_k2(K2):
    swap = Matrix.from_rows(3, [[0, 1], [1, 0]])
    b = apply_basis_change(raag_algebra(K2, 3), BasisChange(swap, Matrix.identity(3, 1)))
    # cup(e1, e0) = -e_01
    assert b.tensor[0][1] == (2,) and b.tensor[1][0] == (1,)
    b2 = apply_basis_change(raag_algebra(K2, 2), BasisChange(Matrix.from_rows(2, [[0, 1], [1, 0]]),
                                                              Matrix.identity(2, 1)))
    assert b2 == raag_algebra(K2, 2)


def test_basis_change_rejects_singular(K2):
    a = raag_algebra(K2, 2)
    with pytest.raises(SingularMatrixError):
        apply_basis_change(a, BasisChange(Matrix.from_rows(2, [[1, 1], [1, 1]]), Matrix.identity(2, 1)))
    with pytest.raises(DimensionError):
        apply_basis_change(a, BasisChange.identity(2, 3, 1))


@settings(max_examples=30)
@given(graphs(max_n=5), st.sampled_from([2, 3]), st.integers(0, 2**64 - 1), st.integers(0, 2**64 - 1))
def test_basis_change_is_group_action(g, p, s1, s2):
    a = raag_algebra(g, p)
    a1, c1 = random_scramble(a, s1)
    a12, c2 = random_scramble(a1, s2)
    assert apply_basis_change(a, c1.then(c2)) == a12
    assert apply_basis_change(a1, c1.inverse()) == a


def test_scramble_deterministic(C4):
    a = raag_algebra(C4, 3)
    assert random_scramble(a, 7) == random_scramble(a, 7)
    assert random_scramble(a, 7)[0] != random_scramble(a, 8)[0]


def test_scramble_degenerate():
    a = raag_algebra(Graph(0), 2)
    assert random_scramble(a, 5)[0] == a


def test_sigma_examples(K2):
    assert sigma_subspace(racg_algebra(K2)).dim == 2
    assert sigma_subspace(racg_algebra(Graph(1))).dim == 1
    with pytest.raises(ValueError):
        sigma_subspace(raag_algebra(K2, 2))


def test_sigma_is_full_squaring_image(P3):
    # squaring is additive mod 2, so the span of basis squares is the image
    a, _ = random_scramble(racg_algebra(P3), 11)
    image = {cup(a, x, x) for x in itertools.product(range(2), repeat=3)}
    sigma = sigma_subspace(a)
    assert len(image) == 2 ** sigma.dim
    assert all(sigma.contains(v) for v in image)


@settings(max_examples=30)
@given(graphs(max_n=6), st.integers(0, 2**64 - 1))
def test_sigma_commutes_with_basis_change(g, seed):
    a = racg_algebra(g)
    b, c = random_scramble(a, seed)
    assert sigma_subspace(b) == sigma_subspace(a).image(c.P2)
    assert sigma_subspace(b).dim == g.n


def test_sigma_dimension_exhaustive_7():
    for g in classes_up_to(7):
        assert sigma_subspace(racg_algebra(g)).dim == g.n


def test_reduce_racg_point():
    r = reduce_racg(racg_algebra(Graph(1)))
    assert r == raag_algebra(Graph(1), 2)


def test_reduce_racg_unscrambled_equals_raag(P3):
    assert reduce_racg(racg_algebra(P3)) == raag_algebra(P3, 2)


def test_reduce_racg_isomorphic_to_raag_exhaustive():
    for g in classes_up_to(5):
        assert algebras_isomorphic(reduce_racg(racg_algebra(g)), raag_algebra(g, 2)) is not None
        scrambled, _ = random_scramble(racg_algebra(g), 3)
        assert algebras_isomorphic(reduce_racg(scrambled), raag_algebra(g, 2)) is not None


def test_reduce_racg_rejects_bad_sigma():
    # symmetric but with zero squares: not the algebra of any RACG
    a = CupAlgebra(2, 2, 1, (((0,), (1,)), ((1,), (0,))), "racg")
    with pytest.raises(MalformedAlgebraError):
        reduce_racg(a)
    with pytest.raises(ValueError):
        reduce_racg(raag_algebra(Graph(2), 2))


@pytest.mark.parametrize("mode", ["raag", "racg"])
def test_algebra_text_round_trip(C4, mode):
    a = racg_algebra(C4) if mode == "racg" else raag_algebra(C4, 3)
    s, _ = random_scramble(a, 99)
    assert parse_algebra(format_algebra(s)) == s
