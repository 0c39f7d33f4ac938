import pytest
from hypothesis import given, settings, strategies as st

from conftest import classes_up_to, graphs, labeled_graphs
from oracles import brute_force_homs
from raagcoh.graphs import Graph, components, disjoint_union
from raagcoh.groups import catalog, cyclic, dihedral, quaternion8
from raagcoh.quotients import (
    CentralGen,
    Commutator,
    Power,
    Presentation,
    SeparationCertificate,
    count_homs,
    distinguish,
    raag_presentation,
    racg_presentation,
    remark_extension_presentation,
    satisfies,
)

SMALL = [q for p in (2, 3) for q in catalog(p, 16)]


def test_raag_presentations(K2):
    assert raag_presentation(K2).relations == (Commutator(0, 1),)
    assert raag_presentation(Graph(2)).relations == ()
    tri = raag_presentation(Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)]))
    assert len(tri.relations) == 3 and tri.n_generators == 3


def test_racg_presentations(K2):
    assert racg_presentation(Graph(1)).relations == (Power(0, 2),)
    assert racg_presentation(K2).relations == (Commutator(0, 1), Power(0, 2), Power(1, 2))
    assert racg_presentation(Graph(2)).relations == (Power(0, 2), Power(1, 2))


def test_remark_extension_presentations(K2, P3):
    assert remark_extension_presentation(Graph(1), 0).relations == (Power(0, 4), CentralGen(0))
    assert remark_extension_presentation(K2, 0).relations == (
        Commutator(0, 1), Power(1, 2), Power(0, 4), CentralGen(0))
    pres = remark_extension_presentation(P3, 1)
    assert pres.n_generators == 3
    assert set(pres.relations) == {Commutator(0, 1), Commutator(1, 2), Power(0, 2), Power(2, 2),
                                   Power(1, 4), CentralGen(1)}
    with pytest.raises(ValueError):
        remark_extension_presentation(K2, 2)


def test_presentation_validation():
    with pytest.raises(ValueError):
        Presentation(2, (Commutator(0, 2),))
    with pytest.raises(ValueError):
        Presentation(1, (Power(0, 0),))


def test_count_examples(K2):
    assert count_homs(raag_presentation(K2), cyclic(4)) == 16
    assert count_homs(raag_presentation(Graph(2)), dihedral(4)) == 64
    assert count_homs(raag_presentation(K2), quaternion8()) == 40
    assert count_homs(racg_presentation(Graph(1)), cyclic(4)) == 2
    assert count_homs(remark_extension_presentation(Graph(1), 0), cyclic(4)) == 4


def test_q8_commuting_pairs_by_centralizers(K2):
    q = quaternion8()
    by_centralizers = sum(bin(c).count("1") for c in q.centralizers)
    assert by_centralizers == 2 * 8 + 6 * 4 == brute_force_homs(raag_presentation(K2), q)


@pytest.mark.parametrize("q", SMALL, ids=lambda q: q.name)
def test_count_matches_brute_force_3_generators(q):
    for n in range(4):
        for g in labeled_graphs(n):
            for pres in [raag_presentation(g), racg_presentation(g)] + \
                    [remark_extension_presentation(g, w) for w in range(n)]:
                assert count_homs(pres, q) == brute_force_homs(pres, q)
                assert count_homs(pres, q, decompose=False) == brute_force_homs(pres, q)


def test_restricted_count(K2):
    z4 = cyclic(4)
    order4 = [a for a in range(4) if z4.element_order(a) == 4]
    pres = remark_extension_presentation(K2, 0)
    allowed = {0: order4, 1: [z4.identity]}
    assert count_homs(pres, z4, allowed) == brute_force_homs(pres, z4, allowed) == 2


def test_threads_do_not_change_counts(P4):
    q = dihedral(4)
    pres = raag_presentation(P4)
    assert count_homs(pres, q, threads=2) == count_homs(pres, q)


@settings(max_examples=25)
@given(graphs(max_n=4), st.data())
def test_isomorphism_invariance(g, data):
    perm = data.draw(st.permutations(range(g.n)))
    h = g.permuted(perm)
    for q in catalog(2, 8):
        assert count_homs(raag_presentation(g), q) == count_homs(raag_presentation(h), q)
        assert count_homs(racg_presentation(g), q) == count_homs(racg_presentation(h), q)


@settings(max_examples=25)
@given(graphs(max_n=3, min_n=1), graphs(max_n=2, min_n=1))
def test_multiplicative_over_disjoint_union(g, h):
    gh = disjoint_union(g, h)
    for q in catalog(2, 16):
        whole = count_homs(raag_presentation(gh), q, decompose=False)
        assert whole == count_homs(raag_presentation(g), q) * count_homs(raag_presentation(h), q)


@settings(max_examples=25)
@given(graphs(max_n=6))
def test_abelian_target_counts_everything(g):
    for p in (2, 3):
        assert count_homs(raag_presentation(g), cyclic(p)) == p**g.n


def test_remark_witness_and_quotient_compatibility():
    for g in classes_up_to(3):
        for w in range(g.n):
            pres = remark_extension_presentation(g, w)
            z4 = cyclic(4)
            allowed = {v: ([1, 3] if v == w else [0]) for v in range(g.n)}
            assert count_homs(pres, z4, allowed) >= 2
            assert satisfies(pres, z4, [1 if v == w else 0 for v in range(g.n)])
            for q in catalog(2, 8):
                assert count_homs(racg_presentation(g), q) <= count_homs(pres, q)


def test_distinguish_examples(P4, star3, K2):
    cert = distinguish(P4, star3, "raag", 2, 16)
    assert cert.verdict == "distinct"
    assert cert.method in ("hom-count", "cohomology")
    assert cert.count1 != cert.count2
    assert distinguish(P4, P4, "raag", 2, 16) == SeparationCertificate("not-separated", "absent")
    cert = distinguish(K2, Graph(2), "raag", 2, 8)
    assert (cert.method, cert.group, cert.count1, cert.count2) == ("hom-count", "D8", 40, 64)


def test_distinguish_cohomology_fallback(P4, star3):
    # no group of order <= 4 is nonabelian, so hom counts agree
    cert = distinguish(P4, star3, "raag", 2, 4)
    assert cert.verdict == "distinct" and cert.method == "cohomology"
    assert [c1 == c2 for _, c1, c2 in cert.tried] == [True] * 3
    cert = distinguish(P4, star3, "racg", 2, 1)
    assert cert.method == "cohomology"


def test_distinguish_argument_errors(P4):
    with pytest.raises(ValueError):
        distinguish(P4, P4, "racg", 3, 16)
    with pytest.raises(ValueError):
        distinguish(P4, P4, "raag", 4, 16)
    with pytest.raises(ValueError):
        distinguish(P4, P4, "other", 2, 16)


def test_certificate_invariant():
    with pytest.raises(ValueError):
        SeparationCertificate("distinct", "hom-count", "Z2", 4, 4)
