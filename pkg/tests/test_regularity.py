from fractions import Fraction

import pytest

from gaincover import (GainGraph, Graph, GroupSpec, classify_two_ev,
                       complete_bipartite, complete_graph, cycle,
                       distance_partition, drackn_parameters, hypercube,
                       identity_gains, is_antipodal, is_distance_regular,
                       is_equitable, is_walk_regular, lemma_column_counts,
                       lift, octahedron, petersen, srg_parameters)
from gaincover.errors import (ContractViolation, DisconnectedError,
                              InternalConsistencyError, ParameterError)
from gaincover.families import butson_gain, cohen_tits_cover, fourier_butson
from gaincover.regularity import (IntersectionArray, SrgParams,
                                  brute_force_walk_regular, drackn_of_graph,
                                  regularity_certificate,
                                  two_ev_divisibility_obstruction)

from conftest import random_graph


def q3_over_k4_gain():
    return GainGraph(complete_graph(4), GroupSpec.cyclic(2),
                     {(0, 1): (0,), (0, 2): (0,), (0, 3): (0,),
                      (1, 2): (1,), (1, 3): (1,), (2, 3): (1,)})


def generalized_petersen_8_3():
    """Independent construction of the 16-vertex girth-6 double cover of the
    3-cube: outer 8-cycle, spokes, inner edges skipping 3."""
    edges = []
    for i in range(8):
        edges.append((i, (i + 1) % 8))        # outer
        edges.append((i, 8 + i))              # spokes
        edges.append((8 + i, 8 + (i + 3) % 8))  # inner
    return Graph(16, edges)


# ---------------------------------------------------------------------------
# walk regularity


def test_walk_regular_examples():
    assert is_walk_regular(cycle(5))
    assert not is_walk_regular(Graph(3, [(0, 1), (1, 2)]))  # path
    assert is_walk_regular(cohen_tits_cover(4).graph)
    assert is_walk_regular(petersen())


def test_walk_regular_agrees_with_brute_force(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 8), rng.choice([0.3, 0.5, 0.8]))
        assert is_walk_regular(g) == brute_force_walk_regular(g)
        assert is_walk_regular(g, force_all_powers=True) == brute_force_walk_regular(g)


# ---------------------------------------------------------------------------
# partitions


def test_distance_partition_examples():
    assert tuple(len(c) for c in distance_partition(complete_graph(4), 2)) == (1, 3)
    assert tuple(len(c) for c in distance_partition(hypercube(3), 0)) == (1, 3, 3, 1)
    ct3 = cohen_tits_cover(3).graph
    for v in range(ct3.n):
        assert tuple(len(c) for c in distance_partition(ct3, v)) == (1, 3, 6, 5, 1)
    # cross-check against the independently built generalized Petersen graph
    gp = generalized_petersen_8_3()
    from gaincover import char_poly, girth
    assert char_poly(gp) == char_poly(ct3)
    assert girth(gp) == girth(ct3) == 6
    assert tuple(len(c) for c in distance_partition(gp, 0)) == (1, 3, 6, 5, 1)


def test_distance_partition_requires_connected():
    with pytest.raises(DisconnectedError):
        distance_partition(Graph(4, [(0, 1), (2, 3)]), 0)


def test_equitable_singletons_give_adjacency():
    g = petersen()
    quotient = is_equitable(g, [(v,) for v in range(g.n)])
    adj = g.adjacency()
    assert quotient is not None
    for i in range(g.n):
        for j in range(g.n):
            assert quotient[i][j] == adj[i, j]


def test_equitable_bipartition_k33():
    g = complete_bipartite(3, 3)
    assert is_equitable(g, [(0, 1, 2), (3, 4, 5)]) == ((0, 3), (3, 0))
    # unbalanced split of K4 is not equitable
    assert is_equitable(complete_graph(4), [(0,), (1, 2, 3)]) == ((0, 3), (1, 2))
    assert is_equitable(Graph(3, [(0, 1)]), [(0, 2), (1,)]) is None


def test_equitable_validates_partition():
    with pytest.raises(ParameterError):
        is_equitable(complete_graph(3), [(0, 1)])
    with pytest.raises(ParameterError):
        is_equitable(complete_graph(3), [(0, 1, 2), (0,)])


def test_petersen_distance_partition_quotient():
    g = petersen()
    q = is_equitable(g, distance_partition(g, 0))
    assert q == ((0, 3, 0), (1, 0, 2), (0, 1, 2))


# ---------------------------------------------------------------------------
# distance-regularity and strong regularity


def test_distance_regular_petersen():
    arr = is_distance_regular(petersen())
    assert arr is not None
    assert (arr.b, arr.c, arr.d) == ((3, 2), (1, 1), 2)
    assert str(arr) == "{3,2;1,1}"


def test_distance_regular_cycle8():
    arr = is_distance_regular(cycle(8))
    assert (arr.b, arr.c, arr.d) == ((2, 1, 1, 1), (1, 1, 1, 2), 4)


def test_cohen_tits_not_distance_regular():
    assert is_distance_regular(cohen_tits_cover(3).graph) is None


def test_distance_regular_rejects_disconnected():
    with pytest.raises(DisconnectedError):
        is_distance_regular(Graph(4, [(0, 1), (2, 3)]))
    # non-regular connected graph is simply not DRG
    assert is_distance_regular(Graph(3, [(0, 1), (1, 2)])) is None


def test_srg_parameters():
    assert srg_parameters(petersen()) == SrgParams(10, 3, 0, 1)
    for n in (2, 3, 4):
        assert srg_parameters(complete_bipartite(n, n)) == SrgParams(2 * n, n, 0, n)
    assert srg_parameters(complete_graph(5)) is None
    assert srg_parameters(octahedron()) == SrgParams(6, 4, 2, 4)


def test_srg_feasibility_enforced():
    with pytest.raises(ParameterError):
        SrgParams(10, 3, 1, 1)


def test_intersection_array_validation():
    with pytest.raises(ParameterError):
        IntersectionArray((3, 2), (2, 1), 2)  # c_1 must be 1
    with pytest.raises(ParameterError):
        IntersectionArray((3, 4), (1, 1), 2)  # b_1 + c_1 > k


# ---------------------------------------------------------------------------
# antipodality


def test_antipodal_hypercube():
    flag, classes = is_antipodal(hypercube(3))
    assert flag
    assert len(classes) == 4 and all(len(c) == 2 for c in classes)
    assert all(u ^ v == 7 for u, v in classes)


def test_antipodal_petersen_false():
    flag, classes = is_antipodal(petersen())
    assert not flag and classes is None


def test_antipodal_complete_graph_singletons():
    flag, classes = is_antipodal(complete_graph(5))
    assert flag and classes == tuple((v,) for v in range(5))


def test_antipodal_requires_connected():
    with pytest.raises(DisconnectedError):
        is_antipodal(Graph(4, [(0, 1), (2, 3)]))


# ---------------------------------------------------------------------------
# antipodal covers of complete graphs


def test_drackn_q3_over_k4():
    f = q3_over_k4_gain()
    cover = lift(f)
    cert = classify_two_ev(f, cover)
    assert drackn_parameters(cover, cert) == (4, 2, 2)


def test_drackn_absent_for_disconnected_double():
    f = identity_gains(complete_graph(4), GroupSpec.cyclic(2))
    cover = lift(f)
    cert = classify_two_ev(f, cover)
    assert cert.is_two_ev and not cert.cover_connected
    assert drackn_parameters(cover, cert) is None


def test_drackn_requires_complete_base():
    f = identity_gains(petersen(), GroupSpec.cyclic(2))
    cover = lift(f)
    with pytest.raises(ParameterError):
        drackn_parameters(cover, classify_two_ev(f, cover))


def test_drackn_of_graph():
    assert drackn_of_graph(hypercube(3)) == (4, 2, 2)
    assert drackn_of_graph(petersen()) is None
    assert drackn_of_graph(cycle(8)) is None


# ---------------------------------------------------------------------------
# column counts


def test_lemma_counts_q3_over_k4():
    cert = lemma_column_counts(q3_over_k4_gain())
    assert cert.t == Fraction(2) and cert.s is None
    assert cert.integral and cert.verified_counts


def test_lemma_counts_butson_k22():
    cert = lemma_column_counts(butson_gain(fourier_butson(2)))
    assert cert.t == Fraction(0) and cert.s == Fraction(1)
    assert cert.integral and cert.verified_counts


def test_lemma_counts_petersen_obstruction():
    f = identity_gains(petersen(), GroupSpec.cyclic(2))
    cert = lemma_column_counts(f, lam=0)
    assert cert.s == Fraction(1, 2)
    assert not cert.integral
    assert two_ev_divisibility_obstruction(petersen(), 2)
    assert not two_ev_divisibility_obstruction(complete_bipartite(3, 3), 3)


def test_lemma_counts_requires_normalized_anchor():
    f = GainGraph(complete_graph(4), GroupSpec.cyclic(2),
                  {(0, 1): (1,), (0, 2): (0,), (0, 3): (0,),
                   (1, 2): (1,), (1, 3): (1,), (2, 3): (1,)})
    with pytest.raises(ContractViolation):
        lemma_column_counts(f)


def test_lemma_counts_lambda_mismatch_is_error():
    with pytest.raises(InternalConsistencyError):
        lemma_column_counts(q3_over_k4_gain(), lam=5)


# ---------------------------------------------------------------------------
# aggregation


def test_regularity_certificate_for_cover():
    f = q3_over_k4_gain()
    cover = lift(f)
    cert = classify_two_ev(f, cover)
    reg = regularity_certificate(cover, cert)
    assert reg.walk_regular
    assert reg.drg is not None and reg.drg.d == 3
    assert reg.antipodal and reg.drackn == (4, 2, 2)
    assert reg.srg is None
    d = reg.as_dict()
    assert d["drackn"] == [4, 2, 2]


def test_regularity_certificate_disconnected():
    f = identity_gains(complete_graph(3), GroupSpec.cyclic(2))
    reg = regularity_certificate(lift(f), classify_two_ev(f))
    assert reg.walk_regular and not reg.antipodal
    assert reg.drg is None and reg.drackn is None
