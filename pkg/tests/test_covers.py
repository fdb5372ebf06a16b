from __future__ import annotations

import random

import pytest

from hurwitzdegen import (BoundaryDatum, MarkedComponent, MarkedPoint,
                          PermGroup, arithmetic_genus, arithmetic_genus_by_component,
                          build_cover, classify_node, cover_to_dot, hurwitz_to_datum,
                          is_connected, is_stable, perm_from_cycles, rh_genus, subcover)
from hurwitzdegen import audit
from hurwitzdegen.covers import branch_counts, cover_report, node_class_summary
from hurwitzdegen.errors import Disconnected, InvalidDatum, NegativeGenus, NonIntegralGenus

from conftest import inverting_pairs, random_valid_datum


def test_rh_genus_worked_values():
    assert rh_genus(60, 0, [5, 2, 3]) == 0
    assert rh_genus(168, 0, [7, 2, 3]) == 3
    assert rh_genus(168, 0, [2, 2, 2, 3]) == 15
    assert rh_genus(10, 0, [2, 2, 5]) == 0
    assert rh_genus(60, 0, [2, 2, 2, 3]) == 6
    assert rh_genus(1, 0, []) == 0


def test_rh_genus_errors():
    with pytest.raises(NonIntegralGenus):
        rh_genus(2, 0, [2])
    with pytest.raises(NegativeGenus):
        rh_genus(2, 0, [])
    with pytest.raises(ValueError):
        rh_genus(6, 0, [4])


def test_trivial_cover():
    G = PermGroup([], degree=1)
    datum = BoundaryDatum(G, (MarkedComponent(0, (), ()),))
    cover = build_cover(datum)
    assert len(cover.components) == 1
    assert cover.components[0].genus == 0
    assert len(cover.nodes) == 0
    assert is_connected(cover)
    assert arithmetic_genus(cover) == 0
    assert not is_stable(cover)


def test_a5_dihedral_cover(a5):
    cover = build_cover(audit.a5_dihedral_degenerations(a5)[0].datum)
    assert len(cover.components) == 1
    assert cover.components[0].genus == 0
    assert len(cover.nodes) == 6
    assert arithmetic_genus(cover) == 6
    assert is_stable(cover)
    assert branch_counts(cover) == [12]
    for k in range(6):
        nc = classify_node(cover, k)
        assert nc.kind == "dihedral"
        assert nc.stabilizer.order == 10


def test_a5_split_cover(a5):
    cover = build_cover(audit.a5_split_datum(a5))
    genera = sorted(c.genus for c in cover.components)
    assert genera == [0] * 7
    assert len(cover.nodes) == 12
    assert arithmetic_genus(cover) == 0 * 7 + 12 - 7 + 1 == 6
    # semistable only: the 6 outer components carry 2 branches each; this is
    # the blow-up picture whose contraction is the 6-node dihedral cover
    assert not is_stable(cover)
    assert sorted(branch_counts(cover)) == [2] * 6 + [12]
    for k in range(12):
        nc = classify_node(cover, k)
        assert nc.kind == "cyclic"
        assert nc.stabilizer.order == 5
    assert node_class_summary(cover) == [
        {"kind": "cyclic", "stabilizer_order": 5, "count": 12}]


def test_dihedral_branch_pair_well_defined(a5):
    # the two branches of a dihedral node are exactly the two <m>-cosets
    # inside its <m, s>-coset, independent of the chosen representative
    cover = build_cover(audit.a5_dihedral_degenerations(a5)[0].datum)
    (ci, pi) = cover.nodes[0].origin[1:]
    dcos = cover.dihedral_dcosets[(ci, pi)]
    mcos = cover.point_mcosets[(ci, pi)]
    for node in cover.nodes:
        dcell = dcos.cells[dcos.index_of[mcos.rep(node.branch_a.m_coset)]]
        inside = {mcos.index_of[x] for x in dcell}
        assert inside == {node.branch_a.m_coset, node.branch_b.m_coset}


def test_branch_contained_in_component_coset(a5):
    cover = build_cover(audit.a5_split_datum(a5))
    for node in cover.nodes:
        for branch in (node.branch_a, node.branch_b):
            comp = cover.components[branch.vertex]
            ctable = cover.comp_cosets[comp.quotient_component]
            mtable = cover.point_mcosets[branch.quotient_point]
            mcell = mtable.cells[branch.m_coset]
            assert set(mcell) <= set(ctable.cells[comp.coset])


def test_disconnected_cover(s3):
    t = s3.id_of(perm_from_cycles(3, (0, 1)))
    datum = BoundaryDatum(s3, (MarkedComponent(0, (), (
        MarkedPoint.cyclic(t), MarkedPoint.cyclic(t),
        MarkedPoint.cyclic(s3.identity))),))
    cover = build_cover(datum)
    assert len(cover.components) == 3  # cosets of the order-2 image
    assert not is_connected(cover)
    with pytest.raises(Disconnected):
        arithmetic_genus(cover)
    assert arithmetic_genus_by_component(cover) == (0, 0, 0)
    assert not is_stable(cover)


def test_build_cover_requires_valid_datum(s3):
    t = s3.id_of(perm_from_cycles(3, (0, 1)))
    bad = BoundaryDatum(s3, (MarkedComponent(0, (), (MarkedPoint.cyclic(t),)),))
    with pytest.raises(InvalidDatum):
        build_cover(bad)


def test_trivial_group_two_component_node():
    G = PermGroup([], degree=1)
    e = G.identity
    comp_a = MarkedComponent(0, (), (
        MarkedPoint.node_end(e, 0), MarkedPoint.cyclic(e), MarkedPoint.cyclic(e)))
    comp_b = MarkedComponent(0, (), (
        MarkedPoint.node_end(e, 0), MarkedPoint.cyclic(e), MarkedPoint.cyclic(e)))
    cover = build_cover(BoundaryDatum(G, (comp_a, comp_b)))
    assert len(cover.components) == 2
    assert len(cover.nodes) == 1
    assert is_connected(cover)
    assert arithmetic_genus(cover) == 0
    nc = classify_node(cover, 0)
    assert nc.kind == "cyclic" and nc.stabilizer.order == 1


def test_self_node_gives_loop():
    # both ends of one node on a single component: the nodal-cubic picture
    G = PermGroup([], degree=1)
    e = G.identity
    datum = BoundaryDatum(G, (MarkedComponent(0, (), (
        MarkedPoint.node_end(e, 0), MarkedPoint.node_end(e, 0),
        MarkedPoint.cyclic(e))),))
    cover = build_cover(datum)
    assert len(cover.components) == 1 and len(cover.nodes) == 1
    node = cover.nodes[0]
    assert node.branch_a.vertex == node.branch_b.vertex
    assert is_connected(cover)
    assert arithmetic_genus(cover) == 1
    assert not is_stable(cover)  # rational component with only 2 branches
    assert classify_node(cover, 0).kind == "cyclic"


def test_self_node_on_nontrivial_group(s3):
    r = s3.id_of(perm_from_cycles(3, (0, 1, 2)))
    datum = BoundaryDatum(s3, (MarkedComponent(0, (), (
        MarkedPoint.node_end(r, 0), MarkedPoint.node_end(s3.inv(r), 0),
        MarkedPoint.cyclic(s3.identity))),))
    cover = build_cover(datum)
    # image subgroup C3: two cover components, each with one loop node
    assert len(cover.components) == 2 and len(cover.nodes) == 2
    assert not is_connected(cover)
    assert arithmetic_genus_by_component(cover) == (1, 1)
    for k in range(2):
        nc = classify_node(cover, k)
        assert nc.kind == "cyclic" and nc.stabilizer.order == 3


def test_subcover_by_whole_group(a5):
    cover = build_cover(audit.a5_dihedral_degenerations(a5)[0].datum)
    rep = subcover(cover, a5.full_subgroup())
    assert rep.degree == 1
    assert len(rep.components) == 1
    comp = rep.components[0]
    assert comp.degree == 1 and comp.genus == 0
    assert all(cyc == (1,) for cyc in comp.point_cycles)
    assert len(rep.node_orbits) == 1
    orbit = rep.node_orbits[0]
    assert orbit.size == 6
    assert orbit.swapped_within_orbit  # dihedral stabilizer swaps branches


def test_subcover_by_trivial_subgroup(a5):
    cover = build_cover(audit.a5_dihedral_degenerations(a5)[0].datum)
    rep = subcover(cover, a5.subgroup([a5.identity]))
    assert rep.degree == 60
    assert len(rep.components) == 1
    comp = rep.components[0]
    assert comp.degree == 60 and comp.genus == 0
    # cycle type of each monodromy on the full fiber: |G|/ord cycles of length ord
    orders = (5, 2, 3)
    for cyc, d in zip(comp.point_cycles, orders):
        assert cyc == tuple([d] * (60 // d))
    assert len(rep.node_orbits) == 6
    assert all(o.size == 1 and not o.swapped_within_orbit for o in rep.node_orbits)


def test_subcover_point_stabilizer_admissible_picture(a5):
    # quotient of the smooth order-(2,2,2,3) cover by a point stabilizer of
    # the natural degree-5 action: the degree-5 admissible-cover picture
    t4 = audit.a5_smoothed_tuple(a5)
    cover = build_cover(hurwitz_to_datum(t4))
    K = a5.subgroup([g for g in range(a5.order) if a5.perm(g)[4] == 4])
    assert K.order == 12
    rep = subcover(cover, K)
    assert rep.degree == 5
    assert len(rep.components) == 1
    comp = rep.components[0]
    assert comp.degree == 5
    assert comp.point_cycles == ((2, 2, 1), (2, 2, 1), (2, 2, 1), (3, 1, 1))
    assert comp.genus == 0
    assert [parts for _, parts in rep.point_cycle_types] == \
        [(2, 2, 1), (2, 2, 1), (2, 2, 1), (3, 1, 1)]


def test_subcover_of_split_cover_by_whole_group(a5):
    cover = build_cover(audit.a5_split_datum(a5))
    rep = subcover(cover, a5.full_subgroup())
    assert [c.quotient_component for c in rep.components] == [0, 1]
    assert all(c.degree == 1 and c.genus == 0 for c in rep.components)
    assert len(rep.node_orbits) == 1
    orbit = rep.node_orbits[0]
    assert orbit.size == 12
    assert not orbit.swapped_within_orbit   # ordinary nodes keep their sides
    assert (orbit.component_a, orbit.component_b) == (0, 1)


def test_subcover_genus_integral_on_random_data(s4):
    rng = random.Random(7)
    pairs = inverting_pairs(s4)
    subs = [s4.full_subgroup(), s4.subgroup([s4.identity]),
            s4.generated_subgroup([s4.id_of(perm_from_cycles(4, (0, 1, 2)))])]
    for _ in range(15):
        datum = random_valid_datum(s4, rng, pairs)
        cover = build_cover(datum)
        for K in subs:
            rep = subcover(cover, K)
            assert all(c.genus >= 0 for c in rep.components)
            assert sum(c.degree for c in rep.components
                       if c.quotient_component == 0) == rep.degree


def test_rh_genus_never_errors_on_valid_data(s3, s4, d5):
    for G, seed in ((s3, 31), (s4, 32), (d5, 33)):
        rng = random.Random(seed)
        pairs = inverting_pairs(G)
        for _ in range(40):
            datum = random_valid_datum(G, rng, pairs)
            cover = build_cover(datum)  # raises on non-integral/negative genus
            assert all(c.genus >= 0 for c in cover.components)


def test_node_class_matches_origin_on_random_data(s4, d5):
    # nodes above quotient nodes stay cyclic, above dihedral points dihedral
    for G, seed in ((s4, 34), (d5, 35)):
        rng = random.Random(seed)
        pairs = inverting_pairs(G)
        for _ in range(25):
            cover = build_cover(random_valid_datum(G, rng, pairs))
            for k, node in enumerate(cover.nodes):
                nc = classify_node(cover, k)
                if node.origin[0] == "dihedral":
                    assert nc.kind == "dihedral"
                    ci, pi = node.origin[1:]
                    m = cover.datum.point(ci, pi).m
                    assert nc.stabilizer.order == 2 * G.element_order(m)
                else:
                    assert nc.kind == "cyclic"


def test_cover_dot_and_report(a5):
    cover = build_cover(audit.a5_dihedral_degenerations(a5)[0].datum)
    dot = cover_to_dot(cover)
    assert 'label="g=0 |H|=60"' in dot
    assert dot.count('v0 -- v0 [label="10"]') == 6
    report = cover_report(cover)
    assert report["component_count"] == 1
    assert report["node_count"] == 6
    assert report["arithmetic_genus"] == 6
    assert report["node_classes"] == [
        {"kind": "dihedral", "stabilizer_order": 10, "count": 6}]
