"""Covering curves of boundary data by coset enumeration.

Conventions fixed once for the whole package: fibers are copies of G,
monodromy acts by right multiplication and deck transformations by left
multiplication.  Consequently the cover components over a quotient
component Y with image subgroup H_Y are the left cosets gH_Y, points over a
marked point with monodromy m are the left cosets g<m>, and the nodes over
a dihedral point (m, s) are the left cosets g<m, s> whose two branches are
the two <m>-cosets contained in g<m, s>.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boundary import (DIHEDRAL, NODE_END, BoundaryDatum, component_image_subgroup,
                       require_valid)
from .errors import Disconnected, NegativeGenus, NonIntegralGenus
from .graphs import GenGraph, GraphAction, gengraph_to_dot
from .groups import CosetTable, Subgroup, left_cosets, right_cosets

CYCLIC_NODE = "cyclic"
DIHEDRAL_NODE = "dihedral"


def rh_genus(subgroup_order: int, base_genus: int, ramification_orders: list[int]) -> int:
    """Genus of one component of an |H|-Galois cover, by Riemann-Hurwitz.

    2g - 2 = |H| (2h - 2) + sum(|H| - |H|/ord); identity monodromies must be
    filtered out by the caller (they contribute no ramification).
    """
    H = subgroup_order
    for d in ramification_orders:
        if H % d != 0:
            raise ValueError(f"ramification order {d} does not divide {H}")
    double = H * (2 * base_genus - 2) + sum(H - H // d for d in ramification_orders)
    if double % 2 != 0:
        raise NonIntegralGenus(f"2g - 2 = {double} is odd")
    g = (double + 2) // 2
    if g < 0:
        raise NegativeGenus(f"genus {g} < 0")
    return g


@dataclass(frozen=True)
class CoverComponent:
    quotient_component: int
    coset: int      # index into the H_Y coset table of that component
    genus: int


@dataclass(frozen=True)
class CoverBranch:
    quotient_point: tuple[int, int]   # (component index, point index)
    m_coset: int                      # index into the <m> coset table of that point
    vertex: int                       # cover component carrying the branch


@dataclass(frozen=True)
class CoverNode:
    origin: tuple                     # ("node", idx) or ("dihedral", ci, pi)
    branch_a: CoverBranch
    branch_b: CoverBranch


@dataclass(frozen=True)
class NodeClass:
    kind: str                         # CYCLIC_NODE | DIHEDRAL_NODE
    stabilizer: Subgroup


class CoverCurve:
    """The cover of a boundary datum with its deck action on the dual graph."""

    def __init__(self, datum: BoundaryDatum, components: list[CoverComponent],
                 nodes: list[CoverNode], graph: GenGraph, action: GraphAction,
                 comp_cosets: list[CosetTable], point_mcosets: dict, dihedral_dcosets: dict):
        self.datum = datum
        self.group = datum.group
        self.components = components
        self.nodes = nodes
        self.graph = graph
        self.action = action
        self.comp_cosets = comp_cosets
        self.point_mcosets = point_mcosets
        self.dihedral_dcosets = dihedral_dcosets

    def component_rep(self, vertex: int) -> int:
        comp = self.components[vertex]
        return self.comp_cosets[comp.quotient_component].rep(comp.coset)

    def node_action_image(self, g: int, node_idx: int) -> int:
        return self.action.edge_images[g][2 * node_idx] // 2


def build_cover(datum: BoundaryDatum) -> CoverCurve:
    require_valid(datum)
    G = datum.group

    comp_subs = [component_image_subgroup(datum, ci) for ci in range(len(datum.components))]
    comp_cosets = [left_cosets(G, H) for H in comp_subs]
    genera = []
    for ci, comp in enumerate(datum.components):
        orders = [G.element_order(pt.m) for pt in comp.points if pt.m != G.identity]
        genera.append(rh_genus(comp_subs[ci].order, comp.genus, orders))

    components: list[CoverComponent] = []
    vertex_index: dict[tuple[int, int], int] = {}
    for ci in range(len(datum.components)):
        for c in range(len(comp_cosets[ci])):
            vertex_index[(ci, c)] = len(components)
            components.append(CoverComponent(ci, c, genera[ci]))

    point_mcosets: dict[tuple[int, int], CosetTable] = {}
    for ci, comp in enumerate(datum.components):
        for pi, pt in enumerate(comp.points):
            if pt.kind in (NODE_END, DIHEDRAL):
                point_mcosets[(ci, pi)] = left_cosets(G, G.cyclic_subgroup(pt.m))

    nodes: list[CoverNode] = []
    node_index: dict[tuple, int] = {}

    def vertex_of(ci: int, element: int) -> int:
        return vertex_index[(ci, comp_cosets[ci].index_of[element])]

    for node_idx, ((ca, pa), (cb, pb)) in enumerate(datum.nodes()):
        mcos = point_mcosets[(ca, pa)]   # <m_a> = <m_b>, shared coset table
        for t in range(len(mcos)):
            rep = mcos.rep(t)
            branch_a = CoverBranch((ca, pa), t, vertex_of(ca, rep))
            branch_b = CoverBranch((cb, pb), t, vertex_of(cb, rep))
            node_index[("node", node_idx, t)] = len(nodes)
            nodes.append(CoverNode(("node", node_idx), branch_a, branch_b))

    dihedral_dcosets: dict[tuple[int, int], CosetTable] = {}
    for ci, pi in datum.dihedral_points():
        pt = datum.point(ci, pi)
        D = G.generated_subgroup([pt.m, pt.s])
        dcos = left_cosets(G, D)
        dihedral_dcosets[(ci, pi)] = dcos
        mcos = point_mcosets[(ci, pi)]
        for t in range(len(dcos)):
            rep = dcos.rep(t)
            rep_s = G.mul(rep, pt.s)
            branch_a = CoverBranch((ci, pi), mcos.index_of[rep], vertex_of(ci, rep))
            branch_b = CoverBranch((ci, pi), mcos.index_of[rep_s], vertex_of(ci, rep_s))
            node_index[("dihedral", ci, pi, t)] = len(nodes)
            nodes.append(CoverNode(("dihedral", ci, pi), branch_a, branch_b))

    edges = []
    opp = []
    for k, node in enumerate(nodes):
        # one oriented edge per branch, ending at the branch's component
        edges.append((node.branch_b.vertex, node.branch_a.vertex))
        edges.append((node.branch_a.vertex, node.branch_b.vertex))
        opp.extend([2 * k + 1, 2 * k])
    graph = GenGraph(len(components), tuple(edges), tuple(opp))

    vertex_images = []
    edge_images = []
    for g in range(G.order):
        vi = [0] * len(components)
        for v, comp in enumerate(components):
            rep = comp_cosets[comp.quotient_component].rep(comp.coset)
            vi[v] = vertex_of(comp.quotient_component, G.mul(g, rep))
        ei = [0] * len(edges)
        for k, node in enumerate(nodes):
            if node.origin[0] == "node":
                _, node_idx = node.origin
                mcos = point_mcosets[node.branch_a.quotient_point]
                t2 = mcos.index_of[G.mul(g, mcos.rep(node.branch_a.m_coset))]
                k2 = node_index[("node", node_idx, t2)]
                swap = 0
            else:
                _, ci, pi = node.origin
                dcos = dihedral_dcosets[(ci, pi)]
                mcos = point_mcosets[(ci, pi)]
                t2 = dcos.index_of[G.mul(g, dcos.rep(node_dcoset(dcos, node, mcos)))]
                k2 = node_index[("dihedral", ci, pi, t2)]
                image_a = mcos.index_of[G.mul(g, mcos.rep(node.branch_a.m_coset))]
                if nodes[k2].branch_a.m_coset == image_a:
                    swap = 0
                else:
                    assert nodes[k2].branch_b.m_coset == image_a
                    swap = 1
            ei[2 * k] = 2 * k2 + swap
            ei[2 * k + 1] = 2 * k2 + (1 - swap)
        vertex_images.append(tuple(vi))
        edge_images.append(tuple(ei))
    action = GraphAction(graph, G, tuple(vertex_images), tuple(edge_images))

    cover = CoverCurve(datum, components, nodes, graph, action,
                       comp_cosets, point_mcosets, dihedral_dcosets)
    _check_orbit_stabilizer(cover)
    return cover


def node_dcoset(dcos: CosetTable, node: CoverNode, mcos: CosetTable) -> int:
    return dcos.index_of[mcos.rep(node.branch_a.m_coset)]


def _check_orbit_stabilizer(cover: CoverCurve) -> None:
    """Deck action sanity: orbit size times stabilizer order equals |G|."""
    G = cover.group
    seen_components = set()
    for v, comp in enumerate(cover.components):
        if comp.quotient_component in seen_components:
            continue
        seen_components.add(comp.quotient_component)
        images = {cover.action.vertex_images[g][v] for g in range(G.order)}
        stab = sum(1 for g in range(G.order) if cover.action.vertex_images[g][v] == v)
        assert len(images) * stab == G.order
    seen_origins = set()
    for k, node in enumerate(cover.nodes):
        if node.origin in seen_origins:
            continue
        seen_origins.add(node.origin)
        images = {cover.node_action_image(g, k) for g in range(G.order)}
        stab = sum(1 for g in range(G.order) if cover.node_action_image(g, k) == k)
        assert len(images) * stab == G.order


def is_connected(cover: CoverCurve) -> bool:
    comp = cover.graph.connected_component_ids()
    return len(set(comp)) <= 1


def arithmetic_genus(cover: CoverCurve) -> int:
    """sum g_i + #nodes - #components + 1; connected covers only."""
    if not is_connected(cover):
        raise Disconnected("arithmetic genus of a disconnected cover is undefined; "
                           "use arithmetic_genus_by_component")
    return (sum(c.genus for c in cover.components) + len(cover.nodes)
            - len(cover.components) + 1)


def arithmetic_genus_by_component(cover: CoverCurve) -> tuple[int, ...]:
    """Arithmetic genus of each connected component of the cover."""
    comp_ids = cover.graph.connected_component_ids()
    n = max(comp_ids) + 1 if comp_ids else 0
    genus_sum = [0] * n
    comp_count = [0] * n
    node_count = [0] * n
    for v, c in enumerate(cover.components):
        genus_sum[comp_ids[v]] += c.genus
        comp_count[comp_ids[v]] += 1
    for node in cover.nodes:
        node_count[comp_ids[node.branch_a.vertex]] += 1
    return tuple(genus_sum[i] + node_count[i] - comp_count[i] + 1 for i in range(n))


def branch_counts(cover: CoverCurve) -> list[int]:
    counts = [0] * len(cover.components)
    for node in cover.nodes:
        counts[node.branch_a.vertex] += 1
        counts[node.branch_b.vertex] += 1
    return counts


def is_stable(cover: CoverCurve) -> bool:
    """Connected, genus >= 2, rational components meet >= 3 branches."""
    if not is_connected(cover):
        return False
    if arithmetic_genus(cover) < 2:
        return False
    counts = branch_counts(cover)
    for v, comp in enumerate(cover.components):
        if comp.genus == 0 and counts[v] < 3:
            return False
        if comp.genus == 1 and counts[v] < 1:
            return False
    return True


def classify_node(cover: CoverCurve, node_idx: int) -> NodeClass:
    """Setwise stabilizer of the branch pair; dihedral iff something swaps."""
    G = cover.group
    stab = []
    swap_seen = False
    for g in range(G.order):
        img = cover.action.edge_images[g][2 * node_idx]
        if img == 2 * node_idx:
            stab.append(g)
        elif img == 2 * node_idx + 1:
            stab.append(g)
            swap_seen = True
    kind = DIHEDRAL_NODE if swap_seen else CYCLIC_NODE
    return NodeClass(kind, G.subgroup(stab))


def node_class_summary(cover: CoverCurve) -> list[dict]:
    """Counts of nodes grouped by (kind, stabilizer order)."""
    buckets: dict[tuple[str, int], int] = {}
    for k in range(len(cover.nodes)):
        nc = classify_node(cover, k)
        key = (nc.kind, nc.stabilizer.order)
        buckets[key] = buckets.get(key, 0) + 1
    return [{"kind": kind, "stabilizer_order": order, "count": count}
            for (kind, order), count in sorted(buckets.items())]


# -- intermediate quotients ---------------------------------------------------


@dataclass(frozen=True)
class SubcoverComponent:
    quotient_component: int
    double_coset_rep: int             # minimal element id in K g H_Y
    degree: int                       # over the quotient component
    genus: int
    point_cycles: tuple[tuple[int, ...], ...]  # per point of Y, sorted descending


@dataclass(frozen=True)
class SubcoverNodeOrbit:
    representative: int               # cover node index
    size: int
    component_a: int                  # indices into SubcoverReport.components
    component_b: int
    swapped_within_orbit: bool        # some element of K exchanges the branches


@dataclass(frozen=True)
class SubcoverReport:
    subgroup_order: int
    degree: int                       # [G : K]
    components: tuple[SubcoverComponent, ...]
    point_cycle_types: tuple[tuple[tuple[int, int], tuple[int, ...]], ...]
    node_orbits: tuple[SubcoverNodeOrbit, ...]


def subcover(cover: CoverCurve, K: Subgroup) -> SubcoverReport:
    """Quotient of the cover by K: the degree-[G:K] admissible-cover picture.

    Components correspond to double cosets K\\G/H_Y; their genera come from
    cycle-type Riemann-Hurwitz for the possibly non-Galois map to Y, and the
    cycle type of each marked monodromy on the K-cosets is reported.
    """
    G = cover.group
    datum = cover.datum
    rcos = right_cosets(G, K)
    degree = len(rcos)

    def cycles_on(coset_set: list[int], m: int) -> list[int]:
        image = {c: rcos.index_of[G.mul(rcos.rep(c), m)] for c in coset_set}
        seen = set()
        out = []
        for c in coset_set:
            if c in seen:
                continue
            length, cur = 0, c
            while cur not in seen:
                seen.add(cur)
                cur = image[cur]
                length += 1
            out.append(length)
        return out

    sub_components: list[SubcoverComponent] = []
    vertex_to_subcomp: dict[int, int] = {}
    for ci, comp in enumerate(datum.components):
        cos = cover.comp_cosets[ci]
        # K-orbits on left cosets G/H_Y are the double cosets K\G/H_Y
        assigned: dict[int, int] = {}
        orbit_members: list[list[int]] = []
        for c in range(len(cos)):
            if c in assigned:
                continue
            orbit = sorted({cos.index_of[G.mul(k, cos.rep(c))] for k in K.members})
            idx = len(orbit_members)
            orbit_members.append(orbit)
            for x in orbit:
                assigned[x] = idx
        for orbit in orbit_members:
            members = sorted({rcos.index_of[x] for c in orbit for x in cos.cells[c]})
            deg = len(members)
            cycles = tuple(tuple(sorted(cycles_on(members, pt.m), reverse=True))
                           for pt in comp.points)
            double = deg * (2 * comp.genus - 2) + sum(
                sum(L - 1 for L in cyc) for cyc in cycles)
            if double % 2 != 0:
                raise NonIntegralGenus(f"subcover component 2g - 2 = {double}")
            g = (double + 2) // 2
            if g < 0:
                raise NegativeGenus(f"subcover component genus {g} < 0")
            rep = min(min(cos.cells[c]) for c in orbit)
            sub_idx = len(sub_components)
            sub_components.append(SubcoverComponent(ci, rep, deg, g, cycles))
            for c in orbit:
                vertex_to_subcomp[cover_vertex(cover, ci, c)] = sub_idx

    point_types = []
    for ci, comp in enumerate(datum.components):
        for pi, pt in enumerate(comp.points):
            parts = tuple(sorted(cycles_on(list(range(degree)), pt.m), reverse=True))
            point_types.append(((ci, pi), parts))

    node_orbits: list[SubcoverNodeOrbit] = []
    seen_nodes: set[int] = set()
    for idx in range(len(cover.nodes)):
        if idx in seen_nodes:
            continue
        # K is closed under products, so one pass over its members is the orbit
        orbit = set()
        swapped = False
        for k in K.members:
            img_edge = cover.action.edge_images[k][2 * idx]
            orbit.add(img_edge // 2)
            if img_edge == 2 * idx + 1:
                swapped = True
        seen_nodes.update(orbit)
        node = cover.nodes[idx]
        node_orbits.append(SubcoverNodeOrbit(
            idx, len(orbit),
            vertex_to_subcomp[node.branch_a.vertex],
            vertex_to_subcomp[node.branch_b.vertex],
            swapped))

    return SubcoverReport(K.order, degree, tuple(sub_components),
                          tuple(point_types), tuple(node_orbits))


def cover_vertex(cover: CoverCurve, ci: int, coset: int) -> int:
    offset = 0
    for j in range(ci):
        offset += len(cover.comp_cosets[j])
    return offset + coset


# -- reporting ----------------------------------------------------------------


def cover_to_dot(cover: CoverCurve) -> str:
    vlabels = []
    for comp in cover.components:
        order = cover.comp_cosets[comp.quotient_component].subgroup_order
        vlabels.append(f"g={comp.genus} |H|={order}")
    elabels = [str(classify_node(cover, k).stabilizer.order)
               for k in range(len(cover.nodes))]
    return gengraph_to_dot(cover.graph, name="cover",
                           vertex_labels=vlabels, edge_labels=elabels)


def cover_report(cover: CoverCurve) -> dict:
    connected = is_connected(cover)
    return {
        "component_count": len(cover.components),
        "components": [{"quotient_component": c.quotient_component,
                        "coset": c.coset, "genus": c.genus}
                       for c in cover.components],
        "node_count": len(cover.nodes),
        "node_classes": node_class_summary(cover),
        "connected": connected,
        "stable": is_stable(cover),
        "arithmetic_genus": arithmetic_genus(cover) if connected else None,
        "component_arithmetic_genera": list(arithmetic_genus_by_component(cover)),
    }
