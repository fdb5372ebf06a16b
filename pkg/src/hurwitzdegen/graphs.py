"""Generalized graphs, group actions on them, and graph characters.

A generalized graph carries oriented edges with an opposite-edge involution
that may have fixpoints (self-opposite edges).  Only *strict* graphs, where
the involution is fixpoint free, admit the chain complex: a self-opposite
edge would contribute 2-torsion to the group of 1-chains, so chain-level
operations reject non-strict graphs instead of modelling torsion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotStrict
from .groups import ClassFunction, PermGroup, Subgroup, induced_character, permutation_character


@dataclass(frozen=True)
class GenGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]  # oriented: (source, target)
    opp: tuple[int, ...]

    def __post_init__(self):
        E = len(self.edges)
        assert len(self.opp) == E
        for e in range(E):
            o = self.opp[e]
            assert 0 <= o < E and self.opp[o] == e, "opp must be an involution"
            s, t = self.edges[e]
            assert 0 <= s < self.vertex_count and 0 <= t < self.vertex_count
            assert self.edges[o] == (t, s), "opposite edge must reverse source and sink"

    @classmethod
    def from_unoriented(cls, vertex_count: int, pairs: Sequence[tuple[int, int]],
                        self_opposite: Sequence[int] = ()) -> "GenGraph":
        """Build from unoriented edges; ``self_opposite`` lists loop vertices."""
        edges: list[tuple[int, int]] = []
        opp: list[int] = []
        for u, v in pairs:
            e = len(edges)
            edges.extend([(u, v), (v, u)])
            opp.extend([e + 1, e])
        for v in self_opposite:
            e = len(edges)
            edges.append((v, v))
            opp.append(e)
        return cls(vertex_count, tuple(edges), tuple(opp))

    def source(self, e: int) -> int:
        return self.edges[e][0]

    def target(self, e: int) -> int:
        return self.edges[e][1]

    @property
    def is_strict(self) -> bool:
        return all(self.opp[e] != e for e in range(len(self.edges)))

    def unoriented_reps(self) -> tuple[int, ...]:
        """One oriented id per unoriented edge (self-opposite edges included)."""
        return tuple(e for e in range(len(self.edges)) if e <= self.opp[e])

    def connected_component_ids(self) -> list[int]:
        parent = list(range(self.vertex_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s, t in self.edges:
            rs, rt = find(s), find(t)
            if rs != rt:
                parent[rs] = rt
        roots = {}
        out = []
        for v in range(self.vertex_count):
            r = find(v)
            out.append(roots.setdefault(r, len(roots)))
        return out


def betti(graph: GenGraph) -> tuple[int, int]:
    """(b0, b1) of a strict graph; b1 = E - V + b0 on unoriented edges."""
    if not graph.is_strict:
        raise NotStrict("chain complex undefined for self-opposite edges")
    comp = graph.connected_component_ids()
    b0 = (max(comp) + 1) if comp else 0
    E = len(graph.unoriented_reps())
    return b0, E - graph.vertex_count + b0


@dataclass(frozen=True)
class GraphAction:
    """Action of a group on a generalized graph via full image tables.

    ``vertex_images[g]`` and ``edge_images[g]`` give the permutation induced
    by element id ``g``.  Construction verifies the action commutes with
    source, target and opp for every element, and spot-checks the
    homomorphism property against the generators.
    """

    graph: GenGraph
    group: PermGroup
    vertex_images: tuple[tuple[int, ...], ...]
    edge_images: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        G, graph = self.group, self.graph
        assert len(self.vertex_images) == G.order and len(self.edge_images) == G.order
        for g in range(G.order):
            vi, ei = self.vertex_images[g], self.edge_images[g]
            assert sorted(vi) == list(range(graph.vertex_count))
            assert sorted(ei) == list(range(len(graph.edges)))
            for e in range(len(graph.edges)):
                s, t = graph.edges[e]
                assert graph.edges[ei[e]] == (vi[s], vi[t]), "action must commute with source/sink"
                assert ei[graph.opp[e]] == graph.opp[ei[e]], "action must commute with opp"
        for s in G.generator_ids:
            for g in range(G.order):
                sg = G.mul(s, g)
                assert self.vertex_images[sg] == tuple(
                    self.vertex_images[s][v] for v in self.vertex_images[g])
                assert self.edge_images[sg] == tuple(
                    self.edge_images[s][e] for e in self.edge_images[g])

    @classmethod
    def trivial(cls, graph: GenGraph, group: PermGroup) -> "GraphAction":
        vi = tuple(tuple(range(graph.vertex_count)) for _ in range(group.order))
        ei = tuple(tuple(range(len(graph.edges))) for _ in range(group.order))
        return cls(graph, group, vi, ei)


@dataclass(frozen=True)
class EdgeOrbit:
    """One orbit of unoriented edges with its stabilizer and signum data."""

    representative: int              # oriented edge id, e < opp(e)
    members: tuple[int, ...]         # unoriented reps in the orbit
    stabilizer: Subgroup             # setwise stabilizer of {e, opp(e)}
    signum: tuple[tuple[int, int], ...]  # (element id, +-1) over the stabilizer
    orientable: bool

    def signum_map(self) -> dict[int, int]:
        return dict(self.signum)


def edge_orbit_data(action: GraphAction) -> tuple[EdgeOrbit, ...]:
    """Orbits of unoriented edges; signum is -1 on elements swapping e, opp(e)."""
    graph = action.graph
    if not graph.is_strict:
        raise NotStrict("edge orbits with signum need a strict graph")
    group = action.group
    reps = graph.unoriented_reps()
    unor = {}
    for r in reps:
        unor[r] = r
        unor[graph.opp[r]] = r
    seen = set()
    orbits = []
    for r in reps:
        if r in seen:
            continue
        members = sorted({unor[action.edge_images[g][r]] for g in range(group.order)})
        seen.update(members)
        stab_ids, signum = [], []
        for g in range(group.order):
            img = action.edge_images[g][r]
            if img == r:
                stab_ids.append(g)
                signum.append((g, 1))
            elif img == graph.opp[r]:
                stab_ids.append(g)
                signum.append((g, -1))
        stab = group.subgroup(stab_ids)
        orientable = all(v == 1 for _, v in signum)
        orbits.append(EdgeOrbit(r, tuple(members), stab, tuple(signum), orientable))
    return tuple(orbits)


def graph_virtual_character(action: GraphAction) -> ClassFunction:
    """Character of 0-chains minus 1-chains: perm(V) - sum of Ind(signum).

    Degree is V - E (unoriented E) for any strict graph with action.
    """
    if not action.graph.is_strict:
        raise NotStrict("graph character needs a strict graph")
    chi = permutation_character(action.group, action.vertex_images)
    for orbit in edge_orbit_data(action):
        chi = chi - induced_character(action.group, orbit.stabilizer, orbit.signum_map())
    return chi


def gengraph_to_dot(graph: GenGraph, name: str = "G",
                    vertex_labels: Sequence[str] | None = None,
                    edge_labels: Sequence[str] | None = None) -> str:
    """Deterministic DOT text: one edge per unoriented edge, dashed if self-opposite."""
    lines = [f"graph {name} {{"]
    for v in range(graph.vertex_count):
        label = vertex_labels[v] if vertex_labels else f"v{v}"
        lines.append(f'  v{v} [shape=circle, label="{label}"];')
    for i, e in enumerate(graph.unoriented_reps()):
        s, t = graph.edges[e]
        attrs = []
        if edge_labels:
            attrs.append(f'label="{edge_labels[i]}"')
        if graph.opp[e] == e:
            attrs.append("style=dashed")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  v{s} -- v{t}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
