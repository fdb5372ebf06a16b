"""Combinatorial boundary data: pointed quotient curves with monodromy labels.

A boundary datum is a pointed quotient curve (components with genus, handle
images and an ordered list of marked points) together with element
assignments: cyclic points carry a local monodromy m, dihedral points carry
m plus an inverting involution s, node ends carry m and pair up across
nodes with exactly inverse monodromies.  Validity of the datum is exactly
admissibility of the encoded action.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidDatum, ProductNotOne, SchemaError
from .graphs import GenGraph, gengraph_to_dot
from .groups import PermGroup, Subgroup, is_inverting_involution, same_group

CYCLIC = "cyclic"
DIHEDRAL = "dihedral"
NODE_END = "node"


@dataclass(frozen=True)
class MarkedPoint:
    kind: str
    m: int
    s: int | None = None
    node_id: int | None = None

    def __post_init__(self):
        if self.kind not in (CYCLIC, DIHEDRAL, NODE_END):
            raise ValueError(f"unknown point kind {self.kind!r}")
        if (self.s is not None) != (self.kind == DIHEDRAL):
            raise ValueError("s is set exactly on dihedral points")
        if (self.node_id is not None) != (self.kind == NODE_END):
            raise ValueError("node_id is set exactly on node ends")

    @classmethod
    def cyclic(cls, m: int) -> "MarkedPoint":
        return cls(CYCLIC, m)

    @classmethod
    def dihedral(cls, m: int, s: int) -> "MarkedPoint":
        return cls(DIHEDRAL, m, s=s)

    @classmethod
    def node_end(cls, m: int, node_id: int) -> "MarkedPoint":
        return cls(NODE_END, m, node_id=node_id)


@dataclass(frozen=True)
class MarkedComponent:
    genus: int
    handles: tuple[tuple[int, int], ...]
    points: tuple[MarkedPoint, ...]

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if len(self.handles) != self.genus:
            raise ValueError("need one handle image pair per unit of genus")


@dataclass(frozen=True)
class Violation:
    kind: str      # SurfaceRelation | NodePairing | DihedralInvolution
    location: str
    detail: str


@dataclass(frozen=True, eq=False)
class BoundaryDatum:
    group: PermGroup
    components: tuple[MarkedComponent, ...]

    def node_ends(self) -> dict[int, list[tuple[int, int]]]:
        """node_id -> list of (component index, point index), in scan order."""
        ends: dict[int, list[tuple[int, int]]] = {}
        for ci, comp in enumerate(self.components):
            for pi, pt in enumerate(comp.points):
                if pt.kind == NODE_END:
                    ends.setdefault(pt.node_id, []).append((ci, pi))
        return ends

    def nodes(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Well-paired nodes as ((ci, pi), (ci, pi)), sorted by node id."""
        return [(ends[0], ends[1]) for node_id, ends in sorted(self.node_ends().items())
                if len(ends) == 2]

    def dihedral_points(self) -> list[tuple[int, int]]:
        return [(ci, pi) for ci, comp in enumerate(self.components)
                for pi, pt in enumerate(comp.points) if pt.kind == DIHEDRAL]

    def point(self, ci: int, pi: int) -> MarkedPoint:
        return self.components[ci].points[pi]


def surface_relation_holds(datum: BoundaryDatum, ci: int) -> bool:
    """prod [a_i, b_i] * prod m over points in order equals the identity."""
    G = datum.group
    comp = datum.components[ci]
    acc = 0
    for a, b in comp.handles:
        comm = G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b)))
        acc = G.mul(acc, comm)
    for pt in comp.points:
        acc = G.mul(acc, pt.m)
    return acc == G.identity


def validate(datum: BoundaryDatum) -> list[Violation]:
    """All invariant checks; an empty list means the datum is admissible."""
    G = datum.group
    out: list[Violation] = []
    for ci in range(len(datum.components)):
        if not surface_relation_holds(datum, ci):
            out.append(Violation("SurfaceRelation", f"component {ci}",
                                 "handle commutators times point monodromies != identity"))
    for node_id, ends in sorted(datum.node_ends().items()):
        if len(ends) != 2:
            out.append(Violation("NodePairing", f"node {node_id}",
                                 f"node id used by {len(ends)} point(s), need exactly 2"))
            continue
        (ca, pa), (cb, pb) = ends
        ma = datum.point(ca, pa).m
        mb = datum.point(cb, pb).m
        if mb != G.inv(ma):
            out.append(Violation("NodePairing", f"node {node_id}",
                                 "end monodromies are not exact inverses"))
    for ci, pi in datum.dihedral_points():
        pt = datum.point(ci, pi)
        if not is_inverting_involution(G, pt.m, pt.s):
            out.append(Violation("DihedralInvolution", f"component {ci} point {pi}",
                                 "s must square to e, invert m and lie outside <m>"))
    return out


def datum_warnings(datum: BoundaryDatum) -> list[str]:
    out = []
    for ci, comp in enumerate(datum.components):
        for pi, pt in enumerate(comp.points):
            if pt.kind == CYCLIC and pt.m == datum.group.identity:
                out.append(f"component {ci} point {pi}: cyclic point with identity "
                           "monodromy (unramified marking)")
    return out


def quotient_stability(datum: BoundaryDatum) -> bool:
    """Genus-0 components need >= 3 marked points, genus-1 components >= 1."""
    for comp in datum.components:
        if comp.genus == 0 and len(comp.points) < 3:
            return False
        if comp.genus == 1 and len(comp.points) < 1:
            return False
    return True


def require_valid(datum: BoundaryDatum) -> None:
    violations = validate(datum)
    if violations:
        raise InvalidDatum(violations)


def component_image_subgroup(datum: BoundaryDatum, ci: int) -> Subgroup:
    """H_Y = subgroup generated by handle images and point monodromies."""
    comp = datum.components[ci]
    gens: list[int] = []
    for a, b in comp.handles:
        gens.extend([a, b])
    gens.extend(pt.m for pt in comp.points)
    return datum.group.generated_subgroup(gens)


# -- Hurwitz tuples ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HurwitzTuple:
    group: PermGroup
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.group.product(self.entries) != self.group.identity:
            raise ProductNotOne("tuple entries must multiply to the identity")

    def __len__(self) -> int:
        return len(self.entries)

    def orders(self) -> tuple[int, ...]:
        return tuple(self.group.element_order(g) for g in self.entries)


def hurwitz_to_datum(t: HurwitzTuple) -> BoundaryDatum:
    """A smooth genus-0 quotient: all tuple entries become cyclic points."""
    comp = MarkedComponent(0, (), tuple(MarkedPoint.cyclic(g) for g in t.entries))
    return BoundaryDatum(t.group, (comp,))


# -- dual graph of groups ----------------------------------------------------


@dataclass(frozen=True)
class DualGraphOfGroups:
    """Dual graph of the pointed quotient with group-order labels.

    Vertices are components labelled by |H_Y|; nodes give ordinary edges and
    dihedral points give self-opposite edges, labelled by the order of <m>.
    """

    graph: GenGraph
    vertex_group_orders: tuple[int, ...]
    edge_origins: tuple[tuple, ...]       # per unoriented edge: ("node", id) | ("dihedral", ci, pi)
    edge_group_orders: tuple[int, ...]

    def to_dot(self) -> str:
        vlabels = [f"v{v} |H|={o}" for v, o in enumerate(self.vertex_group_orders)]
        elabels = [str(o) for o in self.edge_group_orders]
        return gengraph_to_dot(self.graph, name="quotient",
                               vertex_labels=vlabels, edge_labels=elabels)


def dual_graph_of_groups(datum: BoundaryDatum) -> DualGraphOfGroups:
    require_valid(datum)
    G = datum.group
    pairs = []
    origins: list[tuple] = []
    orders: list[int] = []
    for node_idx, ((ca, pa), (cb, pb)) in enumerate(datum.nodes()):
        # the oriented edge for each branch ends at that branch's component
        pairs.append((cb, ca))
        origins.append(("node", node_idx))
        orders.append(G.element_order(datum.point(ca, pa).m))
    loops = []
    for ci, pi in datum.dihedral_points():
        loops.append(ci)
        origins.append(("dihedral", ci, pi))
        orders.append(G.element_order(datum.point(ci, pi).m))
    graph = GenGraph.from_unoriented(len(datum.components), pairs, self_opposite=loops)
    vorders = tuple(component_image_subgroup(datum, ci).order
                    for ci in range(len(datum.components)))
    return DualGraphOfGroups(graph, vorders, tuple(origins), tuple(orders))


# -- conjugation, canonical form, equivalence --------------------------------

_KIND_CODE = {CYCLIC: 0, DIHEDRAL: 1, NODE_END: 2}


def serialize(datum: BoundaryDatum) -> tuple:
    """Deterministic nested tuple of all structure and element ids."""
    out = []
    for comp in datum.components:
        pts = tuple((_KIND_CODE[pt.kind], pt.m,
                     -1 if pt.s is None else pt.s,
                     -1 if pt.node_id is None else pt.node_id)
                    for pt in comp.points)
        out.append((comp.genus, comp.handles, pts))
    return tuple(out)


def conjugate_datum(datum: BoundaryDatum, g: int) -> BoundaryDatum:
    """Replace every element id x by g x g^-1."""
    G = datum.group
    comps = []
    for comp in datum.components:
        handles = tuple((G.conj(g, a), G.conj(g, b)) for a, b in comp.handles)
        points = tuple(MarkedPoint(pt.kind, G.conj(g, pt.m),
                                   s=None if pt.s is None else G.conj(g, pt.s),
                                   node_id=pt.node_id)
                       for pt in comp.points)
        comps.append(MarkedComponent(comp.genus, handles, points))
    return BoundaryDatum(G, tuple(comps))


def canonical_form(datum: BoundaryDatum) -> BoundaryDatum:
    """Minimum of the serialized form over simultaneous conjugation by G."""
    require_valid(datum)
    best = None
    best_key = None
    for g in range(datum.group.order):
        cand = conjugate_datum(datum, g)
        key = serialize(cand)
        if best_key is None or key < best_key:
            best, best_key = cand, key
    assert best is not None
    return best


def equivalent(d1: BoundaryDatum, d2: BoundaryDatum) -> bool:
    if not same_group(d1.group, d2.group):
        return False
    return serialize(canonical_form(d1)) == serialize(canonical_form(d2))


# -- JSON ---------------------------------------------------------------------


def datum_to_jsonable(datum: BoundaryDatum) -> dict:
    G = datum.group
    comps = []
    for comp in datum.components:
        points = []
        for pt in comp.points:
            entry: dict = {"kind": pt.kind, "m": list(G.perm(pt.m))}
            if pt.s is not None:
                entry["s"] = list(G.perm(pt.s))
            if pt.node_id is not None:
                entry["node"] = pt.node_id
            points.append(entry)
        comps.append({"genus": comp.genus,
                      "handles": [[list(G.perm(a)), list(G.perm(b))] for a, b in comp.handles],
                      "points": points})
    return {"group": G.to_jsonable(), "components": comps}


def _perm_id(G: PermGroup, raw, path: str) -> int:
    if not isinstance(raw, list) or not all(isinstance(x, int) for x in raw):
        raise SchemaError(path, "expected a permutation as a list of integer images")
    try:
        return G.id_of(raw)
    except (KeyError, ValueError) as exc:
        raise SchemaError(path, str(exc)) from None


def datum_from_jsonable(obj) -> BoundaryDatum:
    if not isinstance(obj, dict):
        raise SchemaError("$", "expected a JSON object")
    for key in ("group", "components"):
        if key not in obj:
            raise SchemaError(f"$.{key}", "missing required field")
    grp = obj["group"]
    if not isinstance(grp, dict) or "degree" not in grp or "generators" not in grp:
        raise SchemaError("$.group", "expected {degree, generators}")
    try:
        G = PermGroup(grp["generators"], degree=int(grp["degree"]))
    except Exception as exc:
        raise SchemaError("$.group", str(exc)) from None
    comps = []
    if not isinstance(obj["components"], list):
        raise SchemaError("$.components", "expected a list")
    for ci, comp in enumerate(obj["components"]):
        base = f"$.components[{ci}]"
        if not isinstance(comp, dict):
            raise SchemaError(base, "expected an object")
        genus = comp.get("genus", 0)
        if not isinstance(genus, int) or genus < 0:
            raise SchemaError(f"{base}.genus", "expected a nonnegative integer")
        handles = []
        for hi, pair in enumerate(comp.get("handles", [])):
            if not isinstance(pair, list) or len(pair) != 2:
                raise SchemaError(f"{base}.handles[{hi}]", "expected [a, b]")
            handles.append((_perm_id(G, pair[0], f"{base}.handles[{hi}][0]"),
                            _perm_id(G, pair[1], f"{base}.handles[{hi}][1]")))
        points = []
        for pi, pt in enumerate(comp.get("points", [])):
            ppath = f"{base}.points[{pi}]"
            if not isinstance(pt, dict) or "kind" not in pt or "m" not in pt:
                raise SchemaError(ppath, "expected {kind, m, ...}")
            kind = pt["kind"]
            m = _perm_id(G, pt["m"], f"{ppath}.m")
            try:
                if kind == CYCLIC:
                    points.append(MarkedPoint.cyclic(m))
                elif kind == DIHEDRAL:
                    if "s" not in pt:
                        raise SchemaError(f"{ppath}.s", "dihedral point needs s")
                    points.append(MarkedPoint.dihedral(m, _perm_id(G, pt["s"], f"{ppath}.s")))
                elif kind == NODE_END:
                    if not isinstance(pt.get("node"), int):
                        raise SchemaError(f"{ppath}.node", "node end needs an integer node id")
                    points.append(MarkedPoint.node_end(m, pt["node"]))
                else:
                    raise SchemaError(f"{ppath}.kind", f"unknown kind {kind!r}")
            except ValueError as exc:
                raise SchemaError(ppath, str(exc)) from None
        comps.append(MarkedComponent(genus, tuple(handles), tuple(points)))
    return BoundaryDatum(G, tuple(comps))


def tuple_to_jsonable(t: HurwitzTuple) -> dict:
    return {"group": t.group.to_jsonable(),
            "entries": [list(t.group.perm(g)) for g in t.entries]}


def tuple_from_jsonable(obj) -> HurwitzTuple:
    if not isinstance(obj, dict) or "group" not in obj or "entries" not in obj:
        raise SchemaError("$", "expected {group, entries}")
    grp = obj["group"]
    if not isinstance(grp, dict) or "degree" not in grp or "generators" not in grp:
        raise SchemaError("$.group", "expected {degree, generators}")
    try:
        G = PermGroup(grp["generators"], degree=int(grp["degree"]))
    except Exception as exc:
        raise SchemaError("$.group", str(exc)) from None
    if not isinstance(obj["entries"], list):
        raise SchemaError("$.entries", "expected a list of permutations")
    ids = [_perm_id(G, e, f"$.entries[{i}]") for i, e in enumerate(obj["entries"])]
    try:
        return HurwitzTuple(G, tuple(ids))
    except ProductNotOne as exc:
        raise SchemaError("$.entries", str(exc)) from None
