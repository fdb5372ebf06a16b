"""Codimension-1 degenerations of Hurwitz tuples and the smoothing maps.

Two boundary types exist for a genus-0 quotient: splitting the line into
two lines meeting in a node (grouping consecutive tuple entries), and
converting one marked point into a dihedral point by choosing an inverting
involution.  ``smooth_dihedral`` maps a dihedral boundary datum back to the
interior tuple of its smoothing, where the dihedral point opens up into two
involution branch points; ``collide_pair`` is its inverse, colliding two
adjacent involution entries into a dihedral point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boundary import (BoundaryDatum, HurwitzTuple, MarkedComponent, MarkedPoint,
                       Violation, canonical_form, quotient_stability, serialize, validate)
from .errors import InvalidDatum, OddOrder, TooFewPoints
from .groups import is_inverting_involution

SPLIT = "split"
DIHEDRAL = "dihedral"


@dataclass(frozen=True, eq=False)
class Degeneration:
    kind: str
    datum: BoundaryDatum
    split_at: int | None = None       # split kind: size of the left group
    index: int | None = None          # dihedral kind: marked point index
    involution: int | None = None     # dihedral kind: element id of s

    def __post_init__(self):
        violations = validate(self.datum)
        if violations:
            raise InvalidDatum(violations)
        if not quotient_stability(self.datum):
            raise InvalidDatum([Violation("Stability", "quotient curve",
                                          "a rational component has fewer than 3 marked points")])


def split_degenerations(t: HurwitzTuple) -> list[Degeneration]:
    """All splits into consecutive groups (g_1..g_k | g_k+1..g_n), k = 2..n-2.

    Each side keeps at least 2 cyclic points next to the new node end, the
    stability bound for a rational component.
    """
    n = len(t)
    if n < 3:
        raise TooFewPoints(f"tuple of length {n} has no stable quotient")
    G = t.group
    out = []
    for k in range(2, n - 1):
        h = G.inv(G.product(t.entries[:k]))
        left = MarkedComponent(0, (), tuple(
            [MarkedPoint.cyclic(g) for g in t.entries[:k]] + [MarkedPoint.node_end(h, 0)]))
        right = MarkedComponent(0, (), tuple(
            [MarkedPoint.node_end(G.inv(h), 0)] + [MarkedPoint.cyclic(g) for g in t.entries[k:]]))
        datum = BoundaryDatum(G, (left, right))
        out.append(Degeneration(SPLIT, datum, split_at=k))
    return out


def dihedral_degenerations(t: HurwitzTuple, index: int) -> list[Degeneration]:
    """Convert point ``index`` into a dihedral point, one datum per valid s."""
    n = len(t)
    if n < 3:
        raise TooFewPoints("need at least 2 cyclic points besides the dihedral one")
    G = t.group
    m = t.entries[index]
    out = []
    for s in range(G.order):
        if not is_inverting_involution(G, m, s):
            continue
        points = [MarkedPoint.dihedral(g, s) if i == index else MarkedPoint.cyclic(g)
                  for i, g in enumerate(t.entries)]
        datum = BoundaryDatum(G, (MarkedComponent(0, (), tuple(points)),))
        out.append(Degeneration(DIHEDRAL, datum, index=index, involution=s))
    return out


def smooth_dihedral(deg: Degeneration) -> HurwitzTuple:
    """Interior tuple of the smoothing: (g_1 .. s, s*m .. g_n) at the index."""
    if deg.kind != DIHEDRAL:
        raise ValueError("smooth_dihedral needs a dihedral-kind degeneration")
    datum = deg.datum
    G = datum.group
    assert len(datum.components) == 1
    comp = datum.components[0]
    i = deg.index
    pt = comp.points[i]
    entries = [p.m for p in comp.points[:i]]
    entries += [pt.s, G.mul(pt.s, pt.m)]
    entries += [p.m for p in comp.points[i + 1:]]
    return HurwitzTuple(G, tuple(entries))


def collide_pair(t: HurwitzTuple, index: int) -> Degeneration:
    """Collide adjacent involution entries (index, index+1) into a dihedral point.

    Inverse of smooth_dihedral: entries (a, b) with a^2 = b^2 = e become the
    dihedral point (m = a*b, s = a).
    """
    G = t.group
    if index < 0 or index + 1 >= len(t):
        raise ValueError("need two adjacent entries")
    a, b = t.entries[index], t.entries[index + 1]
    if G.mul(a, a) != G.identity or a == G.identity:
        raise ValueError(f"entry {index} is not an involution")
    if G.mul(b, b) != G.identity or b == G.identity:
        raise ValueError(f"entry {index + 1} is not an involution")
    m = G.mul(a, b)
    points = [MarkedPoint.cyclic(g) for g in t.entries[:index]]
    points.append(MarkedPoint.dihedral(m, a))
    points += [MarkedPoint.cyclic(g) for g in t.entries[index + 2:]]
    datum = BoundaryDatum(G, (MarkedComponent(0, (), tuple(points)),))
    return Degeneration(DIHEDRAL, datum, index=index, involution=a)


def predicted_fixpoint_orbits(stabilizer_order: int) -> int:
    """Orbit count a two-classes-of-involutions argument predicts: 4 or 2."""
    if stabilizer_order % 2 != 0:
        raise OddOrder(f"dihedral stabilizer order {stabilizer_order} is odd")
    return 4 if stabilizer_order % 4 == 0 else 2


def local_model_orbit_sizes(N: int) -> list[int]:
    """Exact orbit sizes of the order-2N dihedral group on the 2N fixpoints
    of its branch-swapping involutions in the local model fiber xy = 1.

    All coordinates are roots of unity of order dividing 4N; a fixpoint is
    encoded by the exponent pair (u, -u) of (x, y) = (zeta^u, zeta^-u), with
    the fixpoints filling out the even exponents.  The rotation acts by
    u -> u + 4 and the basic swap by u -> -u, all mod 4N: exact integer
    arithmetic, no floating point.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    mod = 4 * N
    points = list(range(0, mod, 2))
    parent = {u: u for u in points}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for u in points:
        union(u, (u + 4) % mod)
        union(u, (-u) % mod)
    sizes: dict[int, int] = {}
    for u in points:
        r = find(u)
        sizes[r] = sizes.get(r, 0) + 1
    return sorted(sizes.values())


def local_model_fixpoint_orbits(N: int) -> int:
    return len(local_model_orbit_sizes(N))


def dedup(degenerations: list[Degeneration]) -> list[Degeneration]:
    """One representative per conjugation-equivalence class, first seen wins."""
    seen = set()
    out = []
    for deg in degenerations:
        key = serialize(canonical_form(deg.datum))
        if key not in seen:
            seen.add(key)
            out.append(deg)
    return out
