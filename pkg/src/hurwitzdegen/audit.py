"""Built-in worked examples and the pinned audit behind ``verify-examples``.

The icosahedral family: A5 acting on the line with branch orders (5, 2, 3),
its dihedral degeneration (genus-6 nodal curve with 6 dihedral nodes), the
smoothed 4-point family with orders (2, 2, 2, 3), and its split
degeneration.  The order-168 family over the 8-point projective line with
branch orders (7, 2, 3) is audited arithmetically: the dihedral boundary
datum it would need does not exist in this group, which the audit reports
as a warning rather than a failure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boundary import HurwitzTuple, equivalent, hurwitz_to_datum
from .cohomology import de_rham_character, h1_character
from .covers import arithmetic_genus, build_cover, classify_node, is_connected, is_stable, rh_genus
from .degen import collide_pair, dihedral_degenerations, local_model_fixpoint_orbits, \
    predicted_fixpoint_orbits, smooth_dihedral, split_degenerations
from .groups import PermGroup, induced_character, is_inverting_involution, left_cosets, \
    normalizer, perm_from_cycles

PASS = "PASS"
WARN = "WARN"
FAIL = "FAIL"


@dataclass(frozen=True)
class AuditCheck:
    name: str
    status: str
    detail: str


def a5_group() -> PermGroup:
    return PermGroup([perm_from_cycles(5, (0, 1, 2, 3, 4)),
                      perm_from_cycles(5, (0, 1, 2))])


def complete_three_point_tuple(G: PermGroup, m: int, order_b: int, order_c: int) -> HurwitzTuple:
    """First (m, g1, g2) with the given orders, product one and full image."""
    for g1 in range(G.order):
        if G.element_order(g1) != order_b:
            continue
        g2 = G.inv(G.mul(m, g1))
        if G.element_order(g2) != order_c:
            continue
        if G.generated_subgroup([m, g1]).order == G.order:
            return HurwitzTuple(G, (m, g1, g2))
    raise ValueError(f"no ({G.element_order(m)}, {order_b}, {order_c}) completion found")


def a5_tuple(G: PermGroup | None = None) -> HurwitzTuple:
    G = G or a5_group()
    m = G.id_of(perm_from_cycles(5, (0, 1, 2, 3, 4)))
    return complete_three_point_tuple(G, m, 2, 3)


def a5_dihedral_degenerations(G: PermGroup | None = None):
    return dihedral_degenerations(a5_tuple(G), 0)


def a5_smoothed_tuple(G: PermGroup | None = None) -> HurwitzTuple:
    return smooth_dihedral(a5_dihedral_degenerations(G)[0])


def a5_split_datum(G: PermGroup | None = None):
    return split_degenerations(a5_smoothed_tuple(G))[0].datum


def psl27_group() -> PermGroup:
    """Order-168 group on the 8 points of the projective line over F7.

    Generators: z -> z+1 and z -> -1/z, with point 7 playing infinity.
    """
    shift = [(z + 1) % 7 for z in range(7)] + [7]
    neg_inv = [7] + [(-pow(z, 5, 7)) % 7 for z in range(1, 7)] + [0]
    return PermGroup([shift, neg_inv])


def psl27_tuple(G: PermGroup | None = None) -> HurwitzTuple:
    G = G or psl27_group()
    u = G.id_of([1, 2, 3, 4, 5, 6, 0, 7])
    return complete_three_point_tuple(G, u, 2, 3)


def run_audit() -> list[AuditCheck]:
    checks: list[AuditCheck] = []

    def check(name: str, ok: bool, detail: str, warn_only: bool = False):
        status = PASS if ok else (WARN if warn_only else FAIL)
        checks.append(AuditCheck(name, status, detail))

    def note(name: str, status: str, detail: str):
        checks.append(AuditCheck(name, status, detail))

    # --- icosahedral pipeline -------------------------------------------
    G = a5_group()
    check("a5-order", G.order == 60, f"group order {G.order}, expected 60")

    t3 = a5_tuple(G)
    m = t3.entries[0]
    C5 = G.cyclic_subgroup(m)
    N = normalizer(G, C5)
    check("a5-normalizer", N.order == 10,
          f"normalizer of the 5-cycle subgroup has order {N.order}, expected 10")
    cosets = left_cosets(G, C5)
    check("a5-cosets", len(cosets) == 12,
          f"{len(cosets)} cosets of the order-5 subgroup, expected 12")
    invs = [s for s in range(G.order) if is_inverting_involution(G, m, s)]
    check("a5-involutions", len(invs) == 5,
          f"{len(invs)} inverting involutions for the 5-cycle, expected 5")

    degs = a5_dihedral_degenerations(G)
    check("a5-dihedral-count", len(degs) == 5,
          f"{len(degs)} dihedral degenerations at index 0, expected 5")
    dihedral_cover = build_cover(degs[0].datum)
    check("a5-dihedral-components", len(dihedral_cover.components) == 1,
          f"{len(dihedral_cover.components)} cover component(s), expected 1")
    check("a5-dihedral-genus0", all(c.genus == 0 for c in dihedral_cover.components),
          "all cover components rational")
    check("a5-dihedral-nodes", len(dihedral_cover.nodes) == 6,
          f"{len(dihedral_cover.nodes)} nodes, expected 6")
    kinds = {classify_node(dihedral_cover, k).kind for k in range(len(dihedral_cover.nodes))}
    stabs = {classify_node(dihedral_cover, k).stabilizer.order
             for k in range(len(dihedral_cover.nodes))}
    check("a5-node-class", kinds == {"dihedral"} and stabs == {10},
          f"node kinds {sorted(kinds)}, stabilizer orders {sorted(stabs)}, expected dihedral/10")
    ga = arithmetic_genus(dihedral_cover)
    check("a5-arithmetic-genus", ga == 6, f"arithmetic genus {ga}, expected 6")
    note("a5-genus-consistency", WARN if ga == 6 else FAIL,
         "computed arithmetic genus 6; a genus-5 description of this curve is "
         "inconsistent with 6 nodes on one rational component")
    check("a5-stable", is_stable(dihedral_cover), "cover is stable")

    sgn = {h: (1 if h in C5 else -1) for h in N.members}
    ind_sgn = induced_character(G, N, sgn)
    h1 = h1_character(dihedral_cover)
    check("a5-h1-character", h1 == 2 * ind_sgn and h1.degree == 12,
          f"H1 character degree {h1.degree} "
          f"{'equals' if h1 == 2 * ind_sgn else 'differs from'} "
          "twice the induced signum of the order-10 subgroup")

    t4 = smooth_dihedral(degs[0])
    check("a5-smoothing-orders", t4.orders() == (2, 2, 2, 3),
          f"smoothed tuple branch orders {t4.orders()}, expected (2, 2, 2, 3)")
    splits = split_degenerations(t4)
    check("a5-split-count", len(splits) == 1, f"{len(splits)} split(s), expected 1")
    split_cover = build_cover(splits[0].datum)
    check("a5-split-shape",
          len(split_cover.components) == 7 and len(split_cover.nodes) == 12,
          f"{len(split_cover.components)} components / {len(split_cover.nodes)} nodes, "
          "expected 7 / 12")
    ga2 = arithmetic_genus(split_cover)
    check("a5-split-genus", ga2 == 6, f"split-side arithmetic genus {ga2}, expected 6")
    h1_split = h1_character(split_cover)
    check("a5-character-constancy", h1_split == h1,
          "H1 characters of the two degenerations of one family "
          + ("agree exactly" if h1_split == h1 else "differ"))
    triv = {h: 1 for h in N.members}
    triv_c5 = {h: 1 for h in C5.members}
    mackey = induced_character(G, C5, triv_c5) == \
        induced_character(G, N, triv) + ind_sgn
    check("a5-mackey", mackey,
          "induction from the order-5 subgroup matches the order-10 subgroup's "
          "trivial plus signum inductions")
    nstab = classify_node(dihedral_cover, 0).stabilizer.order
    oracle = local_model_fixpoint_orbits(nstab // 2)
    predicted = predicted_fixpoint_orbits(nstab)
    check("a5-node-smoothing-orbits", oracle == 2 and predicted == 2,
          f"order-{nstab} node stabilizer: local-model orbit count {oracle}, "
          f"involution-class prediction {predicted}")

    rt = collide_pair(t4, 0)
    check("a5-round-trip", equivalent(rt.datum, degs[0].datum),
          "colliding the smoothed involution pair recovers the dihedral datum")

    # --- order-168 family: arithmetic and realizability -------------------
    P = psl27_group()
    check("psl27-order", P.order == 168, f"group order {P.order}, expected 168")
    g_interior = rh_genus(168, 0, [7, 2, 3])
    check("klein-genus-3", g_interior == 3,
          f"rh_genus(168, 0, [7,2,3]) = {g_interior}, expected 3")
    g_smoothed = rh_genus(168, 0, [2, 2, 2, 3])
    check("klein-genus-15", g_smoothed == 15,
          f"rh_genus(168, 0, [2,2,2,3]) = {g_smoothed}, expected 15")
    node_count = 168 // 14
    ga_hypo = 3 + node_count - 1 + 1
    check("klein-boundary-arithmetic", node_count == 12 and ga_hypo == 15,
          f"hypothetical dihedral boundary: 168/14 = {node_count} nodes, "
          f"g_a = 3 + {node_count} - 1 + 1 = {ga_hypo}")

    tP = psl27_tuple(P)
    u = tP.entries[0]
    C7 = P.cyclic_subgroup(u)
    N7 = normalizer(P, C7)
    inv7 = [s for s in range(P.order) if is_inverting_involution(P, u, s)]
    realizable = N7.order == 14 and len(inv7) > 0
    check("psl27-realizability", realizable,
          "expected a dihedral Sylow-7 normalizer of order 14 with an inverting "
          f"involution; exhaustive search over all {P.order} elements finds "
          f"normalizer order {N7.order} and {len(inv7)} inverting involutions, "
          "so the order-168 dihedral boundary datum is not realizable here",
          warn_only=True)
    degP = dihedral_degenerations(tP, 0)
    check("psl27-dihedral-empty", len(degP) == 0,
          f"{len(degP)} dihedral degenerations at the order-7 point, expected 0",
          )

    # the smooth interior datum itself is fine
    coverP = build_cover(hurwitz_to_datum(tP))
    repP = de_rham_character(coverP)
    check("psl27-interior", len(coverP.components) == 1
          and coverP.components[0].genus == 3
          and is_connected(coverP)
          and repP.positive_genus and repP.degree_chi_dR == 2 - 2 * 3,
          "interior cover: one component of genus 3; character degree "
          f"{repP.degree_chi_dR} with positive-genus marker")

    return checks


def audit_passed(checks: list[AuditCheck]) -> bool:
    return all(c.status != FAIL for c in checks)
