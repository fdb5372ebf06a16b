"""Equivariant virtual characters of de Rham cohomology of nodal covers.

For a cover whose normalization components are all rational, the virtual
character decomposes through the normalization and the dual graph as

    chi_dR(C) = chi_dR(C') - 2 * sum over node orbits of Ind(signum)

with chi_dR(C') = 2 * (permutation character on cover components).  The
companion value chi_dR(C') + 2 * (perm(V) - sum Ind(signum)) is also
reported (``chi_dR_literal``); it is degree-inconsistent with 2 - 2*g_a and
kept only for auditing.  Positive-genus normalization components would need
fixed-point trace formulas this package does not model, so only the degree
2 - 2*g_a is produced there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .covers import CoverCurve, arithmetic_genus, is_connected
from .errors import Disconnected, PositiveGenusComponents
from .graphs import edge_orbit_data
from .groups import ClassFunction, PermGroup, induced_character, permutation_character


@dataclass(frozen=True, eq=False)
class DevissageReport:
    chi_dR: ClassFunction | None
    chi_normalization: ClassFunction | None
    edge_induction_sum: ClassFunction | None
    chi_dR_literal: ClassFunction | None
    h1_character: ClassFunction | None
    degree_chi_dR: int
    positive_genus: bool
    connected: bool


def de_rham_character(cover: CoverCurve) -> DevissageReport:
    connected = is_connected(cover)
    if any(c.genus > 0 for c in cover.components):
        # degree-only fallback; needs a connected cover for g_a
        ga = arithmetic_genus(cover)
        return DevissageReport(None, None, None, None, None,
                               2 - 2 * ga, True, connected)
    group = cover.group
    vertex_perm = permutation_character(group, cover.action.vertex_images)
    chi_norm = 2 * vertex_perm
    edge_sum = ClassFunction.zero(group)
    for orbit in edge_orbit_data(cover.action):
        edge_sum = edge_sum + induced_character(group, orbit.stabilizer, orbit.signum_map())
    chi_dR = chi_norm - 2 * edge_sum
    chi_literal = chi_norm + 2 * (vertex_perm - edge_sum)
    h1 = None
    if connected:
        h1 = 2 * ClassFunction.trivial(group) - chi_dR
    return DevissageReport(chi_dR, chi_norm, edge_sum, chi_literal, h1,
                           chi_dR.degree, False, connected)


def h1_character(cover: CoverCurve) -> ClassFunction:
    """[H^1] = 2*triv - chi_dR for a connected, all-rational cover."""
    if not is_connected(cover):
        raise Disconnected("H^1 character needs a connected cover")
    if any(c.genus > 0 for c in cover.components):
        raise PositiveGenusComponents(
            "H^1 character needs every normalization component rational")
    report = de_rham_character(cover)
    assert report.h1_character is not None
    return report.h1_character


# -- rendering ----------------------------------------------------------------


def class_labels(group: PermGroup) -> list[str]:
    """ATLAS-style class names: 1a, 2a, 3a, 5a, 5b, ..."""
    labels = []
    counts: dict[int, int] = {}
    for c in group.conjugacy_classes():
        order = group.element_order(c[0])
        n = counts.get(order, 0)
        counts[order] = n + 1
        labels.append(f"{order}{chr(ord('a') + n)}")
    return labels


def character_rows(group: PermGroup, chi: ClassFunction) -> list[tuple[str, int, int, int]]:
    """(class label, element order, class size, value) per conjugacy class."""
    rows = []
    labels = class_labels(group)
    for ci, c in enumerate(group.conjugacy_classes()):
        rows.append((labels[ci], group.element_order(c[0]), len(c), chi.values[ci]))
    return rows


def render_character_table(group: PermGroup, characters: dict[str, ClassFunction]) -> str:
    """One row per conjugacy class; one value column per named character."""
    labels = class_labels(group)
    names = list(characters)
    header = ["class", "order", "size"] + names
    rows = []
    for ci, c in enumerate(group.conjugacy_classes()):
        row = [labels[ci], str(group.element_order(c[0])), str(len(c))]
        row += [str(characters[n].values[ci]) for n in names]
        rows.append(row)
    widths = [max(len(header[j]), *(len(r[j]) for r in rows)) for j in range(len(header))]
    fmt = "  ".join("{:>%d}" % w for w in widths)
    lines = [fmt.format(*header)]
    lines.append("  ".join("-" * w for w in widths))
    lines += [fmt.format(*r) for r in rows]
    degs = "  ".join(f"deg {n} = {characters[n].degree}" for n in names)
    lines.append(degs)
    return "\n".join(lines) + "\n"


def character_to_jsonable(chi: ClassFunction) -> dict:
    return {"values": list(chi.values), "degree": chi.degree}


def classes_to_jsonable(group: PermGroup) -> list[dict]:
    labels = class_labels(group)
    return [{"label": labels[ci], "order": group.element_order(c[0]), "size": len(c)}
            for ci, c in enumerate(group.conjugacy_classes())]
