"""Finite-group actions on stable curves as combinatorial boundary data.

Encode a group action through its pointed quotient curve plus monodromy and
involution assignments, rebuild the covering curve by coset enumeration,
compute equivariant de Rham characters of nodal covers, and enumerate the
codimension-1 degenerations of covers of the line.
"""

from .boundary import (BoundaryDatum, HurwitzTuple, MarkedComponent, MarkedPoint,
                       Violation, canonical_form, component_image_subgroup,
                       datum_from_jsonable, datum_to_jsonable, datum_warnings,
                       dual_graph_of_groups, equivalent, hurwitz_to_datum,
                       quotient_stability, tuple_from_jsonable, tuple_to_jsonable, validate)
from .cohomology import (DevissageReport, class_labels, de_rham_character, h1_character,
                         render_character_table)
from .covers import (CoverCurve, NodeClass, arithmetic_genus, arithmetic_genus_by_component,
                     build_cover, classify_node, cover_to_dot, is_connected, is_stable,
                     rh_genus, subcover)
from .degen import (Degeneration, collide_pair, dedup, dihedral_degenerations,
                    local_model_fixpoint_orbits, local_model_orbit_sizes, predicted_fixpoint_orbits,
                    smooth_dihedral, split_degenerations)
from .graphs import (EdgeOrbit, GenGraph, GraphAction, betti, edge_orbit_data,
                     gengraph_to_dot, graph_virtual_character)
from .groups import (ClassFunction, CosetTable, PermGroup, Subgroup, all_subgroups,
                     centralizer, compose, induced_character, inverse,
                     is_inverting_involution, left_cosets, normalizer,
                     perm_from_cycles, permutation_character, right_cosets,
                     sign_characters)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
