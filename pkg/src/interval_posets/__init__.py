"""Interval posets of permutations and diagonally framed polygon dissections."""
from .bijection import b_poset, decompose, phi, phi_inverse, psi
from .dissection import (Dissection, IntersectionalComponent, all_dissections, crosses,
                         edge_present, faces, has_quadrilateral, has_triangle,
                         intersectional_components, is_diagonally_framed, is_noncrossing,
                         noncrossing_dissections, support_induces_complete)
from .enumeration import (CountTable, brute_count, catalan, count_blockwise_posets,
                          count_interval_posets, count_table, dissection_count,
                          large_schroeder, small_schroeder)
from .permutation import (Interval, Permutation, direct_sum, inflate, intervals_of,
                          is_block_wise_simple, is_separable, is_simple, parse_permutation,
                          permutations_of, rank, skew_sum, smallest_simple, unrank)
from .poset import (DecompositionNode, IntervalPoset, argyle_max_elements, build_poset,
                    classify, hasse_covers, realize, to_dot, validate_interval_poset)
from .render import render_svg

__version__ = "0.1.0"


def load_fixture(name):
    """Load a bundled worked example (``"tengon_dissection"``, ``"fig1_poset"``, ...)."""
    import json
    from importlib import resources

    text = resources.files(__name__).joinpath("fixtures", f"{name}.json").read_text()
    data = json.loads(text)
    return Dissection.from_json(data) if "m" in data else IntervalPoset.from_json(data)
