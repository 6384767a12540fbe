"""Higher-rank q-characters, fundamental tables, structural checks and string graphs."""

from qchar.charbuild.fm import FMFailure, FMLimits, chi_i_expand, fm_expand, fm_expand_report
from qchar.charbuild.graph import CharGraph, build_graph, export_dot
from qchar.charbuild.highest import HighestWeight, parse_roots
from qchar.charbuild.structure import (
    check_monom_shape,
    restriction_is_positive,
    restriction_multiplicities,
    unique_dominant_product,
)
from qchar.charbuild.tables import fundamental_labels, fundamental_table

__all__ = [
    "CharGraph",
    "FMFailure",
    "FMLimits",
    "HighestWeight",
    "build_graph",
    "check_monom_shape",
    "chi_i_expand",
    "export_dot",
    "fm_expand",
    "fm_expand_report",
    "fundamental_labels",
    "fundamental_table",
    "parse_roots",
    "restriction_is_positive",
    "restriction_multiplicities",
    "unique_dominant_product",
]
