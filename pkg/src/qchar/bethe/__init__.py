"""Bethe Ansatz layer: equation generation, sl2 solver, Baxter formula, six-vertex oracle."""

from qchar.bethe.baxter import BaxterPole, EigenvalueSL2, baxter_eigenvalue, residue_check
from qchar.bethe.oracle import distinct_count, sixvertex_oracle, transfer_matrix
from qchar.bethe.solve import BetheSolution, residual_norm, solve_sl2
from qchar.bethe.system import (
    BetheEquation,
    BetheSystem,
    generate_bethe,
    generate_sl2,
    kr_site,
    pole_constant,
    printed_constant,
    q,
)

__all__ = [
    "BaxterPole",
    "BetheEquation",
    "BetheSolution",
    "BetheSystem",
    "EigenvalueSL2",
    "baxter_eigenvalue",
    "distinct_count",
    "generate_bethe",
    "generate_sl2",
    "kr_site",
    "pole_constant",
    "printed_constant",
    "q",
    "residual_norm",
    "residue_check",
    "sixvertex_oracle",
    "solve_sl2",
    "transfer_matrix",
]
