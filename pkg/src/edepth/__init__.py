"""Exact graded computer algebra over F_p: Groebner bases on free modules,
minimal resolutions and Ext, the E-depth invariant, certified partial general
initial submodules, local cohomology tables with their cone decomposition,
and socle lemma checkers."""

from .ring import DEFAULT_PRIME, FreeModule, PolyRing, PolyVector, ring
from .groebner import Submodule, buchberger, syzygies_of_list
from .resolutions import GradedPresentation, direct_sum
from .cohomology import CohomologyTable, DeltaTable, lc_table, socle_table
from .gin import gin_rev_t, verify_gin
from .cone import RayCoefficients, cone_membership, decompose, reconstruct

__all__ = [
    "DEFAULT_PRIME", "FreeModule", "PolyRing", "PolyVector", "ring",
    "Submodule", "buchberger", "syzygies_of_list",
    "GradedPresentation", "direct_sum",
    "CohomologyTable", "DeltaTable", "lc_table", "socle_table",
    "gin_rev_t", "verify_gin",
    "RayCoefficients", "cone_membership", "decompose", "reconstruct",
]
