"""Baer invariants of free nilpotent groups, with brute-force and Lie-ring oracles."""

from baerinv.commutators import (
    Commutator,
    bracket,
    compare,
    generator,
    is_basic,
    parse,
    weight,
)
from baerinv.errors import HypothesisViolation, InvalidInput
from baerinv.hall import BasisSlice, basis_of_weight, generate_basis, mobius, witt
from baerinv.lie import LieElement, independent, inject
from baerinv.multipliers import (
    AbelianDecomposition,
    AbelianGroupSpec,
    HypothesisReport,
    PairSet,
    PolyParams,
    VParams,
    abelian_multiplier,
    basis_D,
    card_A,
    card_A_cap_C,
    card_A_minus_C,
    check_hypotheses,
    enumerate_set,
    polynilpotent_rank,
    v_multiplier_rank,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianDecomposition",
    "AbelianGroupSpec",
    "BasisSlice",
    "Commutator",
    "HypothesisReport",
    "HypothesisViolation",
    "InvalidInput",
    "LieElement",
    "PairSet",
    "PolyParams",
    "VParams",
    "abelian_multiplier",
    "basis_D",
    "basis_of_weight",
    "bracket",
    "card_A",
    "card_A_cap_C",
    "card_A_minus_C",
    "check_hypotheses",
    "compare",
    "enumerate_set",
    "generate_basis",
    "generator",
    "independent",
    "inject",
    "is_basic",
    "mobius",
    "parse",
    "polynilpotent_rank",
    "v_multiplier_rank",
    "weight",
    "witt",
]
