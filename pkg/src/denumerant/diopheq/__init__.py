"""Equal-value equations P_A(x) = P_B(y) and their relatives."""

from .construct import a1a2_construct
from .curves import (
    CurveKind,
    CurveModel,
    CurvePoints,
    bounded_curve_points,
    pull_back_points,
    reduce_to_curve,
)
from .families import detect_family, discriminant_in_m, f_vanishes, h_invariant
from .reducibility import (
    ReducibleCase,
    check_known_splittings,
    factor_subproblem,
    known_splittings,
    reducibility_sweep,
)
from .registry import REGISTRY, RegistryEntry, registry_keys, verify_family_registry
from .search import brute_force_search
from .subproblems import (
    ResidueSubproblem,
    SubproblemSolutions,
    enumerate_subproblems,
    residue_subproblem,
    solve_subproblems,
    twelve_a_subproblem,
)

__all__ = [
    "CurveKind",
    "CurveModel",
    "CurvePoints",
    "REGISTRY",
    "ReducibleCase",
    "RegistryEntry",
    "ResidueSubproblem",
    "SubproblemSolutions",
    "a1a2_construct",
    "bounded_curve_points",
    "brute_force_search",
    "check_known_splittings",
    "detect_family",
    "discriminant_in_m",
    "enumerate_subproblems",
    "f_vanishes",
    "factor_subproblem",
    "h_invariant",
    "known_splittings",
    "pull_back_points",
    "reduce_to_curve",
    "reducibility_sweep",
    "registry_keys",
    "residue_subproblem",
    "solve_subproblems",
    "twelve_a_subproblem",
    "verify_family_registry",
]
