"""Clifford-based local-unitary classification of generalized Bell state sets,
with a one-way LOCC witness search."""

from .locc import DiscriminationReport, SearchConfig, Verdict, find_witness, residual, verify_witness
from .orbits import Classification, EquivClass, class_of, classify_all, classify_extension, classify_incremental, orbit, orbit_members
from .pauli import Gpm, difference_set, power_profile, symplectic_form
from .sets import GbsSet, canonicalize, parse_set, power_vector, standardize_by
from .symplectic import CliffordMap, canonicalizer_for, enumerate_maps

__all__ = [
    "Classification", "CliffordMap", "DiscriminationReport", "EquivClass", "GbsSet", "Gpm",
    "SearchConfig", "Verdict", "canonicalize", "canonicalizer_for", "class_of", "classify_all",
    "classify_extension", "classify_incremental", "difference_set", "enumerate_maps",
    "find_witness", "orbit", "orbit_members", "parse_set", "power_profile", "power_vector", "residual",
    "standardize_by", "symplectic_form", "verify_witness",
]
