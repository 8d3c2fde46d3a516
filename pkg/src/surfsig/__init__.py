"""Potential and actual signatures of finite group actions on closed Riemann
surfaces: enumeration, the divisibility lattice, and generating-vector
search in explicit permutation groups."""

from .catalog import GroupCatalog, builtin_catalog, load_catalog, validate_catalog
from .enumeration import PotentialSignatureSet, enumerate_potential, intersect_sets
from .groups import (
    FiniteGroup,
    conjugacy_class_representatives,
    cyclic,
    dihedral,
    direct_product,
    element_order,
    from_generators,
    generates,
)
from .lattice import contains_genus, join_genus, meet_genus, verify_lattice, witness_non_containment
from .realization import actual_relative, table2_genus2_check, verify_omnipersistent_actual
from .signature import (
    Signature,
    format_signature,
    is_potential,
    parse_signature,
    reduced_euler,
    required_group_order,
)
from .vectors import GeneratingVector, SearchInconclusive, search, verify

__version__ = "0.1.0"
