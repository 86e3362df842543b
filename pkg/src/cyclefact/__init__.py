"""Inequivalent minimal factorizations of the long cycle (1 2 ... n).

Factorizations up to commutation of adjacent commuting factors are in
bijection with plane trees and with inscribed cacti; this package moves
between the three pictures and counts them.
"""

from .bijection import boundary_walk, factorization_to_tree, tree_to_factorization
from .cactus import (
    Arrangeability, Cactus, NotArrangeable, arrange, cactus_to_tree, is_arrangeable,
    is_noncrossing, tree_to_cactus,
)
from .enumeration import (
    OracleTooLarge, all_types, brute_force_classes, brute_force_words, count_by_profile,
    count_trees, enumerate_trees,
)
from .genfunc import MultiSeries, catalan_check, f_series, g_series, xi_series
from .perm_core import (
    Cycle, Factorization, HeadTailProfile, ParseError, Permutation, TypeVector,
    canonical_form, commute, cycle_new, equivalent, evaluate, heads_and_tails,
    is_minimal_ncycle_factorization, type_of,
)
from .plane_tree import LEAF, PlaneTree, boundary_leaves, tree_profile, validate

__version__ = "0.1.0"
