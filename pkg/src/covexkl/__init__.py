"""Kazhdan-Lusztig polynomials of covexillary Schubert varieties.

Two independent engines compute P_{w0 v, w0 w(tau)}(q) from a triple
(k, p, q) in types A, B, C, D: labelled-tree enumeration and a
q-binomial recursion on profile matrices.  A classical-recursion oracle
validates both at small rank.
"""

from .capacity_tree import (Capacity, LabelTree, kl_via_trees, tree_pipeline,
                            tree_to_dot)
from .errors import (BudgetExceededError, CovexError, InvalidTripleError,
                     NotInVarietyError)
from .inductive import find_merge_site, kl_via_inductive, kl_via_inductive_pair, merge
from .oracle import KLTable, bruhat_interval, kl_oracle
from .polyq import QPoly, q_binomial
from .triples import (ABMatrix, Triple, WeakTriple, h_matrix, k_matrix,
                      validate_triple, vexillary_from_triple,
                      weak_triple_from_pair)
from .weyl import WeylElement, bruhat_leq, longest_element

__version__ = "0.1.0"

__all__ = [
    "ABMatrix", "BudgetExceededError", "Capacity", "CovexError",
    "InvalidTripleError", "KLTable", "LabelTree", "NotInVarietyError",
    "QPoly", "Triple", "WeakTriple", "WeylElement", "bruhat_interval",
    "bruhat_leq", "find_merge_site", "h_matrix", "k_matrix",
    "kl_oracle", "kl_via_inductive", "kl_via_inductive_pair",
    "kl_via_trees", "longest_element", "merge", "q_binomial",
    "tree_pipeline", "tree_to_dot", "validate_triple",
    "vexillary_from_triple", "weak_triple_from_pair",
]
