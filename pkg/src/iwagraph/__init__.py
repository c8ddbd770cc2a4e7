"""Coverings of finite graphs with prescribed spanning-tree growth.

The package builds towers of graph coverings indexed by powers of a prime,
predicts the growth invariants of their spanning-tree counts from an exact
group-ring determinant, constructs graphs realizing prescribed invariants,
and verifies the predictions by counting trees level by level.
"""

from .constructor import (
    construct_ramified,
    construct_unramified,
    construct_with_mu_l,
    is_admissible,
)
from .errors import IwagraphError
from .graphio import load_graph_spec, save_graph_spec
from .graphs import DerivedGraph, MultiGraph, RamificationDatum, VoltageGraph, derived_graph
from .groupring import (
    GroupRingElement,
    IntPolynomial,
    IwasawaInvariants,
    iwasawa_invariants,
)
from .laplacian import laplacian_matrix, predicted_invariants, z_alpha, z_alpha_ramified
from .phi import phi_forward, phi_inverse, sample_lambda_distribution
from .treecount import fit_invariants, kappa_sequence, spanning_tree_count, verify

__all__ = [
    "DerivedGraph",
    "GroupRingElement",
    "IntPolynomial",
    "IwagraphError",
    "IwasawaInvariants",
    "MultiGraph",
    "RamificationDatum",
    "VoltageGraph",
    "construct_ramified",
    "construct_unramified",
    "construct_with_mu_l",
    "derived_graph",
    "fit_invariants",
    "is_admissible",
    "iwasawa_invariants",
    "kappa_sequence",
    "laplacian_matrix",
    "load_graph_spec",
    "phi_forward",
    "phi_inverse",
    "predicted_invariants",
    "sample_lambda_distribution",
    "save_graph_spec",
    "spanning_tree_count",
    "verify",
    "z_alpha",
    "z_alpha_ramified",
]

__version__ = "1.0.0"
