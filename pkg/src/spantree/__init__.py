"""Exact spanning-tree counts, Laplacian spectra, and product bounds."""

from spantree.bounds import (
    BoundsReport,
    bounds_report,
    equality_lower,
    equality_upper,
    lower_bound_log,
    rook_tau,
    tree_bounds_log,
    upper_bound_log,
)
from spantree.exact import det_fraction_free, laplacian, tau_exact
from spantree.generators import generate, prufer_decode, random_graph
from spantree.graph import DomainError, Graph, GraphError, is_complete, is_connected
from spantree.io import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from spantree.oracle import MultiGraph, tau_deletion_contraction, tau_subset_enumeration
from spantree.product import cartesian_product
from spantree.spectral import (
    Spectrum,
    laplacian_spectrum,
    product_spectrum,
    tau_product_spectral,
    tau_spectral,
)

__version__ = "0.1.0"
