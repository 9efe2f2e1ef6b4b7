"""Exact spectrum of the graph 1-Laplacian for small graphs."""

from .cheeger import (
    Cut,
    cheeger_exact,
    cheeger_inequality_check,
    eigenvalue_range_bound,
    group_upper_bound,
    mu2_via_pi_min,
    sweep_cut,
)
from .graph import (
    ComponentLabeling,
    Graph,
    build_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    parse_edge_list,
    path_graph,
    petersen_graph,
    serialize_edge_list,
    star_graph,
)
from .linear import LinearSpectrum, linear_spectrum
from .spectrum import (
    EnumConfig,
    SpectrumReport,
    complete_spectrum_oracle,
    cycle_spectrum_oracle,
    enumerate_spectrum,
    path_spectrum_oracle,
    second_eigenvalue,
    star_spectrum_oracle,
    zero_eigenvalue_patterns,
)
from .tv import (
    NodalDecomposition,
    in_pi,
    nodal_decomposition,
    normalize_eigenvector,
    pattern_to_function,
    tv_energy,
    tv_energy_nodal,
    weighted_norm,
)
from .verify import Certificate, check_certificate, is_eigenvector, verify_eigenpair

__version__ = "0.1.0"
