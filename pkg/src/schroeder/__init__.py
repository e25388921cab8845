"""Diagrams, ranked essential sets and lattice paths of Schröder permutations."""
from .diagram import (
    Diagram,
    EssentialSet,
    components,
    diagram,
    essential_set,
    is_schroeder,
    max_rank,
    permutation_from_diagram,
    rank,
    retrieval_stages,
    retrieve,
    validate_essential_set,
)
from .maps import (
    avoids_213k,
    avoids_231,
    avoids_decreasing,
    avoids_increasing,
    descent_set_231_predicate,
    omega,
    omega_inverse,
    one_step,
    phi,
    phi_fibers,
)
from .paths import LatticePath, psi_em, psi_em_inverse, psi_k, tau_k
from .perm import (
    contains_pattern,
    count_pattern,
    generate_all,
    generate_avoiding,
    inverse,
    parse_permutation,
    t_m_patterns,
)

__version__ = "0.1.0"
