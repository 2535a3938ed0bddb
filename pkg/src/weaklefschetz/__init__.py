"""Artinian algebras with m-times the weak Lefschetz property.

Validation of m-times weak Lefschetz O-sequences, the extremal monomial
ideals ``W_m(h)``, Eliahou-Kervaire Betti tables, maximal-Betti and rigidity
checks, and distractions to ideals of rational points.
"""

from .betti import (
    BettiTable,
    dominates,
    ek_graded_betti,
    ek_total_betti,
    graded_betti,
    koszul_graded_betti,
    render_diagram,
)
from .distractions import (
    DistractionMatrix,
    LinearForm,
    Polynomial,
    RationalPoint,
    distract_ideal,
    distract_monomial,
    distraction_points,
    irreducible_components,
    is_radical_for,
    is_valid_distraction,
    make_standard_distraction,
    poly_ideal_hilbert,
)
from .ideals import (
    MonomialIdeal,
    artinian_hilbert_function,
    contains,
    hilbert_function,
    is_artinian,
    is_stable,
    is_strongly_stable,
    lex_segment,
    max_stats,
    minimalize,
    project_rho,
    standard_monomials,
    truncate_below,
)
from .lefschetz import (
    build_w,
    check_rigidity,
    has_m_wlp_stable,
    has_maximal_betti,
    has_wlp_stable,
    is_gotzmann,
    random_m_wlp_ideal,
    random_strongly_stable,
    wlp_criterion,
)
from .monomials import Monomial, cmp_lex, cmp_revlex, divides, max_index, monomials_of_degree
from .osequences import (
    OSequence,
    check_m_times_wl,
    delta,
    is_m_times_wl,
    is_o_sequence,
    macaulay_bound,
)

__all__ = [
    "BettiTable",
    "dominates",
    "ek_graded_betti",
    "ek_total_betti",
    "graded_betti",
    "koszul_graded_betti",
    "render_diagram",
    "DistractionMatrix",
    "LinearForm",
    "Polynomial",
    "RationalPoint",
    "distract_ideal",
    "distract_monomial",
    "distraction_points",
    "irreducible_components",
    "is_radical_for",
    "is_valid_distraction",
    "make_standard_distraction",
    "poly_ideal_hilbert",
    "MonomialIdeal",
    "artinian_hilbert_function",
    "contains",
    "hilbert_function",
    "is_artinian",
    "is_stable",
    "is_strongly_stable",
    "lex_segment",
    "max_stats",
    "minimalize",
    "project_rho",
    "standard_monomials",
    "truncate_below",
    "build_w",
    "check_rigidity",
    "has_m_wlp_stable",
    "has_maximal_betti",
    "has_wlp_stable",
    "is_gotzmann",
    "random_m_wlp_ideal",
    "random_strongly_stable",
    "wlp_criterion",
    "Monomial",
    "cmp_lex",
    "cmp_revlex",
    "divides",
    "max_index",
    "monomials_of_degree",
    "OSequence",
    "check_m_times_wl",
    "delta",
    "is_m_times_wl",
    "is_o_sequence",
    "macaulay_bound",
]

__version__ = "0.1.0"
