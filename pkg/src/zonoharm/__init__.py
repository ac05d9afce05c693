"""Exact computation of graded function-space filtrations on the interior
lattice points of zonotopes of totally unimodular arrangements, together with
the Tutte-polynomial identities that govern them."""

from .arrangement import (
    Cocircuit,
    LatticePointSet,
    VectorArrangement,
    contraction,
    deletion,
    enumerate_cocircuits,
    interior_lattice_points,
    is_totally_unimodular,
    loops_and_coloops,
)
from .graphs import (
    Arrow,
    BivariatePolynomial,
    DirectedGraph,
    cographical_arrangement,
    enumerate_oriented_cycles,
    graph_rank,
    su2_poincare_polynomial,
    theta_subgraphs,
    tutte_of_arrangement,
    tutte_polynomial,
)
from .harmonics import (
    FiltrationReport,
    GradedClass,
    Harmonics,
    compute_filtration,
    deletion_contraction_check,
    divided_power,
    divided_power_generation_check,
    iz_hilbert_series,
    rees_data,
    verify_saturation,
)
from .ideals import (
    IdealGenerator,
    k_minus_generators,
    power_ideal_quotient_dims,
    pure_power_generators,
    redundant_generators,
    verify_vanishing,
)

__version__ = "0.1.0"
