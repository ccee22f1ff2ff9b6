"""Clifford-form rank invariants of nilpotent orbits in Lie superalgebras.

The rank k of the odd-odd bracket form evaluated at an orbit point, the
derived bound ell = floor((k+1)/2), parabolic induction numerics built on
it, and exact oracles for all of these.
"""

from __future__ import annotations

from .algebra import (
    GZeroElement,
    OddFormMatrix,
    SuperAlgebra,
    build_algebra,
    centralizer_dims,
    evaluate_form,
    form_matrix,
    jordan_type,
    orbit_representative,
)
from .characters import WeightPolynomial, check_dim_identity, decompose, exterior_character, levi_weyl_dim
from .families import AlgebraSpec, Family, OrbitLabel, orbit_labels
from .invariants import (
    InvariantReport,
    VerificationReport,
    ell,
    epsilon,
    even_orbit_dim,
    k_formula,
    k_oracle,
    resolve_p_convention,
    superdimension,
    verify_family,
)
from .parabolic import (
    GradedParabolic,
    InducedNumerics,
    find_good_parabolic,
    induced_numerics,
    is_good,
    parabolic_from_degrees,
    richardson_orbit,
)
from .partitions import (
    Partition,
    PartitionClass,
    dual,
    enumerate_partitions,
    is_very_even,
    jordan_matrix,
    kron_jordan_rank,
    min_sum,
    parse_partition,
)

__version__ = "0.1.0"
