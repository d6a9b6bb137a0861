"""Orbits of primitive zeros of isotropic integral ternary quadratic forms."""

from .counting import density_report, fit_kappa, kappa, orbit_resolved_count
from .errors import HypothesisError, NotAZeroError, SearchError
from .exact_linalg import (
    Form,
    Unimodular,
    adjugate,
    complete_to_unimodular,
    congruence_transform,
    determinant,
    evaluate,
)
from .heights import HeightVector, make_height_vector
from .invariants import (
    InvariantSet,
    factor_invariants,
    genus_characters,
    omega,
    primitive_adjugate,
)
from .isotropy import ZeroList, enumerate_zeros, find_zero, smith_isotropy_test
from .orbits import (
    GenusOrbitPartition,
    admissible_ells,
    class_orbit_count,
    genus_orbit_sum,
    local_orbit_count,
    orbit_count,
)
from .reduction import (
    CanonicalForm,
    GeneralLabel,
    SpecialLabel,
    TripleForm,
    build_canonical,
    orbit_label,
    reduce_special,
    reduce_to_triple,
)

__version__ = "0.1.0"
