"""Simplicial complements, stellar subdivision and Hochster-formula
(co)homology of moment-angle complexes, in exact integer arithmetic."""

from .complement import (
    Complement,
    complement_join,
    complement_minus,
    complex_from_complement,
    equivalent,
    is_complement_of,
    missing_faces,
    reduce,
    restrict,
)
from .complex import (
    Complex,
    ComplexError,
    boundary_star,
    full_subcomplex,
    int_star,
    is_full_subcomplex,
    is_subcomplex,
    join_complex,
    link,
    simplex,
    star,
)
from .hochster import (
    HochsterReport,
    cubical_oracle_rz,
    hochster,
    hochster_complex,
    hochster_real,
    hochster_summand,
)
from .homology import (
    AbelianGroup,
    HomologyProfile,
    IntegerMatrix,
    boundary_matrix,
    reduced_cohomology,
    reduced_homology,
    smith_normal_form,
)
from .subdivision import (
    ConstructionTrace,
    SubdivisionStep,
    construct_full_embedding,
    cross_validate_step,
    stellar_complement,
    stellar_subdivide,
)
from .verify import SphereCertificate, dimension_report, iso_search, verify_sphere

__version__ = "0.1.0"
