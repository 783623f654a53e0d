"""Mixed Hodge numbers of configuration spaces of punctured Riemann surfaces."""

from .algebra import (
    XYUT,
    XYZ,
    DenominatorFactor,
    Poly,
    RationalGF,
    Ring,
    TruncatedSeries,
    expand_factor_inverse,
    expand_rational,
    poly_mul,
)
from .dgcomplex import (
    GammaTuple,
    GradedDimTable,
    IntMatrix,
    block_cohomology_dims,
    closed_form_block_dims,
    cohomology_hilbert,
    differential_block,
    enumerate_gamma,
    iota_matrix,
)
from .genfun import (
    PHI,
    PSI,
    HodgeTable,
    apply_shift,
    base_polynomial,
    expand_surface,
    hodge_table,
    specialize,
    strand_gf,
    theorem_a_gf,
)

__version__ = "0.1.0"
