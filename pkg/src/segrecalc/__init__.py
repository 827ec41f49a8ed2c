"""segrecalc: Segre classes of projective subschemes over exact rationals.

Layers, bottom up: ``polyring`` (sparse exact polynomials), ``groebner``
(Buchberger bases, saturation, elimination, Hilbert data, tangent cones),
``chow`` (truncated class arithmetic on P^n), ``segre`` (the
projective-degrees Segre engine and the regular-embedding oracle),
``cancel`` (complete-intersection cancellation and its verifiers),
``curves`` (multiplicity formula evaluators), ``lang``/``cli`` (the input
language and command surface).
"""

from .chow import (
    ChowClass,
    DimIndexedClass,
    SplitBundle,
    binom_power,
    cap_with_bundle,
    chow_class,
    class_degree,
    class_inv,
    class_mul,
    to_dim_indexed,
)
from .errors import SegrecalcError
from .groebner import (
    GroebnerBasis,
    HilbertData,
    Ideal,
    buchberger,
    eliminate,
    hilbert_dim_degree,
    ideal,
    ideal_quotient,
    image_under_map,
    normal_form,
    saturate,
    tangent_cone_multiplicity,
)
from .polyring import (
    GREVLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    Ring,
    elimination_order,
    monomial_compare,
    poly_mul,
    poly_normalize,
    substitute_linear,
)
from .segre import (
    ProjectiveDegrees,
    SchemeSpec,
    SegreResult,
    point_segre_multiplicity,
    projective_degrees,
    raise_to_common_degree,
    regular_segre_oracle,
    scheme,
    segre_class,
)
from .cancel import (
    CancellationInput,
    CancellationReport,
    cancel_segre,
    verify_composition,
    verify_independence,
)
from .curves import (
    CMKInput,
    RKFInput,
    cmk_multiplicities,
    generalized_rkf_class,
    proof_chain_check,
    rkf_multiplicity,
    theta_multiplicity_readings,
)

__version__ = "0.1.0"
