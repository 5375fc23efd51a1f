"""Exact concordance-order obstructions for knots from their Seifert matrices.

The pipeline: branched-cover homology and its linking form, metabolizers of
``d`` copies of a cyclic Z_p linking form, and group-ring certificates
``h f = n`` that force ``n tau(K, chi_1) = 0``.
"""

from .errors import *  # noqa: F401,F403
from .group_ring import (
    DlogTable,
    GroupRingElement,
    dlog_table,
    integer_in_ideal,
    is_coprime_to_cyclotomic,
    relation_from_vector,
    ring_multiply,
    scalar_action,
)
from .homology_linking import (
    Character,
    FiniteAbelianGroup,
    PrimaryLinkingForm,
    bordism_class,
    branched_cover_homology,
    primary_linking_form,
    sigma_p_mod_p,
    smith_normal_form,
)
from .knot_algebra import (
    UNKNOT,
    IntLaurentPolynomial,
    KnotRecord,
    SeifertMatrix,
    alexander_polynomial,
    connected_sum,
    knot_determinant,
    twisted_double_seifert,
)
from .metabolizer import (
    DiagonalLinkingSpace,
    Metabolizer,
    MetabolizerCertificate,
    certify,
    echelon_normalize,
    enumerate_metabolizers,
    is_self_annihilating,
    sum_basis_relation,
)
from .obstruction import (
    Verdict,
    analyze,
    connected_sum_obstruction,
    family_independence_certificate,
    independent_family,
    infinite_order_verdict,
    quadratic_order4_check,
)

__version__ = "0.1.0"
