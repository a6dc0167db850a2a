"""Exact commutative algebra over (localized) polynomial rings.

Groebner bases, syzygies, free resolutions, Koszul homology, Ext/Tor,
and decidable ascent tests for module structures along flat local maps
such as completion.  All arithmetic is exact (prime fields or rationals);
graded invariants stand in for their local counterparts on homogeneous
input.
"""

from .ascent import AscentOracle, ConditionReport, ascends_prime, fact_report, module_ascends, theorem_report
from .complexes import (
    ChainComplex,
    ChainMap,
    KoszulData,
    cone,
    hom_into_module,
    homology,
    is_quasi_iso,
    koszul,
    koszul_tensor_complex,
    koszul_tensor_map,
    multiplication_map,
    shift,
    sup_complex,
    tensor_with_module,
)
from .derived import DerivedTable, derived_table, ext_module, lemma1_witness, tor_module
from .errors import (
    ContextError,
    DomainError,
    DuplicateRingError,
    HomogeneityError,
    InternalError,
    ModascentError,
    ParseError,
    UnboundNameError,
    UnsupportedInputError,
)
from .fields import GF, QQ
from .groebner import (
    GroebnerBasis,
    Submodule,
    buchberger,
    ideal,
    ideal_intersection,
    ideal_quotient,
    ideal_sum,
    krull_dimension,
    module_quotient,
    normal_form,
    radical_membership,
    syzygy_basis,
)
from .harness import (
    CampaignConfig,
    CampaignResult,
    brute_force_oracles,
    run_campaign,
    run_lemma1_campaign,
    run_lemma2_campaign,
    run_theorem_campaign,
)
from .invariants import (
    PrimeIdeal,
    annihilator,
    depth_module,
    dim_module,
    is_finite_length,
    maximal_ideal,
    minimal_primes,
    nak_status,
)
from .modules import (
    ModulePresentation,
    cyclic_quotient,
    free_module,
    presentation_from_rows,
    zero_module,
)
from .resolutions import Resolution, free_resolution, minimal_resolution, minimalize, projective_dimension
from .rings import GREVLEX, LEX, MonomialOrder, PolyRing, Polynomial
from .cli import execute, parse_session, render_session

__version__ = "0.1.0"
