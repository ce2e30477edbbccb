"""Exact symbolic computation in the direct sum of all Cuntz algebras.

The package provides the dense finitely-supported subalgebra with exact
Gaussian-rational coefficients, the divisor-indexed comultiplication and
counit that make it a bialgebra, the classification of component sets
into subbialgebras and biideals through prime-set-generated submonoids,
an expression grammar with a canonical printer, and seeded property
suites that mechanically verify the axioms.
"""

from .algebra import (
    AlgebraElement,
    CuntzMonomial,
    RawWord,
    ZERO_ELEMENT,
    add,
    adjoint,
    canonical_form,
    coefficient_extract,
    equals,
    expand_to_level,
    from_monomial,
    generator,
    monomial,
    mul,
    raw_word,
    reduce_word,
    unit,
)
from .bialgebra import (
    check_coassociativity,
    check_counit_laws,
    check_hom_property,
    check_wcs_axiom,
    counit,
    counit_contract_left,
    counit_contract_right,
    delta,
    delta_H,
    delta_restricted,
    lift_left,
    lift_right,
    phi,
    tensor_adjoint,
    tensor_equals,
    tensor_mul,
)
from .classify import (
    Classification,
    ComponentPredicate,
    Decomposition,
    check_biideal_on_generators,
    classify_component_set,
    decompose,
    lattice_iso_check,
    quotient_morphism_check,
)
from .errors import InputError, ParseError
from .exprs import (
    deserialize_element,
    parse_element,
    render_element,
    render_tensor,
    serialize_element,
    serialize_tensor,
)
from .monoids import (
    FREE_MONOID_AB,
    NATURALS,
    NATURALS_MONOID,
    FreeMonoid,
    MonoidSpec,
    NaturalsMonoid,
    PowerSubmonoid,
    PrimeSet,
    SubmonoidView,
    SubsetWindow,
    complement_duality_check,
    divisor_pairs,
    factor_pairs,
    is_factorial,
    is_ideal,
    is_prime,
    is_prime_subset,
    is_subsemigroup,
    lattice_join,
    lattice_meet,
    prime_factorize,
    submonoid_member,
    subset_window,
    window_of,
)
from .scalars import Scalar
from .suites import SuiteConfig, SuiteReport, run_property_suite
from .tensors import (
    TensorElement,
    TripleTensorElement,
    canonical_tensor_form,
    simple_tensor,
    tensor_unit,
)

__version__ = "0.1.0"
