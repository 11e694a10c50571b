from .category import (
    FinCat,
    IooFunctor,
    category_from_functions,
    check_fincat,
    check_functor,
    discrete_category,
    identity_functor,
    make_fincat,
    make_functor,
    poset_category,
    product_category,
    terminal_category,
    walking_arrow,
)
from .closed import closed_hom, closure_check, presheaf_tensor
from .codec import fincat_from_dict, fincat_to_dict, monoid_from_dict, profunctor_from_dict
from .coend import (
    check_extranatural,
    coend,
    compose_profunctors,
    end_,
    factor_through_coend,
    induced_bijection_check,
    induced_map,
    quotient,
)
from .day import day_assoc_check, day_associator, day_convolve, day_unit, day_unit_check
from .effectful import (
    EffectfulCategory,
    check_effectful,
    identity_effectful,
    make_writer_effectful,
    writer_constant,
)
from .examples import resolve_example
from .exceptions import FinCatError, LawViolationError, SizeExceededError
from .funny import FunnyTensor, FunnyWord, funny_tensor, funny_word_compose
from .kan import lan_bijection_check, lan_extend
from .monoidal import (
    FinMonoid,
    MonStructure,
    check_mon_structure,
    cyclic_monoid,
    discrete_monoidal,
    interchange_witness,
    is_central_arrow,
    is_monoidal,
    left_zero_monoid,
    make_monoid,
    make_mon_structure,
    terminal_monoidal,
    walking_arrow_monoidal,
)
from .optic_hom import (
    horizontal_tensor_two_ways,
    optic_category_check,
    optic_hom_coend,
    optic_hom_compose,
    optic_hom_map,
    optic_identity,
)
from .presheaf import (
    FinPresheaf,
    check_nat,
    check_presheaf,
    constant_presheaf,
    make_presheaf,
    nat_transformations,
    representable,
    restrict_presheaf,
)
from .proaction import (
    identity_comparison,
    left_proaction,
    proaction_square_check,
    pure_proaction,
    right_proaction,
)
from .profunctor import (
    FinProfunctor,
    check_bijective,
    check_natural,
    check_profunctor,
    constant_profunctor,
    hom_profunctor,
    make_profunctor,
    natural_iso_check,
    restrict_profunctor,
)
from .promonad import (
    Promonad,
    check_promonad,
    kleisli_bijection_check,
    kleisli_category,
    promonad_from_ioo,
    promonad_table,
)
from .schemas import CheckResult, CoendResult, V2CoendResult
from .tambara import (
    Promonoidal,
    canonical_prostrength,
    promonoidal_check,
    prostrength_check,
    representable_promonoidal,
    tambara_check,
    whiskering_strengths,
)
from .v2 import (
    V2Profunctor,
    check_v2,
    hom_v2,
    identity_v2,
    is_tight,
    make_v2,
    restriction_v2,
    v2_coend,
    v2_compose,
)
from .verify import CHECKERS, resolve_checks, verify_effectful

__all__ = [
    "FinCat",
    "IooFunctor",
    "category_from_functions",
    "check_fincat",
    "check_functor",
    "discrete_category",
    "identity_functor",
    "make_fincat",
    "make_functor",
    "poset_category",
    "product_category",
    "terminal_category",
    "walking_arrow",
    "closed_hom",
    "closure_check",
    "presheaf_tensor",
    "fincat_from_dict",
    "fincat_to_dict",
    "monoid_from_dict",
    "profunctor_from_dict",
    "check_extranatural",
    "coend",
    "compose_profunctors",
    "end_",
    "factor_through_coend",
    "induced_bijection_check",
    "induced_map",
    "quotient",
    "day_assoc_check",
    "day_associator",
    "day_convolve",
    "day_unit",
    "day_unit_check",
    "EffectfulCategory",
    "check_effectful",
    "identity_effectful",
    "make_writer_effectful",
    "writer_constant",
    "resolve_example",
    "FinCatError",
    "LawViolationError",
    "SizeExceededError",
    "FunnyTensor",
    "FunnyWord",
    "funny_tensor",
    "funny_word_compose",
    "lan_bijection_check",
    "lan_extend",
    "FinMonoid",
    "MonStructure",
    "check_mon_structure",
    "cyclic_monoid",
    "discrete_monoidal",
    "interchange_witness",
    "is_central_arrow",
    "is_monoidal",
    "left_zero_monoid",
    "make_monoid",
    "make_mon_structure",
    "terminal_monoidal",
    "walking_arrow_monoidal",
    "horizontal_tensor_two_ways",
    "optic_category_check",
    "optic_hom_coend",
    "optic_hom_compose",
    "optic_hom_map",
    "optic_identity",
    "FinPresheaf",
    "check_nat",
    "check_presheaf",
    "constant_presheaf",
    "make_presheaf",
    "nat_transformations",
    "representable",
    "restrict_presheaf",
    "identity_comparison",
    "left_proaction",
    "proaction_square_check",
    "pure_proaction",
    "right_proaction",
    "FinProfunctor",
    "check_bijective",
    "check_natural",
    "check_profunctor",
    "constant_profunctor",
    "hom_profunctor",
    "make_profunctor",
    "natural_iso_check",
    "restrict_profunctor",
    "restriction_v2",
    "Promonad",
    "check_promonad",
    "kleisli_bijection_check",
    "kleisli_category",
    "promonad_from_ioo",
    "promonad_table",
    "CheckResult",
    "CoendResult",
    "V2CoendResult",
    "Promonoidal",
    "canonical_prostrength",
    "promonoidal_check",
    "prostrength_check",
    "representable_promonoidal",
    "tambara_check",
    "whiskering_strengths",
    "V2Profunctor",
    "check_v2",
    "hom_v2",
    "identity_v2",
    "is_tight",
    "make_v2",
    "v2_coend",
    "v2_compose",
    "CHECKERS",
    "resolve_checks",
    "verify_effectful",
]
