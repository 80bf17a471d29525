"""Finite semigroup expansions and decision procedures."""

from ._sgrp import (
    DEFAULT_BUDGET,
    IDENTITY,
    AbsorptionLevel,
    AbsorptionReport,
    AlternatingForm,
    BudgetError,
    CsRetraction,
    DistanceOneReport,
    EquidivReport,
    Error,
    FiniteSemigroup,
    GeneratingMap,
    GreenData,
    Homomorphism,
    Identity,
    IdentityCheck,
    KrCoverReport,
    KrExpansion,
    KrTower,
    KrTowerLevel,
    LscReport,
    LscViolation,
    QuotientResult,
    SeparationResult,
    TowerLscLevel,
    TruncatedFreeProduct,
    TwoSidedCayleyGraph,
    VMorphismReport,
    adjoin_identity,
    check_absorption,
    check_distance_one_equidivisibility,
    check_identity_adjunction_preserves_cover,
    check_tower_lsc,
    content_hash,
    cs_retraction,
    eval_word,
    expansion_sidecar_json,
    form_to_string,
    greens,
    hom_from_generator_images,
    induced_hom,
    is_completely_simple,
    is_equidivisible,
    is_kr_cover,
    is_letter_super_cancellative,
    is_v_morphism,
    kr_expand,
    kr_tower,
    minimal_ideal,
    normal_form,
    oracle_classes,
    quotient,
    rees_matrix,
    rees_quotient,
    satisfies_identity,
    satisfies_identity_on,
    semigroup_from_json,
    semigroup_to_json,
    separate,
    truncated_free_product,
    validate_generating,
    word_to_string,
    words_up_to,
)

__all__ = [name for name in dir() if not name.startswith("_")]
