//! Combinatorics of finite-dimensional irreducible GL(m|n)-modules: weight and cup
//! diagrams, Duflo-Serganova reduction, superdimensions, tensor products modulo
//! negligible morphisms and Kac module composition factors.

pub mod classical;
pub mod diagrams;
pub mod error;
pub mod functors;
pub mod fusion;
pub mod kac;
pub mod weights;

pub use classical::{
    det_exponent, group_fusion, is_covariant_max_atypical, lr_coefficients, schur_product_oracle,
    weyl_dim, ClassicalWeight, FusionLabel, FusionTable, GroupFamily, LabelKind,
    PrincipalFusionSpec, Realization,
};
pub use diagrams::{
    cup_diagram, dual, forest_mirror, from_spaced_forest, is_oriented, sectors, to_spaced_forest,
    Arc, CupDiagram, MarkedSpacedForest, PlanarTree, Sector,
};
pub use error::{Error, Result};
pub use functors::{
    ds, ds_paths, ds_power, eta0_reduce, ground_state, ground_state_level, pi_power, pi_shift,
    pi_unshift, stabilize,
    translate_e, translate_f, DsSummand, PathCount, TranslationResult,
};
pub use fusion::{
    compose_image, determinant, image, sdim, splice, tensor_blockwise, tensor_ground_states,
    tensor_mod_negligible, Determinant, FusionResult, FusionSummand, PrincipalDet,
    PrincipalFactor, SemisimpleImage, SplitWeight,
};
pub use kac::{kac_composition_factors, kac_composition_factors_in, kac_restriction_bijection, kac_window};
pub use weights::{
    atypicality, block_label, diagram_to_weight, is_maximal_atypical, is_negligible_irreducible,
    is_negatively_stable, is_stable, parity, weight_to_diagram, BlockLabel, Label, SuperWeight,
    WeightDiagram,
};
