//! Exact arithmetic for N-state Potts curves over finite fields of odd
//! characteristic: projective linear groups and their finite subgroups,
//! cyclotomic and half-trace polynomials, curve models with their
//! automorphism groups, wild-ramification norm forms, Picard-functor
//! descriptors, and isomorphism censuses of model families.

pub mod curve;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod halftrace;
pub mod moduli;
pub mod pgl2;
pub mod picard;
pub mod poly;
pub mod selftest;
pub mod wildnorm;

pub use picard::{
    hodge_characters, mu_n_structure, picard_descriptor, subgroup_generated, CharacterPair,
    CharacterSpan, HodgeData, PicardDescriptor, TorsionReport, TruncLaurentUnit,
};
pub use curve::{
    aut_order_oracle, automorphisms, canonical_model_from_j, classify_aut, is_isomorphic,
    lift_all, lift_reduced, quarter_j_square_root_check, AutClassification, AutTag,
    AutomorphismMap, AutomorphismSet, BranchData, IsoReport, IsoWitness, OracleReport,
    PottsModel, RelationReport, Variant, WildRootData, CURVE_FIELD_CAP, CURVE_SPLITTING_CAP,
};
pub use cyclotomic::{
    cyclotomic_phi, half_trace_chi, half_trace_psi, reduce_mod_p, Dyadic, DyadicPoly, IntPoly,
};
pub use error::{Error, Result};
pub use field::{
    element_order, make_field, make_field_with_cap, primitive_root_of_unity, square_root,
    Embedding, Field, FieldElem, DEFAULT_SIZE_CAP,
};
pub use halftrace::{embed_half_trace, fibre_mod_p, Fibre, HalfTraceElem};
pub use moduli::{
    census_tame, census_wild, cusp_combinatorics, degeneration_check, CensusReport,
    CuspDescriptor, DegenerationReport, JLimit, CENSUS_EXTENSION_CAP,
};
pub use pgl2::{
    classify_subgroup, conjugacy_invariant, enumerate_pgl2, four_point_involution,
    order_by_criterion, order_by_powering, stabilizer_of_set, standard_order_n, subgroup_closure,
    survey_order_p, OrderPSurvey, ProjMap, ProjPoint, SubgroupClass, SubgroupTag,
    DEFAULT_CLOSURE_CAP,
};
pub use selftest::{run_all, CriterionOutcome, SELFTEST_SEED};
pub use poly::{
    radical, resultant, roots_in_field, roots_over_splitting_field, splitting_field, Poly,
    SplittingData, DEFAULT_SPLITTING_CAP,
};
pub use wildnorm::{change_coordinates, ChangeReport, CoordChange, NormContext};
