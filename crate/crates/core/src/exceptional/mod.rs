//! Exceptional objects and sequences, mutations and dual sequences.

mod aisle;
mod mutation;
mod sequence;

#[cfg(test)]
mod tests;

pub use aisle::{
    fullness_necessary_conditions, glued_aisle_membership, restriction_hypotheses, AisleMembership, FullnessReport,
    RestrictionReport,
};
pub use mutation::{left_mutation, left_mutation_unchecked, right_mutation, right_mutation_unchecked};
pub use sequence::{
    is_exceptional, is_exceptional_module, is_exceptional_pair, hom_table, is_exceptional_sequence, left_dual_sequence,
    verify_hom_duality, DualPair, ExceptionalSequence, HomTable, Verdict,
};
