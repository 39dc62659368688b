//! Finite permutation-group engine: closure, covering by conjugates,
//! subgroup classes, Frobenius structure, and a catalog of Frobenius groups.

pub mod catalog;
pub mod cover;
pub mod frobenius;
pub mod group;
pub mod perm;
pub mod subgroups;

pub use catalog::{affine_frobenius, c3c3_q8, frobenius_catalog};
pub use cover::{covers, covers_sets, joint_core_trivial, joint_core_trivial_sets, CoverReport};
pub use frobenius::{frobenius_structure, lemma24_check, FrobeniusStructure, Lemma24Report};
pub use group::PermGroup;
pub use perm::Perm;
pub use subgroups::{maximal_classes, min_cover_m, subgroup_classes, MinCover, SubgroupClass};
