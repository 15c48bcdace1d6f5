//! Permutation groups: elements, stabilizer chains, subgroup machinery.

pub mod chain;
pub mod group;
pub mod named;
pub mod permutation;
pub mod subgroups;

pub use chain::StabilizerChain;
pub use group::{CosetAction, PermGroup};
pub use permutation::{compose, Permutation};
pub use subgroups::{
    enumerate_subgroups, find_subgroup_by_order, random_subgroup, EnumerationMode, SubgroupClass, SubgroupList,
};
