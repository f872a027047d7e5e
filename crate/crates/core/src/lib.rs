//! Vanishing conjugacy classes and prime graphs of finite permutation groups.

pub mod chartab;
pub mod classes;
pub mod cyclotomic;
pub mod deleted;
pub mod error;
pub mod group;
pub mod harness;
pub mod modp;
pub mod perm;
pub mod primes;
pub mod sepsets;
pub mod structure;
pub mod symchar;
pub mod vanishing;

pub use chartab::{dixon_character_table, CharacterTable};
pub use classes::{ClassedGroup, ConjugacyClassSet};
pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use group::{ElementIndex, Limits, PermGroup, DEFAULT_ENUM_CAP, DEFAULT_QUOTIENT_CAP};
pub use perm::Permutation;
