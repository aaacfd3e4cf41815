//! Example Hopf algebras built from finite groups.

mod algebras;
mod group;

pub use algebras::{drinfeld_double, function_algebra, group_algebra, tensor_product};
pub use group::{builtin_group, builtin_group_text, parse_group, write_group, GroupTable, BUILTIN_GROUPS};
