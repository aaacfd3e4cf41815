//! Exact computation with finite-dimensional semisimple Hopf algebras.

pub mod arith;
pub mod builders;
pub mod characters;
mod error;
pub mod hopf;
pub mod integrals;
pub mod linalg;
pub mod pipeline;
pub mod theorems;
pub mod wedderburn;

pub use error::{Error, Result};

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
pub mod book_introduction {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/scalars.md")]
pub mod book_scalars {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/building.md")]
pub mod book_building {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/blocks.md")]
pub mod book_blocks {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/characters.md")]
pub mod book_characters {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/verification.md")]
pub mod book_verification {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
pub mod book_cli {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/formats.md")]
pub mod book_formats {}
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub mod readme {}
