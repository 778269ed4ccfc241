//! Tropical reductive groups and tropical principal bundles on metric circles.
#![allow(clippy::needless_range_loop)]

pub mod circle_bundles;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod perm;
pub mod rat;
pub mod root_data;
pub mod stability;
pub mod trop_core;
pub mod trop_group;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use rat::Rational;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/semiring.md")]
    mod semiring {}
    #[doc = include_str!("../../../book/src/root_data.md")]
    mod root_data {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/circle_bundles.md")]
    mod circle_bundles {}
    #[doc = include_str!("../../../book/src/stability.md")]
    mod stability {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
