//! The chapters of the guide in `book/src`, included as documentation so
//! that `cargo test -p ore-book` runs every Rust snippet in them.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/valuations.md")]
pub mod valuations {}

#[doc = include_str!("../../../book/src/finite-fields.md")]
pub mod finite_fields {}

#[doc = include_str!("../../../book/src/newton-polygons.md")]
pub mod newton_polygons {}

#[doc = include_str!("../../../book/src/residual-polynomials.md")]
pub mod residual_polynomials {}

#[doc = include_str!("../../../book/src/ore-and-dedekind.md")]
pub mod ore_and_dedekind {}

#[doc = include_str!("../../../book/src/monogenity.md")]
pub mod monogenity {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
