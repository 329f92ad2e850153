//! Compiles and runs the listings of the guide in `book/` as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/scalars-and-spaces.md")]
pub mod scalars_and_spaces {}

#[doc = include_str!("../../../book/src/hopf-algebras.md")]
pub mod hopf_algebras {}

#[doc = include_str!("../../../book/src/cocycles.md")]
pub mod cocycles {}

#[doc = include_str!("../../../book/src/cleft-extensions.md")]
pub mod cleft_extensions {}

#[doc = include_str!("../../../book/src/lifting.md")]
pub mod lifting {}

#[doc = include_str!("../../../book/src/oracles.md")]
pub mod oracles {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
