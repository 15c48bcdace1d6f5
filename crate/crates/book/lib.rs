//! Compiles every listing of the book in `book/src` as a doctest. Each
//! chapter gets its own module so a failing listing names its chapter.

#[doc = include_str!("../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../book/src/permutations.md")]
pub mod permutations {}
#[doc = include_str!("../../book/src/fields.md")]
pub mod fields {}
#[doc = include_str!("../../book/src/factorizations.md")]
pub mod factorizations {}
#[doc = include_str!("../../book/src/constructions.md")]
pub mod constructions {}
#[doc = include_str!("../../book/src/number-theory.md")]
pub mod number_theory {}
#[doc = include_str!("../../book/src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("../../book/src/cli.md")]
pub mod cli {}
