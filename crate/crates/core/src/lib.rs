//! Factorizations of finite groups with a solvable factor.
//!
//! The crate is organised bottom-up:
//!
//! - [`perm`]: permutations, stabilizer chains, coset actions, subgroups;
//! - [`gf`]: finite fields, matrices, classical forms and group orders;
//! - [`constructions`]: solvable parabolic factors `H = R:S` of classical
//!   groups and their orbit certificates;
//! - [`numth`]: primitive prime divisors, prime parts and the common-divisor
//!   inequality for simple groups;
//! - [`factorlab`]: certified factorizations `G = HK` and table checks;
//! - [`arcgraph`]: coset and Cayley graphs, automorphisms, s-arc transitivity.
//!
//! Permutations act on the right: `compose(p, q)` maps `x` to `q(p(x))`.

pub mod arcgraph;
pub mod constructions;
pub mod error;
pub mod factorlab;
pub mod gf;
pub mod io;
pub mod numth;
pub mod perm;

pub use error::{Error, Result};
