//! Number theory for group orders.

pub mod arith;
pub mod lemmas;
pub mod ppd;
pub mod simple;

pub use lemmas::{check_r_part_lemma, dixon_bound_check, factorial_p_part, RPartReport};
pub use ppd::{multiplicative_order, primitive_prime_divisors, zsigmondy_exception, PpdResult};
pub use simple::{common_divisor_check, common_divisor_sweep, min_index, CommonDivisorReport, SimpleGroupId};
