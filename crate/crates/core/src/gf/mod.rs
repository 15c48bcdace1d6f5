//! Finite fields, matrices over them, classical forms and group orders.

pub mod action;
pub mod field;
pub mod forms;
pub mod matrix;
pub mod orders;
pub mod poly;
pub mod singer;

pub use action::{form_stabilizer_generators, mat_to_perm, VectorAction};
pub use field::{field_arith, Field, FieldOp, FieldRef, FqElem};
pub use forms::{FormKind, FormedSpace};
pub use matrix::MatFq;
pub use orders::{classical_order, out_order, Classical};
pub use singer::{singer_matrix, singer_matrix_over};
