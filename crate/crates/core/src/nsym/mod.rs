//! Noncommutative symmetric functions: elements in the complete (H), ribbon
//! (R), noncommutative Schur (S) and power sum (PSI) bases, conversions,
//! products and Murnaghan-Nakayama evaluators.

mod cache;
mod convert;
mod element;
mod mn;
mod product;

pub use cache::{d_matrix_cached, schur_to_ribbon_matrix, InverseMatrix};
pub use convert::{convert, from_ribbon, h_to_ribbon, ribbon_to_h, ribbon_to_schur, schur_to_ribbon, to_ribbon};
pub use element::{Basis, Element};
pub use mn::{mn, mn_connected, mn_primordial, mn_ribbon_route, mn_rule, MnMethod};
pub use product::{mul, mul_col_schur, mul_hook_ribbon_schur, mul_ribbon, mul_row_schur, psi_expand};
