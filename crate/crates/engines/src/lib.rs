//! Groebner bases for global orders and standard bases for local orders.
//!
//! Both algorithms share the critical-pair machinery; they differ in the
//! reduction used: classical division for global orders, Mora's ecart-driven
//! weak normal form for local ones.

mod basis;
mod error;
mod pairs;
mod polyset;
mod reduce;
mod session;

pub use basis::{buchberger, buchberger_in, standard_basis, standard_basis_in, Basis};
pub use error::EngineError;
pub use pairs::CriticalPair;
pub use polyset::{minimalize, standard_monomials, PolySet};
pub use reduce::{ecart, normal_form, s_polynomial, weak_normal_form};
pub use session::{Options, Session, DEFAULT_STEP_BUDGET};
