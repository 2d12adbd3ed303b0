//! Exact enumeration of standard and barely set-valued Young tableaux
//! (straight and shifted), down-degree expectations on lower intervals of
//! Young's lattice and the shifted Young's lattice, an a;q-weighted refinement,
//! and exact checks of the hypergeometric and q-series identities behind the
//! closed forms.

pub mod error;
pub mod exact;
pub mod shapes;
pub mod tableaux;
pub mod interval;
pub mod cde;
pub mod aq;
pub mod qverify;

pub use error::{Error, Result};
