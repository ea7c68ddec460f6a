//! Local zeta functions: Igusa series by point counting, forms that are
//! strongly non-degenerate mod `π`, zeta functions against `e^{-‖ξ‖^α}`,
//! elementary monomial integrals and pole prediction.

pub mod igusa;
pub mod snc;
pub mod hinf;
pub mod elementary;
pub mod heat;
pub mod poles;

pub use igusa::{igusa_series, igusa_series_with_budget, monomial_zeta_closed, ZetaSeries};
