//! Numerical tolerances shared across the crate.
//!
//! All values assume double precision at dimensions up to a few dozen.

/// Hermiticity: max |M - M^dagger| relative to the largest entry magnitude.
pub const HERMITICITY: f64 = 1e-10;

/// Smallest admissible eigenvalue of a state.
pub const PSD: f64 = 1e-9;

/// Allowed |Tr(rho) - 1|.
pub const TRACE: f64 = 1e-10;

/// Slack on |r|^2 <= cos^2(a) sin^2(a).
pub const FEASIBILITY: f64 = 1e-12;

/// Campaign failure threshold on lhs - rhs.
pub const GAP_FAILURE: f64 = -1e-9;

/// Campaign failure threshold on Gram block residuals.
pub const STRUCTURAL_FAILURE: f64 = 1e-10;

/// Below this the right-hand side is treated as zero and the ratio as infinite.
pub const RHS_FLOOR: f64 = 1e-12;

/// Standard deviation below which the rescaling of a pair is undefined.
pub const DEGENERATE_SPREAD: f64 = 1e-9;

/// Allowed negative excursion of a trace functional, relative to its scale.
pub const FUNCTIONAL: f64 = 1e-10;
