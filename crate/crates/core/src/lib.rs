//! Exact evaluation of the closed-form predictions for cohomology and
//! extension groups of tautological bundles on punctual Quot schemes of
//! smooth projective curves.
//!
//! The crate is organized around a handful of small modules:
//!
//! * [`graded`] — the [`GradedDim`] value type and its exact calculus
//!   (tensor, dual, shift, super-graded symmetric and exterior powers);
//! * [`oracle`] — an independent brute-force enumeration of the same powers,
//!   used as ground truth;
//! * [`curve`] — bundle classes on the curve and the policies that produce
//!   their cohomology via Riemann-Roch;
//! * [`formulas`] — the prediction formulas themselves, with proven versus
//!   conjectural status and generic-assumption tainting;
//! * [`geometry`] — dimensions, tautological ranks, and Betti numbers of the
//!   spaces involved.
//!
//! Everything is pure and immutable after construction; all operations are
//! safe to call concurrently.

pub mod binomial;
pub mod curve;
pub mod formulas;
pub mod geometry;
pub mod graded;
pub mod oracle;

pub use curve::{BundleClass, CohPolicy, Cohomology, CurveError, CurveModel};
pub use formulas::{
    conjecture_rhs, consistency_sweep, dual_vanishing, functor_composition, quot_ext,
    quot_pushforward_class, quot_taut_coh, sym_product_taut_coh, twisted_quot_coh,
    twisted_quot_ext, twisted_quot_vanishing, twisted_sym_coh, FormulaError, PredictionReport,
    PushforwardClass, QuotContext, Status, SweepRanges, SweepReport, Verdict,
};
pub use geometry::{GeometryError, SpaceInfo};
pub use graded::GradedDim;
pub use oracle::{EquivalenceSweep, GradedBasis, OracleError};
