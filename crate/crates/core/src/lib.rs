//! Exact symbolic computation for jet schemes of affine Poisson schemes.
//!
//! * [`arith`]: rationals, jet variables, monomial orders and polynomials.
//! * [`diffalg`]: the derivation `T` and jet / arc ideals of a presentation.
//! * [`groebner`]: Buchberger bases, normal forms, Krull dimension.
//! * [`vpa`]: the level-0 vertex Poisson structure on the arc-space ring.
//! * [`models`]: Virasoro vacuum modules and affine (Kirillov-Kostant) data.

pub mod arith;
pub mod diffalg;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod models;
pub mod vpa;

pub use arith::{Monomial, MonomialOrder, OrderKind, Polynomial, Scalar, VarId, VarNames};
pub use diffalg::{DifferentialRing, JetIdeal, JetWindow, Presentation};
pub use error::{Error, Result};
pub use groebner::{DimensionReport, GroebnerBasis};
pub use linalg::Matrix;
pub use models::{LieAlgebraData, VirasoroModule, VirasoroParams};
pub use vpa::{PoissonStructure, VpaContext};
