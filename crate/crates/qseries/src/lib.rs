//! Exact truncated q-series: univariate over big integers and Gaussian
//! integers, bivariate in (t, q), with infinite-product expansion of
//! Pochhammer-style factor families.
//!
//! This crate is the generating-function side of the seaweed index
//! toolkit. Its only tie to the enumeration crate is
//! [`bivariate::partition_class_gf`], which tabulates a partition class
//! into a bivariate series; everything else is pure series arithmetic.

pub mod bivariate;
pub mod gauss;
pub mod product;
pub mod series;

pub use bivariate::{partition_class_gf, BivariateSeries, ParityViolation};
pub use gauss::GaussInt;
pub use product::{
    BivariateFactorFamily, BivariateProductSpec, CoeffPattern, FactorFamily, ProductSpec,
    SpecError, SpecParseError,
};
pub use series::{Coeff, JsonCoeff, NonUnitConstantTerm, Series};
