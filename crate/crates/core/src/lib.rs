//! Exact character arithmetic for `so(2m+1)`, the dimension count for
//! `Spin(9)`-invariant valuations on the octonionic plane, and octonionic
//! sectional-curvature checks.

pub mod error;
pub mod laurent;
pub mod lie;
pub mod octgeo;
pub mod valdim;

pub use error::{Error, Result};
pub use laurent::{ExponentVector, LaurentPolynomial};
pub use lie::{
    exterior_power_char, exterior_powers, weyl_dim, BaseRep, Decomposition, HighestWeight, TypeB,
};
