//! Position-dependent-mass quantum systems built by point canonical
//! transformation from the Morse, Pöschl-Teller and Hulthén problems, with a
//! finite-difference eigensolver to check them.
//!
//! Everything numerical is generic over [`Real`] (`f32` or `f64`). The
//! aliases below fix the scalar to `f64`, which is what the tolerances in
//! the test suite assume.
//!
//! ```
//! use pct_core::{Morse, Profile, Target};
//!
//! let profile = Profile::asymptotically_vanishing(4.0, 1.0).unwrap();
//! let target = Target::auto(&profile, Morse::new(8.0, 1.0).unwrap().into(), 3, 1e-8).unwrap();
//! assert_eq!(target.target_energy(0).unwrap(), -6.125);
//! ```

pub mod eigensolver;
pub mod error;
pub mod exprlang;
pub mod massmodel;
pub mod pctengine;
pub mod qmath;
pub mod refpotentials;
pub mod scalar;

pub use error::{Error, Result};
pub use massmodel::{Interval, MassKind};
pub use refpotentials::{Hulthen, Morse, PoschlTeller, ReferenceKind};
pub use scalar::Real;

pub type Jet = exprlang::Jet2<f64>;
pub type Profile = massmodel::MassProfile<f64>;
pub type MappingFn = massmodel::Mapping<f64>;
pub type Reference = refpotentials::ReferenceSystem<f64>;
pub type Target = pctengine::TargetSystem<f64>;
pub type Grid = eigensolver::Grid<f64>;
pub type GridFunction = eigensolver::GridFunction<f64>;
pub type EigenResult = eigensolver::EigenResult<f64>;
pub type Params = exprlang::ParamTable<f64>;
