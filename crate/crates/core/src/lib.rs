//! Exact computational algebra for equivariant polynomial self-maps.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is computed over
//! cyclotomic fields with exact rational coefficients:
//!
//! * [`scalars`]: the fields `Q(ζ_n)`.
//! * [`linalg`]: dense exact linear algebra over those fields.
//! * [`groups`]: binary polyhedral and diagonal matrix groups, linear
//!   characters, abstract multiplication tables.
//! * [`forms`]: binary (and n-ary) forms as group modules, Reynolds
//!   projections, gcd of binary forms.
//! * [`compress`]: Poincaré-type series, homogeneous self-compressions and
//!   their certificates, invariant-form based self-maps.
//! * [`jordan`]: brute-force Jordan constants and p-ranks of finite tables.
//! * [`connect`]: the path family joining an origin-normalized polynomial
//!   map to the identity.
#![no_std]

extern crate alloc;

pub mod compress;
pub mod connect;
pub mod error;
pub mod forms;
pub mod groups;
pub mod jordan;
pub mod linalg;
pub mod poly;
pub mod scalars;

pub use error::{Error, Result};
pub use scalars::{CycField, CycNum, Rational};
