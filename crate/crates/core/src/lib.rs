//! Exact-arithmetic tools for genus-2 curves over discretely valued fields.
//!
//! The crate is organized bottom-up:
//!
//! * [`valfield`]: valued scalars over `Q` (p-adic) and `Q(t)` (t-adic), and the
//!   extended value set `Q ∪ {+∞}`.
//! * [`igusa`]: Igusa invariants of quintic models and their valuations.
//! * [`redtype`]: w-functions, stable reduction type, thicknesses, component
//!   groups and the metric dual graph.
//! * [`metgraph`]: metric graphs, divisors, the Laplacian and graph Jacobians.
//! * [`tropfun`]: piecewise affine functions with integer slopes, expansion
//!   factors and separation of points.
//! * [`torsion`]: torsion-divisor constructions on elliptic and genus-2 skeletons.
//!
//! No floating point is used anywhere.

pub mod igusa;
pub mod metgraph;
pub mod redtype;
pub mod torsion;
pub mod tropfun;
pub mod valfield;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
