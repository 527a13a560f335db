//! Skew cyclic and skew constacyclic codes over `F_q` and over
//! `R = F_q + uF_q + vF_q + uvF_q` with `u² = u`, `v² = v`, `uv = vu`.

pub mod algebra;
pub mod codes;
pub mod decomp;
pub mod error;
pub mod examples;
pub mod gf;
pub mod gray;
pub mod json;
pub mod linalg;
pub mod ring4;
pub mod skewpoly;

pub use algebra::{CoeffRing, Untwisted};
pub use codes::{ShiftKind, SkewCode};
pub use error::{Error, Result};
pub use gf::{Fe, FieldSpec, GaloisField};
pub use linalg::Subspace;
pub use ring4::{RElem, RingR, UnitReport};
pub use skewpoly::{ModulusSpec, SkewPoly, SkewPolyRing};
