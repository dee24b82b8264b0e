//! Exact computations with finite groups, their group algebras `FG`, the Lie
//! algebras `L_FG` obtained from the commutator bracket, and the Plesken Lie
//! algebras `𝓛(G) = span{g - g⁻¹}`.
//!
//! On top of the algebra sits [`functor`], which materializes the functor
//! `T : L_FG → 𝓛(G)` on the category of subgroups of a finite group and checks
//! the functor laws, fullness, and (non-)faithfulness exhaustively.
//!
//! Scalars are Gaussian rationals ([`Scalar`]), so every identity is checked
//! with exact equality.

pub mod algebra;
pub mod catalog;
pub mod cli;
mod error;
pub mod expr;
pub mod functor;
pub mod group;
pub mod hom;
pub mod linalg;
pub mod plesken;
pub mod random;
pub mod scalar;
pub mod subgroup;

pub use algebra::{AlgebraElement, BarMap};
pub use error::{Error, Result};
pub use functor::{Convention, SubgroupCategory};
pub use group::{build_group, FiniteGroup, GroupSpec};
pub use hom::GroupHom;
pub use plesken::{HatMap, PleskenBasis, PleskenElement, StructureConstants};
pub use scalar::Scalar;
pub use subgroup::Subgroup;
