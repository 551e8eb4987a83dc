//! The elliptic-surface side: Legendre fibers and their fixed points,
//! polynomial continued-fraction sections, Picard numbers, minimal models
//! and the complex-multiplication table.
//!
//! A surface or fiber is represented only through its torus parameter θ.

mod cm;
mod legendre;
mod section;

pub use cm::{palindrome_shape, CMSpec, CmRow, CLASS_NUMBER_ONE_TABLE};
pub use legendre::{LegendreSurface, SurfaceMatrix};
pub use section::{minimal_model_theta, section_verify, tate_shioda_check, CFSection, VerifyRow};
