//! Exact arithmetic for weighted blow-ups of affine space.
//!
//! * [`monomial`]: monomials, rational polynomials and monomial ideals
//!   (products, powers, colons, saturation, radicals).
//! * [`weighted`]: weights, σ-weights and the weighted ideals `I(σ, d)`,
//!   with the power equality `I(σ, L)^d = I(σ, dL)`.
//! * [`symbolic`]: symbolic powers of ideals with a monomial prime radical.
//! * [`blowup`]: orbifold charts, Reid–Tai ages and terminality, and the
//!   chart-substitution membership test.
//! * [`contraction`]: numerical profiles of the divisorial contractions
//!   locally given by the weight `(1, 1, b, ..., b, 0, ..., 0)`.
//! * [`parse`] and [`cli`]: the text front end behind the `wblowup` binary.
//!
//! ```
//! use weighted_blowup::{parse::parse_polynomial, weighted::{sigma_wt, Weight}};
//!
//! let w = Weight::from_nonzero(&[10, 14, 35], 3)?;
//! let g = parse_polynomial("x1^5*x2^4*x3", 3)?;
//! assert_eq!(sigma_wt(&w, &g)?, 141);
//! # Ok::<(), weighted_blowup::Error>(())
//! ```

pub mod blowup;
pub mod cli;
pub mod contraction;
mod error;
pub mod monomial;
pub mod parse;
pub mod symbolic;
pub mod weighted;

pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialIdeal, Polynomial};
pub use weighted::{Verdict, Weight};

// Keeps the guide's snippets compiling and passing.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/monomial_ideals.md")]
    mod monomial_ideals {}
    #[doc = include_str!("../../../book/src/weighted_ideals.md")]
    mod weighted_ideals {}
    #[doc = include_str!("../../../book/src/symbolic_powers.md")]
    mod symbolic_powers {}
    #[doc = include_str!("../../../book/src/charts.md")]
    mod charts {}
    #[doc = include_str!("../../../book/src/contractions.md")]
    mod contractions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
