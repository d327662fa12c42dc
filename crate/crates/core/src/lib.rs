//! Exact symbolic workbench for differential-operator generator algebras.
//!
//! The crate is organized in layers:
//!
//! - [`exactnum`]: exact complex-rational scalars, sparse multivariate
//!   polynomials, rational functions, randomized + exact identity testing,
//!   and exact linear solving.
//! - [`weyl`]: normal-ordered differential operators with polynomial
//!   coefficients (multiplications left of derivatives), products,
//!   commutators, application to functions, and formal adjoints.
//! - [`catalog`]: the model's generator families (rotations, boosts,
//!   translations, the quadratic oscillator invariant, internal su(n)
//!   generators, event-coordinate rational functions, and the two-set
//!   interaction function).
//! - [`verifier`]: exact pass/fail/deviates checking of the claimed operator
//!   identities, plus a linear search for scaling generators.
//! - [`oscillator`]: Gaussian ground states, Gram matrices of the flat
//!   scalar product, truncated matrix representations, and spin spectra.
//! - [`qsim`]: a finite sparse product-ket simulator with antisymmetrization,
//!   permutation interactions, branching scenarios, and polarization
//!   correlation experiments.

pub mod catalog;
pub mod exactnum;
pub mod oscillator;
pub mod qsim;
pub mod verifier;
pub mod weyl;
