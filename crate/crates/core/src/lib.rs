//! Constants of the Weitzenböck derivation `δ(x_i) = 0, δ(y_i) = x_i` on
//! `K[X_d, Y_d] = Q[x_1..x_d, y_1..y_d]`, computed one multidegree component
//! at a time with exact arithmetic.
//!
//! The kernel of `δ` on each component is compared with the span of the
//! products `x_1^{p_1}...x_d^{p_d} Π u_ij^{q_ij}`, `u_ij = x_i y_j − x_j y_i`,
//! and with a Kostka-number prediction. The [`tensor`] module carries the
//! highest-weight-vector side of the picture on `V^{⊗N}`.
//!
//! ```
//! use weitzenbock::{delta, make_u, verify_component, MultiDegree, Polynomial};
//!
//! let u12 = make_u(2, 1, 2).unwrap();
//! assert_eq!(u12.to_string(), "x1*y2 - x2*y1");
//! assert!(delta(&u12).is_zero());
//!
//! let report = verify_component(&MultiDegree::new(vec![2, 1]));
//! assert!(report.verdict);
//! # let _ = Polynomial::zero(1);
//! ```

pub mod crosscheck;
pub mod derivation;
pub mod error;
pub mod generators;
pub mod kernel;
pub mod linalg;
pub mod monomial;
pub mod polynomial;
pub mod rational;
pub mod tableau;
pub mod tensor;
mod text;
pub mod verify;

pub use derivation::{
    build_chain, delta, delta_star, exp_action, gl2_action, is_constant, GL2Element, WeightVectorChain,
};
pub use error::{Error, Result};
pub use generators::{
    decompose, enumerate_products, expand, make_u, pluecker, span_dimension, Certificate, Decomposer, ProductTerm,
};
pub use kernel::{delta_matrix, kernel_basis, KernelBasis};
pub use linalg::{nullspace, ExactMatrix};
pub use monomial::{component_basis, BiWeight, Monomial, MultiDegree};
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use tableau::{dimension_identity_check, kostka, standard_tableaux, two_row_partitions, Partition, StandardTableau};
pub use verify::{verify_component, ComponentReport};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/derivation.md")]
    mod derivation {}
    #[doc = include_str!("../../../book/src/kernels.md")]
    mod kernels {}
    #[doc = include_str!("../../../book/src/generators.md")]
    mod generators {}
    #[doc = include_str!("../../../book/src/tensors.md")]
    mod tensors {}
    #[doc = include_str!("../../../book/src/tableaux.md")]
    mod tableaux {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
