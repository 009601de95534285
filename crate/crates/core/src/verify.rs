//! Per-component verification: kernel dimension, product span and the
//! tableau prediction must agree.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::derivation::is_constant;
use crate::generators::{coefficient_matrix, enumerate_products, expand};
use crate::kernel::kernel_basis;
use crate::linalg::rank;
use crate::monomial::{component_basis, MultiDegree};
use crate::polynomial::Polynomial;
use crate::tableau::kernel_dimension_oracle;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub n: MultiDegree,
    pub dim_kernel: usize,
    pub dim_span: usize,
    pub dim_tableau_oracle: usize,
    pub product_count: usize,
    /// Every expanded product is a `δ`-constant.
    pub products_constant: bool,
    /// `dim_kernel = dim_span = dim_tableau_oracle` and every product is a
    /// constant, so the products span the kernel.
    pub verdict: bool,
    pub timing: Duration,
}

pub fn verify_component(n: &MultiDegree) -> ComponentReport {
    let start = Instant::now();
    let kernel = kernel_basis(n);
    let products: Vec<Polynomial> = enumerate_products(n).iter().map(expand).collect();
    let products_constant = products.iter().all(is_constant);
    let dim_span = rank(&coefficient_matrix(&component_basis(n), &products));
    let dim_kernel = kernel.dimension();
    let dim_tableau_oracle = kernel_dimension_oracle(n) as usize;
    let verdict = products_constant && dim_kernel == dim_span && dim_span == dim_tableau_oracle;
    ComponentReport {
        n: n.clone(),
        dim_kernel,
        dim_span,
        dim_tableau_oracle,
        product_count: products.len(),
        products_constant,
        verdict,
        timing: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_components() {
        let r = verify_component(&MultiDegree(vec![1, 1]));
        assert_eq!((r.dim_kernel, r.dim_span, r.dim_tableau_oracle), (2, 2, 2));
        assert!(r.verdict);
        for k in 0..=8 {
            let r = verify_component(&MultiDegree(vec![k]));
            assert_eq!((r.dim_kernel, r.dim_span, r.dim_tableau_oracle), (1, 1, 1));
            assert!(r.verdict);
        }
    }

    #[test]
    fn dependent_products_still_span() {
        let r = verify_component(&MultiDegree(vec![1, 1, 1, 1]));
        assert!(r.dim_span < r.product_count);
        assert!(r.verdict);
    }
}
