//! Audit of the highest-weight-vector picture on one content `n`:
//! tensor-space `Δ`-kernels against standard-tableau counts, projection
//! equivariance, and ladder proportionality in the polynomial component.

use serde::{Deserialize, Serialize};

use crate::derivation::{build_chain, delta, ladder_coefficient};
use crate::kernel::kernel_basis;
use crate::linalg::rank;
use crate::monomial::MultiDegree;
use crate::rational::int;
use crate::tableau::{standard_tableau_count, two_row_partitions, Partition};
use crate::tensor::{
    coordinate_matrix, delta_tensor, hwv_space, project_to_polynomial, standard_hwv_basis, weight_words,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeCheck {
    pub shape: Partition,
    /// Dimension of the `Δ`-kernel on weight `λ` words of `V^(n)`.
    pub hwv_dimension: usize,
    pub standard_tableaux: u64,
    /// Rank of the standard highest weight vectors.
    pub standard_rank: usize,
    /// Every standard vector is a `Δ`-constant.
    pub standard_constant: bool,
    /// The standard vectors span the whole `Δ`-kernel of weight `λ`.
    pub spans_kernel: bool,
    /// `project(Δ w) = δ(project w)` for every standard vector.
    pub equivariant: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContentCheck {
    pub n: MultiDegree,
    pub shapes: Vec<ShapeCheck>,
    /// Number of polynomial kernel basis vectors whose ladder was checked.
    pub ladders_checked: usize,
    /// Every ladder has length `λ₁ − λ₂ + 1` and `δ` steps back with the
    /// coefficients `i(λ₁ − λ₂ − i + 1)`.
    pub ladders_ok: bool,
    pub pass: bool,
}

pub fn check_shape(n: &MultiDegree, shape: Partition) -> ShapeCheck {
    let kernel = hwv_space(n, shape);
    let standard = standard_hwv_basis(n, &[shape.l1, shape.l2]).expect("shape has two rows and matches |n|");
    let words = weight_words(n, shape.l2);
    let standard_rank = rank(&coordinate_matrix(&words, &standard));
    let standard_constant = standard.iter().all(|w| delta_tensor(w).is_zero());
    let mut joint = standard.clone();
    joint.extend(kernel.iter().cloned());
    let spans_kernel = rank(&coordinate_matrix(&words, &joint)) == standard_rank;
    let equivariant = standard
        .iter()
        .chain(&kernel)
        .all(|w| project_to_polynomial(&delta_tensor(w)) == delta(&project_to_polynomial(w)));
    let standard_tableaux = standard_tableau_count(shape);
    let pass = standard_constant
        && spans_kernel
        && equivariant
        && kernel.len() as u64 == standard_tableaux
        && standard_rank as u64 == standard_tableaux;
    ShapeCheck {
        shape,
        hwv_dimension: kernel.len(),
        standard_tableaux,
        standard_rank,
        standard_constant,
        spans_kernel,
        equivariant,
        pass,
    }
}

/// Ladder check on every vector of the polynomial kernel basis of `n`.
pub fn check_ladders(n: &MultiDegree) -> (usize, bool) {
    let basis = kernel_basis(n);
    let ok = basis.vectors.iter().all(|w0| {
        let Ok(chain) = build_chain(w0) else { return false };
        let span = chain.weight().p - chain.weight().q;
        chain.len() as u32 == span + 1
            && chain.raising_coefficients().is_some_and(|cs| {
                cs.iter()
                    .enumerate()
                    .all(|(k, c)| *c == int(ladder_coefficient(span, k as u32 + 1) as i64))
            })
    });
    (basis.dimension(), ok)
}

pub fn check_content(n: &MultiDegree) -> ContentCheck {
    let shapes: Vec<ShapeCheck> = two_row_partitions(n.total()).into_iter().map(|l| check_shape(n, l)).collect();
    let (ladders_checked, ladders_ok) = check_ladders(n);
    let pass = ladders_ok && shapes.iter().all(|s| s.pass);
    ContentCheck { n: n.clone(), shapes, ladders_checked, ladders_ok, pass }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_contents_pass() {
        for n in MultiDegree::up_to(2, 4, None) {
            let c = check_content(&n);
            assert!(c.pass, "{n}: {c:?}");
        }
    }

    #[test]
    fn balanced_content_includes_square_shape() {
        let c = check_content(&MultiDegree(vec![2, 2, 2]));
        let square = c.shapes.iter().find(|s| s.shape == Partition { l1: 3, l2: 3 }).unwrap();
        assert_eq!(square.hwv_dimension, 5);
        assert!(c.pass);
    }
}
