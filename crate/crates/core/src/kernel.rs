//! The `δ`-kernel of a multidegree component.
//!
//! `δ` preserves the multidegree and maps bi-weight `(p, q)` to
//! `(p + 1, q − 1)`, so the kernel of a component is the direct sum of the
//! kernels of the block maps between adjacent bi-weights.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::derivation::delta;
use crate::linalg::{nullspace, ExactMatrix};
use crate::monomial::{component_basis, BiWeight, Monomial, MultiDegree};
use crate::polynomial::Polynomial;
use crate::rational::{primitive_scale, Rational};

/// Matrix of `δ` in a monomial basis. Columns are sources, rows targets.
#[derive(Debug, Clone)]
pub struct DeltaMatrix {
    pub sources: Vec<Monomial>,
    pub targets: Vec<Monomial>,
    pub matrix: ExactMatrix,
}

fn delta_between(sources: Vec<Monomial>, targets: Vec<Monomial>) -> DeltaMatrix {
    let index: HashMap<&Monomial, usize> = targets.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut matrix = ExactMatrix::zeros(targets.len(), sources.len());
    for (j, m) in sources.iter().enumerate() {
        let image = delta(&Polynomial::monomial(m.clone(), Rational::from_integer(1.into())));
        for (m2, c) in image.terms() {
            let i = index[m2];
            matrix.set(i, j, c.clone());
        }
    }
    DeltaMatrix { sources, targets, matrix }
}

/// `δ` on the whole component `n`, square, in canonical monomial order.
pub fn delta_matrix(n: &MultiDegree) -> DeltaMatrix {
    let basis = component_basis(n);
    delta_between(basis.clone(), basis)
}

/// The component basis split by bi-weight, `q = 0` first.
pub fn weight_blocks(n: &MultiDegree) -> Vec<(BiWeight, Vec<Monomial>)> {
    let total = n.total();
    let mut blocks: Vec<(BiWeight, Vec<Monomial>)> =
        (0..=total).map(|q| (BiWeight::new(total - q, q), Vec::new())).collect();
    for m in component_basis(n) {
        let q = m.biweight().q as usize;
        blocks[q].1.push(m);
    }
    blocks
}

/// `δ` restricted to each bi-weight block `(p, q) -> (p + 1, q − 1)`.
pub fn delta_blocks(n: &MultiDegree) -> Vec<(BiWeight, DeltaMatrix)> {
    let blocks = weight_blocks(n);
    (0..blocks.len())
        .map(|q| {
            let targets = if q == 0 { Vec::new() } else { blocks[q - 1].1.clone() };
            (blocks[q].0, delta_between(blocks[q].1.clone(), targets))
        })
        .collect()
}

/// Basis of `(K[X_d, Y_d]^(n))^δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    pub n: MultiDegree,
    /// Bi-homogeneous constants, block by block; each is scaled to coprime
    /// integer coefficients with positive leading coefficient.
    pub vectors: Vec<Polynomial>,
    /// Kernel dimension per bi-weight block (blocks of dimension 0 omitted).
    pub by_weight: Vec<WeightDimension>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDimension {
    pub weight: BiWeight,
    pub dimension: usize,
}

impl KernelBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }
}

fn vectors_to_polynomials(d: usize, columns: &[Monomial], vectors: Vec<Vec<Rational>>) -> Vec<Polynomial> {
    vectors
        .into_iter()
        .map(|v| {
            let scale = primitive_scale(&v);
            Polynomial::from_terms(d, columns.iter().cloned().zip(v.into_iter().map(|c| c * &scale)))
        })
        .collect()
}

pub fn kernel_basis(n: &MultiDegree) -> KernelBasis {
    let d = n.d();
    let mut vectors = Vec::new();
    let mut by_weight = Vec::new();
    for (weight, block) in delta_blocks(n) {
        let ns = nullspace(&block.matrix);
        if !ns.is_empty() {
            by_weight.push(WeightDimension { weight, dimension: ns.len() });
        }
        vectors.extend(vectors_to_polynomials(d, &block.sources, ns));
    }
    KernelBasis { n: n.clone(), vectors, by_weight }
}

/// Kernel computed from the unsplit component matrix; used to cross-check
/// the block decomposition.
pub fn kernel_basis_unsplit(n: &MultiDegree) -> Vec<Polynomial> {
    let m = delta_matrix(n);
    vectors_to_polynomials(n.d(), &m.sources, nullspace(&m.matrix))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::is_constant;
    use crate::linalg::rank;

    fn p(s: &str, d: usize) -> Polynomial {
        Polynomial::parse_with_dim(s, d).unwrap()
    }

    #[test]
    fn delta_matrix_examples() {
        let m = delta_matrix(&MultiDegree(vec![1]));
        assert_eq!(m.sources.len(), 2);
        assert_eq!(rank(&m.matrix), 1);
        // basis [x1, y1]; y1 -> x1
        assert_eq!(m.matrix.get(0, 1), Rational::from_integer(1.into()));
        assert_eq!(m.matrix.nnz(), 1);

        let m = delta_matrix(&MultiDegree(vec![1, 1]));
        assert_eq!((m.matrix.rows(), m.matrix.cols()), (4, 4));
        assert_eq!(rank(&m.matrix), 2);

        let m = delta_matrix(&MultiDegree(vec![0, 0, 0]));
        assert_eq!((m.matrix.rows(), m.matrix.cols(), m.matrix.nnz()), (1, 1, 0));
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&MultiDegree(vec![2]));
        assert_eq!(k.vectors, vec![p("x1^2", 1)]);

        let k = kernel_basis(&MultiDegree(vec![1, 1]));
        assert_eq!(k.vectors, vec![p("x1*x2", 2), p("x1*y2 - x2*y1", 2)]);
        assert_eq!(
            k.by_weight,
            vec![
                WeightDimension { weight: BiWeight::new(2, 0), dimension: 1 },
                WeightDimension { weight: BiWeight::new(1, 1), dimension: 1 },
            ]
        );

        // x1x2x3 and two independent combinations of x_k u_ij
        let k = kernel_basis(&MultiDegree(vec![1, 1, 1]));
        assert_eq!(k.dimension(), 3);

        let k = kernel_basis(&MultiDegree(vec![0, 2]));
        assert_eq!(k.vectors, vec![p("x2^2", 2)]);
    }

    #[test]
    fn block_and_unsplit_kernels_agree() {
        for d in 1..=3 {
            for n in MultiDegree::up_to(d, 5, None) {
                let k = kernel_basis(&n);
                let whole = kernel_basis_unsplit(&n);
                assert_eq!(k.dimension(), whole.len(), "n = {n}");
                // same span: stacking both keeps the rank at the dimension
                let basis = component_basis(&n);
                let mut stacked = ExactMatrix::zeros(basis.len(), 2 * whole.len());
                for (j, f) in k.vectors.iter().chain(&whole).enumerate() {
                    for (i, m) in basis.iter().enumerate() {
                        stacked.set(i, j, f.coefficient(m));
                    }
                }
                assert_eq!(rank(&stacked), whole.len(), "n = {n}");
            }
        }
    }

    #[test]
    fn rank_nullity_and_constancy() {
        for n in MultiDegree::up_to(3, 5, None) {
            let m = delta_matrix(&n);
            let k = kernel_basis(&n);
            assert_eq!(rank(&m.matrix) + k.dimension(), n.component_dimension() as usize);
            assert!(k.vectors.iter().all(is_constant));
            for (i, f) in k.vectors.iter().enumerate() {
                assert!(f.biweight().is_some(), "vector {i} of {n} not bi-homogeneous");
            }
        }
    }

    #[test]
    fn block_structure_only_links_adjacent_weights() {
        let m = delta_matrix(&MultiDegree(vec![2, 1, 1]));
        for (i, j, _) in m.matrix.entries() {
            let src = m.sources[j].biweight();
            let tgt = m.targets[i].biweight();
            assert_eq!((tgt.p, tgt.q + 1), (src.p + 1, src.q));
        }
    }
}
