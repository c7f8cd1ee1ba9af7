//! Exact linear-algebra checks for type AI.
//!
//! A diagram is realized as a nilpotent representation of the cyclic quiver,
//! one basis vector per box. Centralizers are kernels of commutator maps
//! computed over `BigRational`, so every rank decision is exact. The only
//! randomness is in [`is_distinguished_oracle`], which samples the opposite
//! centralizer with a seeded generator.

mod matrix;

pub use matrix::Matrix;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diagrams::{DimensionVector, FilledDiagram, Sign};
use crate::error::{Error, Result};
use crate::orbits::{duality, Case, GradingSpec, StratumLabelAI};

/// Default number of random samples in [`is_distinguished_oracle`].
pub const DEFAULT_TRIALS: usize = 20;

/// Sampled coefficients lie in `[-COEFF_BOUND, COEFF_BOUND]`.
pub const COEFF_BOUND: i64 = 9;

/// An element of `g_1` (degree `+1`, blocks `M_i -> M_{i-1}`) or of `g_{-1}`
/// (degree `-1`, blocks `M_i -> M_{i+1}`).
///
/// `blocks[i - 1]` is the component with source `M_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    grading: GradingSpec,
    degree: i8,
    blocks: Vec<Matrix>,
}

/// Blocks of a [`GradedMatrix`] as `"p/q"` strings, for `--dump-matrices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixDump {
    pub degree: i8,
    pub dims: Vec<usize>,
    pub blocks: Vec<Vec<Vec<String>>>,
}

fn target(i: usize, degree: i8, m: usize) -> usize {
    // labels are 1-based; i is the source label
    if degree > 0 {
        if i == 1 {
            m
        } else {
            i - 1
        }
    } else if i == m {
        1
    } else {
        i + 1
    }
}

fn require_ai(g: &GradingSpec) -> Result<()> {
    if g.case() != Case::AI {
        return Err(Error::Unsupported(format!(
            "matrix realizations exist only for type AI, not {}",
            g.case()
        )));
    }
    Ok(())
}

impl GradedMatrix {
    pub fn zero(grading: &GradingSpec, degree: i8) -> Self {
        assert!(degree == 1 || degree == -1, "degree must be 1 or -1");
        let m = grading.modulus();
        let d = grading.dims();
        let blocks = (1..=m)
            .map(|i| Matrix::zeros(d.get(target(i, degree, m)), d.get(i)))
            .collect();
        GradedMatrix {
            grading: grading.clone(),
            degree,
            blocks,
        }
    }

    /// Builds from explicit blocks, checking every shape.
    pub fn from_blocks(grading: &GradingSpec, degree: i8, blocks: Vec<Matrix>) -> Result<Self> {
        let shell = Self::zero(grading, degree);
        if blocks.len() != shell.blocks.len() {
            return Err(Error::Precondition(format!(
                "expected {} blocks, got {}",
                shell.blocks.len(),
                blocks.len()
            )));
        }
        for (b, want) in blocks.iter().zip(&shell.blocks) {
            if (b.rows(), b.cols()) != (want.rows(), want.cols()) {
                return Err(Error::Precondition(format!(
                    "block of shape {}x{} where {}x{} is needed",
                    b.rows(),
                    b.cols(),
                    want.rows(),
                    want.cols()
                )));
            }
        }
        Ok(GradedMatrix {
            grading: grading.clone(),
            degree,
            blocks,
        })
    }

    pub fn grading(&self) -> &GradingSpec {
        &self.grading
    }

    pub fn degree(&self) -> i8 {
        self.degree
    }

    /// The component with source `M_i`.
    pub fn block(&self, i: usize) -> &Matrix {
        &self.blocks[i - 1]
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    fn offsets(&self) -> Vec<usize> {
        offsets(self.grading.dims())
    }

    /// The endomorphism of `M = ⊕ M_i` as an `N x N` matrix.
    pub fn to_full(&self) -> Matrix {
        let m = self.grading.modulus();
        let off = self.offsets();
        let n = self.grading.total();
        let mut full = Matrix::zeros(n, n);
        for i in 1..=m {
            let t = target(i, self.degree, m);
            let b = &self.blocks[i - 1];
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    full[(off[t - 1] + r, off[i - 1] + c)] = b[(r, c)].clone();
                }
            }
        }
        full
    }

    /// Reads the blocks of the given degree off a full matrix, ignoring other entries.
    pub fn from_full(grading: &GradingSpec, degree: i8, full: &Matrix) -> Self {
        let mut x = Self::zero(grading, degree);
        let m = grading.modulus();
        let off = offsets(grading.dims());
        for i in 1..=m {
            let t = target(i, degree, m);
            let b = &mut x.blocks[i - 1];
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    b[(r, c)] = full[(off[t - 1] + r, off[i - 1] + c)].clone();
                }
            }
        }
        x
    }

    pub fn dump(&self) -> MatrixDump {
        MatrixDump {
            degree: self.degree,
            dims: self.grading.dims().entries().to_vec(),
            blocks: self.blocks.iter().map(Matrix::to_strings).collect(),
        }
    }
}

fn offsets(d: &DimensionVector) -> Vec<usize> {
    let mut acc = 0;
    d.entries()
        .iter()
        .map(|&di| {
            let o = acc;
            acc += di;
            o
        })
        .collect()
}

/// One basis vector per box; `x` sends a box's vector to the next box in its row.
///
/// A `+` diagram yields an element of degree `+1`, a `-` diagram one of degree `-1`.
pub fn build_representative(lambda: &FilledDiagram, g: &GradingSpec) -> Result<GradedMatrix> {
    require_ai(g)?;
    if lambda.modulus() != g.modulus() {
        return Err(Error::ModulusMismatch {
            diagram: lambda.modulus(),
            grading: g.modulus(),
        });
    }
    let found = lambda.dimension_vector();
    if &found != g.dims() {
        return Err(Error::DimensionMismatch {
            expected: g.dims().entries().to_vec(),
            found: found.entries().to_vec(),
        });
    }
    let m = g.modulus();
    let degree = match lambda.sign() {
        Sign::Plus => 1,
        Sign::Minus => -1,
    };
    let off = offsets(g.dims());
    let mut next = vec![0usize; m];
    let n = g.total();
    let mut full = Matrix::zeros(n, n);
    let one = BigRational::from_integer(BigInt::from(1));
    for row in lambda.rows() {
        let mut prev: Option<usize> = None;
        for label in row.labels(m, lambda.sign()) {
            let idx = off[label - 1] + next[label - 1];
            next[label - 1] += 1;
            if let Some(p) = prev {
                full[(idx, p)] = one.clone();
            }
            prev = Some(idx);
        }
    }
    Ok(GradedMatrix::from_full(g, degree, &full))
}

/// Unit matrices spanning the block space of a given shape pattern.
fn unit_basis(n: usize, spots: &[(usize, usize, usize, usize)]) -> Vec<Matrix> {
    let one = BigRational::from_integer(BigInt::from(1));
    let mut out = Vec::new();
    for &(row_off, rows, col_off, cols) in spots {
        for r in 0..rows {
            for c in 0..cols {
                let mut e = Matrix::zeros(n, n);
                e[(row_off + r, col_off + c)] = one.clone();
                out.push(e);
            }
        }
    }
    out
}

/// Kernel of `z ↦ zx - xz` on the span of `basis`, as coefficient vectors.
fn commutator_kernel(x: &Matrix, basis: &[Matrix]) -> Vec<Vec<BigRational>> {
    let n = x.rows();
    let mut map = Matrix::zeros(n * n, basis.len());
    for (j, e) in basis.iter().enumerate() {
        let c = &(e * x) - &(x * e);
        for (i, v) in c.entries().iter().enumerate() {
            map[(i, j)] = v.clone();
        }
    }
    map.nullspace()
}

fn block_diagonal_spots(g: &GradingSpec) -> Vec<(usize, usize, usize, usize)> {
    let off = offsets(g.dims());
    g.dims()
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &di)| (off[i], di, off[i], di))
        .collect()
}

fn degree_spots(g: &GradingSpec, degree: i8) -> Vec<(usize, usize, usize, usize)> {
    let off = offsets(g.dims());
    let m = g.modulus();
    (1..=m)
        .map(|i| {
            let t = target(i, degree, m);
            (off[t - 1], g.dims().get(t), off[i - 1], g.dims().get(i))
        })
        .collect()
}

/// `dim` of the centralizer of `x` in `⊕ gl(M_i)`.
pub fn centralizer_dim_gl(x: &GradedMatrix) -> usize {
    let full = x.to_full();
    let basis = unit_basis(full.rows(), &block_diagonal_spots(&x.grading));
    commutator_kernel(&full, &basis).len()
}

/// `dim K^x`: the block-diagonal centralizer minus the scalars (trace zero slice).
pub fn centralizer_dim_k(x: &GradedMatrix) -> usize {
    if x.grading.total() == 0 {
        return 0;
    }
    centralizer_dim_gl(x) - 1
}

/// A basis of the centralizer of `x` in the opposite degree `g_{-deg x}`.
pub fn centralizer_opposite(x: &GradedMatrix) -> Vec<GradedMatrix> {
    let full = x.to_full();
    let basis = unit_basis(full.rows(), &degree_spots(&x.grading, -x.degree));
    commutator_kernel(&full, &basis)
        .into_iter()
        .map(|coeffs| {
            let mut y = Matrix::zeros(full.rows(), full.cols());
            for (c, e) in coeffs.iter().zip(&basis) {
                if !c.is_zero() {
                    y = &y + &e.scale(c);
                }
            }
            GradedMatrix::from_full(&x.grading, -x.degree, &y)
        })
        .collect()
}

/// `dim g_{-deg x}^x`.
pub fn centralizer_dim_opposite(x: &GradedMatrix) -> usize {
    centralizer_opposite(x).len()
}

/// Monte Carlo test that the opposite centralizer of `O_λ` is nilpotent.
///
/// A `false` answer is certain; a `true` answer holds for every sampled
/// combination. Samples are drawn from a `ChaCha8` stream seeded with `seed`.
pub fn is_distinguished_oracle(
    lambda: &FilledDiagram,
    g: &GradingSpec,
    trials: usize,
    seed: u64,
) -> Result<bool> {
    let x = build_representative(lambda, g)?;
    let basis: Vec<Matrix> = centralizer_opposite(&x).iter().map(GradedMatrix::to_full).collect();
    if basis.is_empty() {
        return Ok(true);
    }
    let n = g.total();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut y = Matrix::zeros(n, n);
        for b in &basis {
            let c: i64 = rng.random_range(-COEFF_BOUND..=COEFF_BOUND);
            if c != 0 {
                y = &y + &b.scale(&BigRational::from_integer(BigInt::from(c)));
            }
        }
        if !y.pow(n).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `dim O_λ = dim K - dim K^x`.
pub fn orbit_dim(lambda: &FilledDiagram, g: &GradingSpec) -> Result<usize> {
    let x = build_representative(lambda, g)?;
    Ok(g.dim_k() - centralizer_dim_k(&x))
}

/// `Σ d_i² - c_μ - lk + l` with `k = a/d`, where `c_μ` is the centralizer
/// dimension of `x_μ` in the general linear group of the sub-grading
/// `d - (al/d)·1`.
pub fn stratum_dim_ai(s: &StratumLabelAI, g: &GradingSpec) -> Result<usize> {
    require_ai(g)?;
    let d = s.gcd();
    let sub_dims = g.dims().checked_sub_uniform(s.a * s.l / d).ok_or_else(|| {
        Error::InconsistentStratum(format!(
            "(a l / d) = {} exceeds some entry of {}",
            s.a * s.l / d,
            g.dims()
        ))
    })?;
    let sub = GradingSpec::new(Case::AI, g.modulus(), sub_dims.entries().to_vec())?;
    let x_mu = build_representative(&duality(&s.mu), &sub)?;
    let c_mu = centralizer_dim_gl(&x_mu);
    let sq: usize = g.dims().entries().iter().map(|d| d * d).sum();
    let k = s.a / d;
    (sq + s.l)
        .checked_sub(c_mu + s.l * k)
        .ok_or_else(|| Error::InconsistentStratum("negative stratum dimension".into()))
}

/// `h x h^{-1}` for a random invertible block-diagonal `h` with small integer entries.
pub fn random_conjugate(x: &GradedMatrix, rng: &mut impl Rng) -> GradedMatrix {
    let g = &x.grading;
    let n = g.total();
    let off = offsets(g.dims());
    let (h, h_inv) = loop {
        let mut h = Matrix::zeros(n, n);
        for (i, &di) in g.dims().entries().iter().enumerate() {
            for r in 0..di {
                for c in 0..di {
                    let v: i64 = rng.random_range(-3..=3);
                    h[(off[i] + r, off[i] + c)] = BigRational::from_integer(BigInt::from(v));
                }
            }
        }
        if let Some(inv) = h.inverse() {
            break (h, inv);
        }
    };
    let full = &(&h * &x.to_full()) * &h_inv;
    GradedMatrix::from_full(g, x.degree, &full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::canonicalize;

    fn g(dims: Vec<usize>) -> GradingSpec {
        GradingSpec::new(Case::AI, dims.len(), dims).unwrap()
    }

    fn plus(rows: &[(usize, usize)], m: usize) -> FilledDiagram {
        canonicalize(rows, m, Sign::Plus).unwrap()
    }

    #[test]
    fn representative_of_a_single_row() {
        let x = build_representative(&plus(&[(2, 1)], 2), &g(vec![1, 1])).unwrap();
        assert_eq!(x.degree(), 1);
        assert_eq!(x.block(1), &Matrix::from_i64(1, 1, &[1]));
        assert!(x.block(2).is_zero());
        let full = x.to_full();
        assert!(full.pow(2).is_zero());
        assert_eq!(full.rank(), 1);
    }

    #[test]
    fn minus_representative_has_degree_minus_one() {
        let lam = canonicalize(&[(2, 1)], 2, Sign::Minus).unwrap();
        let x = build_representative(&lam, &g(vec![1, 1])).unwrap();
        assert_eq!(x.degree(), -1);
        assert_eq!(x.block(1), &Matrix::from_i64(1, 1, &[1]));
    }

    #[test]
    fn representative_rejects_wrong_dims() {
        let err = build_representative(&plus(&[(2, 1)], 2), &g(vec![2, 0])).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
        let aii = GradingSpec::new(Case::AII, 3, vec![1, 0, 1]).unwrap();
        let lam = plus(&[(1, 1), (1, 3)], 3);
        assert!(matches!(build_representative(&lam, &aii), Err(Error::Unsupported(_))));
    }

    #[test]
    fn centralizers_small() {
        let gr = g(vec![1, 1]);
        let zero = build_representative(&plus(&[(1, 1), (1, 2)], 2), &gr).unwrap();
        assert_eq!(centralizer_dim_k(&zero), 1);
        assert_eq!(centralizer_dim_opposite(&zero), 2);
        let row = build_representative(&plus(&[(2, 1)], 2), &gr).unwrap();
        assert_eq!(centralizer_dim_k(&row), 0);
        assert_eq!(centralizer_dim_opposite(&row), 1);
        let empty = build_representative(&FilledDiagram::empty(2, Sign::Plus), &g(vec![0, 0])).unwrap();
        assert_eq!(centralizer_dim_k(&empty), 0);
        assert_eq!(centralizer_dim_opposite(&empty), 0);
    }

    #[test]
    fn oracle_small() {
        let gr = g(vec![1, 1]);
        for seed in [0, 1, 17] {
            assert!(is_distinguished_oracle(&plus(&[(2, 1)], 2), &gr, 20, seed).unwrap());
        }
        assert!(!is_distinguished_oracle(&plus(&[(1, 1), (1, 2)], 2), &gr, 20, 0).unwrap());
        let e = FilledDiagram::empty(3, Sign::Plus);
        assert!(is_distinguished_oracle(&e, &g(vec![0, 0, 0]), 20, 0).unwrap());
    }

    #[test]
    fn dimensions_small() {
        let gr = g(vec![1, 1]);
        assert_eq!(orbit_dim(&plus(&[(2, 1)], 2), &gr).unwrap(), 1);
        assert_eq!(orbit_dim(&FilledDiagram::empty(2, Sign::Plus), &g(vec![0, 0])).unwrap(), 0);
        let dense = StratumLabelAI {
            a: 1,
            l: 1,
            mu: FilledDiagram::empty(2, Sign::Minus),
            d_check: 2,
            braid_rank: 1,
        };
        assert_eq!(stratum_dim_ai(&dense, &gr).unwrap(), 2);
    }

    #[test]
    fn conjugation_keeps_centralizers() {
        let gr = g(vec![1, 2, 2]);
        let x = build_representative(&plus(&[(3, 1), (2, 3)], 3), &gr).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..3 {
            let y = random_conjugate(&x, &mut rng);
            assert_eq!(centralizer_dim_k(&y), centralizer_dim_k(&x));
            assert_eq!(centralizer_dim_opposite(&y), centralizer_dim_opposite(&x));
        }
    }

    #[test]
    fn dump_uses_fraction_strings() {
        let x = build_representative(&plus(&[(2, 1)], 2), &g(vec![1, 1])).unwrap();
        let d = x.dump();
        assert_eq!(d.blocks[0], vec![vec!["1/1".to_string()]]);
        assert_eq!(d.blocks[1], vec![vec!["0/1".to_string()]]);
    }
}
