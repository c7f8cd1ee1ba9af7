//! Orbit parametrization per grading type.
//!
//! Nilpotent `K`-orbits are labeled by filled diagrams subject to the pairing
//! conditions of each case. This module also holds component groups, the
//! distinguished subsets, the `±` duality, the peeling maps that split an
//! orbit into a braid-group label and a distinguished remainder, and the
//! stratum labels built from them.

mod grading;
mod strata;

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

pub use grading::{Case, GradingSpec};
pub use strata::{
    braid_rank_ai, enumerate_strata_ai, enumerate_strata_ii, full_support_stratum_ii,
    StratumLabelAI, StratumLabelII,
};

use crate::diagrams::{reduce_label, FilledDiagram, FilledRow, MultiPartition, Partition, Sign};
use crate::error::{Error, Result};

/// A nilpotent orbit: a diagram admissible for a grading with matching dimension vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitLabel {
    diagram: FilledDiagram,
    grading: GradingSpec,
}

impl OrbitLabel {
    pub fn new(diagram: FilledDiagram, grading: &GradingSpec) -> Result<Self> {
        if !admissible(&diagram, grading)? {
            return Err(Error::Precondition(format!(
                "{diagram} is not admissible for {grading}"
            )));
        }
        let found = diagram.dimension_vector();
        if &found != grading.dims() {
            return Err(Error::DimensionMismatch {
                expected: grading.dims().entries().to_vec(),
                found: found.entries().to_vec(),
            });
        }
        Ok(OrbitLabel {
            diagram,
            grading: grading.clone(),
        })
    }

    pub fn diagram(&self) -> &FilledDiagram {
        &self.diagram
    }

    pub fn grading(&self) -> &GradingSpec {
        &self.grading
    }
}

fn check_modulus(lambda: &FilledDiagram, g: &GradingSpec) -> Result<()> {
    if lambda.modulus() != g.modulus() {
        return Err(Error::ModulusMismatch {
            diagram: lambda.modulus(),
            grading: g.modulus(),
        });
    }
    Ok(())
}

/// Whether `λ` labels an orbit for the given grading.
pub fn admissible(lambda: &FilledDiagram, g: &GradingSpec) -> Result<bool> {
    check_modulus(lambda, g)?;
    Ok(admissible_for_case(g.case(), lambda))
}

/// The pairing conditions of a case, independent of any dimension vector.
///
/// Rows of length `p` starting at `a` and `b` (in `+` convention) must come
/// with equal multiplicity when `a + b ≡ c(p)`, and a self-paired start must
/// have even multiplicity, where `c(p) = p` for AII and DII and `c(p) = p - 1`
/// for CII. A `-` diagram is checked through its dual `+` diagram, which
/// carries the same box labels.
pub fn admissible_for_case(case: Case, lambda: &FilledDiagram) -> bool {
    if case == Case::AI {
        return true;
    }
    let plus;
    let lambda = match lambda.sign() {
        Sign::Plus => lambda,
        Sign::Minus => {
            plus = duality(lambda);
            &plus
        }
    };
    let k = lambda.modulus();
    lambda.multiplicity_table().iter().all(|(&len, p)| {
        let c = match case {
            Case::CII => len as i64 - 1,
            _ => len as i64,
        };
        (1..=k).all(|a| {
            let b = reduce_label(c - a as i64, k);
            let paired = p[a - 1] == p[b - 1];
            let even = b != a || p[a - 1] % 2 == 0;
            paired && even
        })
    })
}

/// Order of the component group `A_K(x)`: `d_λ` in AI (`0` for `∅`), `1` in type II.
pub fn component_group_order(lambda: &FilledDiagram, g: &GradingSpec) -> usize {
    match g.case() {
        Case::AI => lambda.gcd_of_parts(),
        _ => 1,
    }
}

/// Membership in the distinguished subset `⁰ₐΣ`.
///
/// Requires `a | d_λ` and, for every row length and every residue class
/// `i + dℤ` (`d = gcd(a, m)`), some label in the class carries no row of
/// that length.
pub fn is_distinguished_ai(lambda: &FilledDiagram, a: usize, m: usize) -> bool {
    if a == 0 || lambda.modulus() != m {
        return false;
    }
    if !lambda.gcd_of_parts().is_multiple_of(a) {
        return false;
    }
    let d = a.gcd(&m);
    lambda.multiplicity_table().values().all(|p| {
        (1..=d).all(|i| (0..m / d).any(|j| p[i + j * d - 1] == 0))
    })
}

/// Membership in the type-II distinguished subset `⁰Σ`: every row length has
/// some label of multiplicity at most one.
pub fn is_distinguished_ii(lambda: &FilledDiagram, g: &GradingSpec) -> Result<bool> {
    check_modulus(lambda, g)?;
    Ok(lambda
        .multiplicity_table()
        .values()
        .all(|p| p.iter().copied().min().unwrap_or(0) <= 1))
}

/// Flips the fill convention, keeping each row's set of box labels.
///
/// A row's new start is its old last box. This is an involution that
/// preserves the dimension vector and the underlying partition.
pub fn duality(lambda: &FilledDiagram) -> FilledDiagram {
    let k = lambda.modulus();
    let sign = lambda.sign();
    let rows = lambda
        .rows()
        .iter()
        .map(|r| FilledRow {
            len: r.len,
            start: r.end(k, sign),
        })
        .collect();
    lambda.with_sign_unchecked(sign.flip(), rows)
}

/// Result of splitting an AI orbit with `a | d_λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelAI {
    /// `τ = (ν^1, ..., ν^d)`, `d = gcd(a, m)`.
    pub tau: MultiPartition,
    /// The distinguished remainder `μ_λ`.
    pub residual: FilledDiagram,
}

impl PeelAI {
    /// `l_λ = |τ|`.
    pub fn braid_rank(&self) -> usize {
        self.tau.size()
    }
}

/// Splits `λ` into `(τ_λ, μ_λ)`.
///
/// With the parts of `λ` written `aμ_1 > ... > aμ_t`, for each class `i` mod
/// `d` the minimum multiplicity `l_k^i` over the class is removed from every
/// label in the class and recorded as `l_k^i` parts `μ_k` of `ν^i`.
pub fn peel_ai(lambda: &FilledDiagram, a: usize, m: usize) -> Result<PeelAI> {
    if lambda.modulus() != m {
        return Err(Error::ModulusMismatch {
            diagram: lambda.modulus(),
            grading: m,
        });
    }
    if a == 0 || !lambda.gcd_of_parts().is_multiple_of(a) {
        return Err(Error::Precondition(format!(
            "a = {a} does not divide d_λ = {} for {lambda}",
            lambda.gcd_of_parts()
        )));
    }
    let d = a.gcd(&m);
    let mut table = lambda.multiplicity_table();
    let mut nus: Vec<Vec<usize>> = vec![Vec::new(); d];
    for (&len, p) in table.iter_mut().rev() {
        for i in 1..=d {
            let class: Vec<usize> = (0..m / d).map(|j| i + j * d - 1).collect();
            let low = class.iter().map(|&idx| p[idx]).min().unwrap_or(0);
            for idx in class {
                p[idx] -= low;
            }
            nus[i - 1].extend(std::iter::repeat_n(len / a, low));
        }
    }
    let tau = MultiPartition::new(
        nus.into_iter()
            .map(Partition::new)
            .collect::<Result<Vec<_>>>()?,
    );
    let residual = FilledDiagram::from_multiplicities(m, lambda.sign(), &table)?;
    Ok(PeelAI { tau, residual })
}

/// Inverse of [`peel_ai`]: adds `l_k^i` rows of length `aμ_k` at every label of class `i`.
pub fn unpeel_ai(
    tau: &MultiPartition,
    residual: &FilledDiagram,
    a: usize,
) -> Result<FilledDiagram> {
    let m = residual.modulus();
    let d = a.gcd(&m);
    if tau.slots() != d {
        return Err(Error::Precondition(format!(
            "τ has {} components, expected gcd(a, m) = {d}",
            tau.slots()
        )));
    }
    let mut rows = Vec::new();
    for (slot, nu) in tau.components().iter().enumerate() {
        let i = slot + 1;
        for &part in nu.parts() {
            for j in 0..m / d {
                rows.push((a * part, i + j * d));
            }
        }
    }
    let extra = crate::diagrams::canonicalize(&rows, m, residual.sign())?;
    residual.union(&extra)
}

/// Result of splitting a type-II orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelII {
    pub nu: Partition,
    pub residual: FilledDiagram,
    /// `k = |ν|`.
    pub k: usize,
}

/// Splits an admissible type-II diagram: `l_i = min_a ⌊p_i^a/2⌋` pairs of rows of
/// length `λ_i` are removed from every label.
pub fn peel_ii(lambda: &FilledDiagram, g: &GradingSpec) -> Result<PeelII> {
    check_modulus(lambda, g)?;
    if !g.case().is_type_ii() {
        return Err(Error::Precondition("peel_ii needs a type-II grading".into()));
    }
    if !admissible_for_case(g.case(), lambda) {
        return Err(Error::Precondition(format!(
            "{lambda} is not admissible for {}",
            g.case()
        )));
    }
    let mut table = lambda.multiplicity_table();
    let mut parts = Vec::new();
    for (&len, p) in table.iter_mut().rev() {
        let low = p.iter().map(|c| c / 2).min().unwrap_or(0);
        for c in p.iter_mut() {
            *c -= 2 * low;
        }
        parts.extend(std::iter::repeat_n(len, low));
    }
    let nu = Partition::new(parts)?;
    let residual = FilledDiagram::from_multiplicities(g.modulus(), lambda.sign(), &table)?;
    Ok(PeelII {
        k: nu.size(),
        nu,
        residual,
    })
}

/// Inverse of [`peel_ii`].
pub fn unpeel_ii(nu: &Partition, residual: &FilledDiagram) -> Result<FilledDiagram> {
    let k = residual.modulus();
    let rows: Vec<(usize, usize)> = nu
        .parts()
        .iter()
        .flat_map(|&len| (1..=k).flat_map(move |a| [(len, a), (len, a)]))
        .collect();
    let extra = crate::diagrams::canonicalize(&rows, k, residual.sign())?;
    residual.union(&extra)
}

/// `ď_{a,μ} = gcd(ma/d, d_μ)`, or `ma/d` when `μ = ∅`.
pub fn d_check_stratum(a: usize, mu: &FilledDiagram, m: usize) -> usize {
    let d = a.gcd(&m);
    let base = m * a / d;
    if mu.is_empty() {
        base
    } else {
        base.gcd(&mu.gcd_of_parts())
    }
}

/// Order of the component group on the dual stratum of `O_λ`.
///
/// With `l_i = min_j p_i^j`, this is `gcd({mλ_i : l_i > 0}, d_{μ_λ})`, or
/// `m·d_λ` when the remainder `μ_λ` is empty.
pub fn d_check_dual(lambda: &FilledDiagram, m: usize) -> Result<usize> {
    if lambda.modulus() != m {
        return Err(Error::ModulusMismatch {
            diagram: lambda.modulus(),
            grading: m,
        });
    }
    let mut table: BTreeMap<usize, Vec<usize>> = lambda.multiplicity_table();
    let mut lengths = Vec::new();
    for (&len, p) in table.iter_mut() {
        let low = p.iter().copied().min().unwrap_or(0);
        if low > 0 {
            lengths.push(len);
            for c in p.iter_mut() {
                *c -= low;
            }
        }
    }
    if lengths.is_empty() {
        return Err(Error::NotApplicable(format!(
            "{lambda} has no row length present at every label"
        )));
    }
    let residual = FilledDiagram::from_multiplicities(m, lambda.sign(), &table)?;
    if residual.is_empty() {
        return Ok(m * lambda.gcd_of_parts());
    }
    let g = lengths
        .iter()
        .fold(duality(&residual).gcd_of_parts(), |g, &len| g.gcd(&(m * len)));
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::canonicalize;

    fn plus(rows: &[(usize, usize)], k: usize) -> FilledDiagram {
        canonicalize(rows, k, Sign::Plus).unwrap()
    }

    fn minus(rows: &[(usize, usize)], k: usize) -> FilledDiagram {
        canonicalize(rows, k, Sign::Minus).unwrap()
    }

    fn aii(dims: Vec<usize>) -> GradingSpec {
        GradingSpec::new(Case::AII, 3, dims).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let g = aii(vec![1, 0, 1]);
        assert!(admissible(&plus(&[(1, 1), (1, 3)], 3), &g).unwrap());
        // 2_1 covers {1, 3} and is self-paired, so it needs even multiplicity.
        assert!(!admissible(&plus(&[(2, 1)], 3), &g).unwrap());
        let ai = GradingSpec::new(Case::AI, 3, vec![1, 0, 1]).unwrap();
        assert!(admissible(&plus(&[(2, 1)], 3), &ai).unwrap());
        assert!(matches!(
            admissible(&plus(&[(1, 1)], 2), &g),
            Err(Error::ModulusMismatch { .. })
        ));
    }

    #[test]
    fn minus_diagrams_checked_through_duality() {
        // (2_1)^2 in the `-` convention covers labels {1,2}; its dimension
        // vector (2,2,0) breaks the AII symmetry, so it cannot be admissible.
        assert!(!admissible_for_case(Case::AII, &minus(&[(2, 1), (2, 1)], 3)));
        // (2_3)^2 in `-` covers {3,1} twice, d = (2,0,2).
        assert!(admissible_for_case(Case::AII, &minus(&[(2, 3), (2, 3)], 3)));
        assert!(admissible_for_case(Case::AII, &minus(&[(2, 1), (2, 2)], 3)));
    }

    #[test]
    fn component_groups() {
        let ai = GradingSpec::new(Case::AI, 2, vec![3, 3]).unwrap();
        assert_eq!(component_group_order(&plus(&[(4, 1), (2, 1)], 2), &ai), 2);
        assert_eq!(component_group_order(&plus(&[(3, 1)], 2), &ai), 3);
        assert_eq!(component_group_order(&FilledDiagram::empty(2, Sign::Plus), &ai), 0);
        let g = aii(vec![1, 0, 1]);
        assert_eq!(component_group_order(&plus(&[(1, 1), (1, 3)], 3), &g), 1);
    }

    #[test]
    fn distinguished_examples() {
        assert!(is_distinguished_ai(&plus(&[(2, 1)], 2), 1, 2));
        assert!(!is_distinguished_ai(&plus(&[(1, 1), (1, 2)], 2), 1, 2));
        assert!(is_distinguished_ai(&FilledDiagram::empty(2, Sign::Plus), 1, 2));
        assert!(is_distinguished_ai(&FilledDiagram::empty(2, Sign::Plus), 2, 2));
        // a ∤ d_λ
        assert!(!is_distinguished_ai(&plus(&[(3, 1)], 2), 2, 2));
        // d = m leaves only the empty diagram
        assert!(!is_distinguished_ai(&plus(&[(2, 1)], 2), 2, 2));

        let g = aii(vec![1, 0, 1]);
        assert!(is_distinguished_ii(&plus(&[(1, 1), (1, 3)], 3), &g).unwrap());
        let g = aii(vec![2, 2, 2]);
        let full = plus(&[(1, 1), (1, 1), (1, 2), (1, 2), (1, 3), (1, 3)], 3);
        assert!(!is_distinguished_ii(&full, &g).unwrap());
        assert!(is_distinguished_ii(&FilledDiagram::empty(3, Sign::Plus), &g).unwrap());
    }

    #[test]
    fn duality_examples() {
        let d = minus(&[(2, 1)], 2);
        assert_eq!(duality(&d), plus(&[(2, 2)], 2));
        assert_eq!(duality(&duality(&d)), d);
        let d = plus(&[(3, 1), (1, 2)], 3);
        assert_eq!(duality(&d).dimension_vector(), d.dimension_vector());
    }

    #[test]
    fn peel_ai_examples() {
        let p = peel_ai(&minus(&[(1, 1), (1, 2)], 2), 1, 2).unwrap();
        assert_eq!(p.tau.to_string(), "[(1)]");
        assert!(p.residual.is_empty());

        let p = peel_ai(&minus(&[(2, 1)], 2), 1, 2).unwrap();
        assert_eq!(p.tau, MultiPartition::empty(1));
        assert_eq!(p.residual, minus(&[(2, 1)], 2));

        let p = peel_ai(&FilledDiagram::empty(3, Sign::Minus), 2, 3).unwrap();
        assert_eq!(p.tau, MultiPartition::empty(1));
        assert!(p.residual.is_empty());

        assert!(matches!(
            peel_ai(&minus(&[(3, 1)], 2), 2, 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn peel_ai_with_larger_gcd() {
        // m = 4, a = 2, d = 2: classes {1,3} and {2,4}.
        let lambda = minus(&[(4, 1), (4, 3), (4, 2), (2, 2), (2, 4), (2, 4)], 4);
        let p = peel_ai(&lambda, 2, 4).unwrap();
        assert_eq!(p.tau.to_string(), "[(2), (1)]");
        assert_eq!(p.residual, minus(&[(4, 2), (2, 4)], 4));
        assert_eq!(unpeel_ai(&p.tau, &p.residual, 2).unwrap(), lambda);
    }

    #[test]
    fn peel_ii_examples() {
        let g = aii(vec![2, 2, 2]);
        let full = minus(&[(1, 1), (1, 1), (1, 2), (1, 2), (1, 3), (1, 3)], 3);
        let p = peel_ii(&full, &g).unwrap();
        assert_eq!(p.nu.parts(), &[1]);
        assert!(p.residual.is_empty());
        assert_eq!(p.k, 1);

        let g = aii(vec![1, 0, 1]);
        let lam = minus(&[(1, 1), (1, 3)], 3);
        let p = peel_ii(&lam, &g).unwrap();
        assert!(p.nu.is_empty());
        assert_eq!(p.residual, lam);
        assert_eq!(p.k, 0);

        let g = aii(vec![0, 0, 0]);
        let p = peel_ii(&FilledDiagram::empty(3, Sign::Minus), &g).unwrap();
        assert_eq!((p.k, p.residual.is_empty()), (0, true));
    }

    #[test]
    fn d_check_examples() {
        assert_eq!(d_check_stratum(1, &FilledDiagram::empty(2, Sign::Minus), 2), 2);
        assert_eq!(d_check_stratum(1, &minus(&[(2, 1)], 2), 2), 2);
        assert_eq!(d_check_stratum(3, &FilledDiagram::empty(3, Sign::Minus), 3), 3);

        assert_eq!(d_check_dual(&plus(&[(1, 1), (1, 2)], 2), 2).unwrap(), 2);
        assert_eq!(
            d_check_dual(&plus(&[(2, 1), (2, 2), (1, 1)], 2), 2).unwrap(),
            1
        );
        assert_eq!(
            d_check_dual(&plus(&[(1, 1), (1, 2), (1, 3)], 3), 3).unwrap(),
            3
        );
        assert!(matches!(
            d_check_dual(&plus(&[(2, 1)], 2), 2),
            Err(Error::NotApplicable(_))
        ));
    }
}
