use num_integer::Integer;
use serde::Serialize;

use super::{admissible_for_case, d_check_stratum, duality, is_distinguished_ai, Case, GradingSpec};
use crate::diagrams::{canonicalize, enumerate_diagrams, FilledDiagram, Sign};
use crate::error::{Error, Result};

/// Label of a dual stratum `Ǒ_{a,μ}` in type AI.
///
/// `mu` is stored in the `-` convention (an orbit in degree `-1`); the
/// support orbit uses its dual, see [`StratumLabelAI::support_diagram`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StratumLabelAI {
    pub a: usize,
    pub l: usize,
    pub mu: FilledDiagram,
    pub d_check: usize,
    pub braid_rank: usize,
}

impl StratumLabelAI {
    pub fn modulus(&self) -> usize {
        self.mu.modulus()
    }

    /// `d = gcd(a, m)`.
    pub fn gcd(&self) -> usize {
        self.a.gcd(&self.modulus())
    }

    /// `(a/d)^l_1 ... (a/d)^l_m ⊔ μ̌` as a `+` diagram.
    pub fn support_diagram(&self) -> Result<FilledDiagram> {
        let m = self.modulus();
        let len = self.a / self.gcd();
        let rows: Vec<(usize, usize)> = (1..=m)
            .flat_map(|start| std::iter::repeat_n((len, start), self.l))
            .collect();
        let padding = canonicalize(&rows, m, Sign::Plus)?;
        padding.union(&duality(&self.mu))
    }
}

/// Label of a type-II stratum `Ǒ_{k,μ}`; the braid group is `B_{G(m,1,k)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StratumLabelII {
    pub k: usize,
    pub mu: FilledDiagram,
}

impl StratumLabelII {
    pub fn braid_rank(&self) -> usize {
        self.k
    }

    /// `1^{2k}_1 ... 1^{2k}_m ⊔ μ`.
    pub fn support_diagram(&self) -> Result<FilledDiagram> {
        let m = self.mu.modulus();
        let rows: Vec<(usize, usize)> = (1..=m)
            .flat_map(|start| std::iter::repeat_n((1, start), 2 * self.k))
            .collect();
        canonicalize(&rows, m, self.mu.sign())?.union(&self.mu)
    }
}

fn require_ai(g: &GradingSpec) -> Result<()> {
    if g.case() != Case::AI {
        return Err(Error::Precondition(format!("{} is not a type AI grading", g.case())));
    }
    Ok(())
}

fn require_ii(g: &GradingSpec) -> Result<()> {
    if !g.case().is_type_ii() {
        return Err(Error::Precondition("expected a type II grading".into()));
    }
    Ok(())
}

/// All stratum labels carrying central characters of order `a`.
///
/// Ordered by `l`, then by `μ` in enumeration order.
pub fn enumerate_strata_ai(g: &GradingSpec, a: usize) -> Result<Vec<StratumLabelAI>> {
    require_ai(g)?;
    if a == 0 {
        return Err(Error::Precondition("a must be positive".into()));
    }
    let m = g.modulus();
    let n = g.total();
    if !n.is_multiple_of(a) {
        return Ok(Vec::new());
    }
    let d = a.gcd(&m);
    if d == m {
        if g.dims().entries().iter().any(|&di| di * m != n) {
            return Ok(Vec::new());
        }
        let mu = FilledDiagram::empty(m, Sign::Minus);
        return Ok(vec![StratumLabelAI {
            a,
            l: n / a,
            d_check: d_check_stratum(a, &mu, m),
            braid_rank: n / a,
            mu,
        }]);
    }
    let mut out = Vec::new();
    for l in 0..=n * d / (m * a) {
        let Some(rest) = g.dims().checked_sub_uniform(a * l / d) else {
            continue;
        };
        for mu in enumerate_diagrams(m, Sign::Minus, &rest) {
            if is_distinguished_ai(&mu, a, m) {
                out.push(StratumLabelAI {
                    a,
                    l,
                    d_check: d_check_stratum(a, &mu, m),
                    braid_rank: l,
                    mu,
                });
            }
        }
    }
    Ok(out)
}

/// `l = d(N - |μ|)/(ma)`.
pub fn braid_rank_ai(a: usize, mu: &FilledDiagram, g: &GradingSpec) -> Result<usize> {
    require_ai(g)?;
    let m = g.modulus();
    let d = a.gcd(&m);
    let n = g.total();
    let size = mu.size();
    if a == 0 || size > n || !(d * (n - size)).is_multiple_of(m * a) {
        return Err(Error::InconsistentStratum(format!(
            "d(N - |μ|)/(ma) is not a nonnegative integer for a = {a}, |μ| = {size}, N = {n}, m = {m}"
        )));
    }
    Ok(d * (n - size) / (m * a))
}

/// All type-II stratum labels `(k, μ)` with `μ` admissible and distinguished of
/// dimension vector `d - 2k·1`.
pub fn enumerate_strata_ii(g: &GradingSpec) -> Result<Vec<StratumLabelII>> {
    require_ii(g)?;
    let m = g.modulus();
    let mut out = Vec::new();
    for k in 0..=g.rank() {
        let rest = g
            .dims()
            .checked_sub_uniform(2 * k)
            .expect("2k is at most min d_i");
        for mu in enumerate_diagrams(m, Sign::Minus, &rest) {
            if !admissible_for_case(g.case(), &mu) {
                continue;
            }
            let distinguished = mu
                .multiplicity_table()
                .values()
                .all(|p| p.iter().copied().min().unwrap_or(0) <= 1);
            if distinguished {
                let label = StratumLabelII { k, mu };
                debug_assert!(admissible_for_case(g.case(), &label.support_diagram()?));
                out.push(label);
            }
        }
    }
    Ok(out)
}

/// The stratum `(r, μ_0)` with `r = min ⌊d_i/2⌋` and `μ_0 = ∏ 1^{d_i - 2r}_i`.
pub fn full_support_stratum_ii(g: &GradingSpec) -> Result<StratumLabelII> {
    require_ii(g)?;
    let r = g.rank();
    let rows: Vec<(usize, usize)> = g
        .dims()
        .entries()
        .iter()
        .enumerate()
        .flat_map(|(i, &di)| std::iter::repeat_n((1, i + 1), di - 2 * r))
        .collect();
    let mu = canonicalize(&rows, g.modulus(), Sign::Minus)?;
    Ok(StratumLabelII { k: r, mu })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::is_distinguished_ii;

    fn ai(dims: Vec<usize>) -> GradingSpec {
        GradingSpec::new(Case::AI, dims.len(), dims).unwrap()
    }

    fn aii(dims: Vec<usize>) -> GradingSpec {
        GradingSpec::new(Case::AII, 3, dims).unwrap()
    }

    #[test]
    fn strata_ai_small() {
        let g = ai(vec![1, 1]);
        let s = enumerate_strata_ai(&g, 1).unwrap();
        let shown: Vec<(usize, String)> = s.iter().map(|x| (x.l, x.mu.to_string())).collect();
        assert_eq!(
            shown,
            [(0, "2_1".to_string()), (0, "2_2".to_string()), (1, "∅".to_string())]
        );
        assert!(s.iter().all(|x| x.d_check % x.a == 0));

        let s = enumerate_strata_ai(&g, 2).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!((s[0].l, s[0].mu.is_empty(), s[0].d_check), (1, true, 2));

        assert!(enumerate_strata_ai(&g, 3).unwrap().is_empty());
        assert!(enumerate_strata_ai(&ai(vec![2, 0]), 2).unwrap().is_empty());
    }

    #[test]
    fn braid_ranks() {
        let g = ai(vec![1, 1]);
        let row = canonicalize(&[(2, 1)], 2, Sign::Minus).unwrap();
        let empty = FilledDiagram::empty(2, Sign::Minus);
        assert_eq!(braid_rank_ai(1, &row, &g).unwrap(), 0);
        assert_eq!(braid_rank_ai(1, &empty, &g).unwrap(), 1);
        assert_eq!(braid_rank_ai(2, &empty, &g).unwrap(), 1);
        let one = canonicalize(&[(1, 1)], 2, Sign::Minus).unwrap();
        assert!(matches!(
            braid_rank_ai(1, &one, &g),
            Err(Error::InconsistentStratum(_))
        ));
    }

    #[test]
    fn strata_ii_small() {
        let s = enumerate_strata_ii(&aii(vec![0, 0, 0])).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0].mu.is_empty());

        let s = enumerate_strata_ii(&aii(vec![1, 0, 1])).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!((s[0].k, s[0].mu.to_string()), (0, "1_1 1_3".to_string()));

        let g = aii(vec![2, 2, 2]);
        let s = enumerate_strata_ii(&g).unwrap();
        assert!(s.contains(&StratumLabelII {
            k: 1,
            mu: FilledDiagram::empty(3, Sign::Minus)
        }));
        assert_eq!(s.iter().filter(|x| x.k == 0).count(), 4);
        for x in &s {
            assert!(is_distinguished_ii(&x.mu, &g).unwrap());
            assert_eq!(x.support_diagram().unwrap().dimension_vector(), *g.dims());
        }
    }

    #[test]
    fn full_support_examples() {
        let f = full_support_stratum_ii(&aii(vec![2, 2, 2])).unwrap();
        assert_eq!((f.k, f.mu.is_empty()), (1, true));
        let f = full_support_stratum_ii(&aii(vec![1, 0, 1])).unwrap();
        assert_eq!((f.k, f.mu.to_string()), (0, "1_1 1_3".to_string()));
        let f = full_support_stratum_ii(&aii(vec![0, 0, 0])).unwrap();
        assert_eq!((f.k, f.mu.is_empty()), (0, true));
        assert!(full_support_stratum_ii(&ai(vec![1, 1])).is_err());
    }

    #[test]
    fn stratum_json_shape() {
        let g = ai(vec![1, 1]);
        let s = &enumerate_strata_ai(&g, 1).unwrap()[2];
        assert_eq!(
            serde_json::to_string(s).unwrap(),
            r#"{"a":1,"l":1,"mu":{"modulus":2,"sign":"-","rows":[]},"d_check":2,"braid_rank":1}"#
        );
        let t = full_support_stratum_ii(&aii(vec![2, 2, 2])).unwrap();
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"k":1,"mu":{"modulus":3,"sign":"-","rows":[]}}"#
        );
    }
}
