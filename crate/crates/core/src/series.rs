//! Truncated integer power series and the orbit-counting generating functions.
//!
//! Three independent routes give the same numbers: the truncated infinite
//! products, sums of per-partition weights, and brute-force enumeration of
//! diagrams. [`count_table`] lines them up.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::diagrams::{enumerate_by_size, enumerate_by_size_divisible, partitions, Partition, Sign};
use crate::error::{Error, Result};
use crate::orbits::{admissible_for_case, is_distinguished_ai, Case};

/// Coefficients `c_0..=c_{n_max}` of a power series truncated after `x^{n_max}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigInt>,
}

impl TruncSeries {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series keeps at least c_0");
        TruncSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one(n_max: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n_max + 1];
        coeffs[0] = BigInt::one();
        TruncSeries { coeffs }
    }

    pub fn n_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^n`, zero past the truncation degree.
    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, n_max: usize) -> TruncSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n_max + 1, BigInt::zero());
        TruncSeries { coeffs }
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Product truncated at the smaller of the two degrees.
pub fn series_mul(f: &TruncSeries, g: &TruncSeries) -> TruncSeries {
    let n_max = f.n_max().min(g.n_max());
    let mut coeffs = vec![BigInt::zero(); n_max + 1];
    for (i, a) in f.coeffs.iter().enumerate().take(n_max + 1) {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.coeffs.iter().enumerate().take(n_max + 1 - i) {
            coeffs[i + j] += a * b;
        }
    }
    TruncSeries { coeffs }
}

/// Expansion of `(1 - x^j)^{-e}`; a negative `e` gives the polynomial `(1 - x^j)^{|e|}`.
pub fn series_geom_pow(j: usize, e: i64, n_max: usize) -> TruncSeries {
    assert!(j >= 1, "series_geom_pow needs j >= 1");
    let mut coeffs = vec![BigInt::zero(); n_max + 1];
    for (t, deg) in (0..=n_max / j).map(|t| (t, t * j)) {
        coeffs[deg] = if e >= 0 {
            // C(t + e - 1, t)
            if e == 0 {
                BigInt::from((t == 0) as u8)
            } else {
                binomial(t as u64 + e as u64 - 1, t as u64)
            }
        } else {
            let c = binomial(e.unsigned_abs(), t as u64);
            if t % 2 == 1 {
                -c
            } else {
                c
            }
        };
    }
    TruncSeries { coeffs }
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `(1 + x^j)`, or its inverse `(1 - x^j)/(1 - x^{2j})`.
fn one_plus(j: usize, inverse: bool, n_max: usize) -> TruncSeries {
    if inverse {
        series_mul(&series_geom_pow(j, -1, n_max), &series_geom_pow(2 * j, 1, n_max))
    } else {
        let mut s = TruncSeries::one(n_max);
        if j <= n_max {
            s.coeffs[j] = BigInt::one();
        }
        s
    }
}

/// A counted family of diagrams.
///
/// `A`, `C`, `D` count all orbits of types AII (`m_0 = 2l+1`), CII and DII
/// (`m = 2l`) with `2n` boxes; the `Dist*` variants count the distinguished
/// ones. `DistAI` counts `⁰ₐΣ_{m,N}` with the variable tracking `N/a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A { l: usize },
    C { l: usize },
    D { l: usize },
    DistAI { m: usize, a: usize },
    DistA { l: usize },
    DistC { l: usize },
    DistD { l: usize },
}

impl Family {
    fn validate(self) -> Result<()> {
        match self {
            Family::A { l }
            | Family::C { l }
            | Family::D { l }
            | Family::DistA { l }
            | Family::DistC { l }
            | Family::DistD { l } => {
                if l == 0 {
                    return Err(Error::Precondition("l must be at least 1".into()));
                }
            }
            Family::DistAI { m, a } => {
                if m == 0 || a == 0 {
                    return Err(Error::Precondition("m and a must be positive".into()));
                }
                if a.gcd(&m) == m {
                    return Err(Error::NotApplicable(format!(
                        "gcd(a, m) = m for m = {m}, a = {a}: the distinguished family is empty"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Modulus of the diagrams being counted.
    pub fn modulus(self) -> usize {
        match self {
            Family::A { l } | Family::DistA { l } => 2 * l + 1,
            Family::C { l } | Family::D { l } | Family::DistC { l } | Family::DistD { l } => 2 * l,
            Family::DistAI { m, .. } => m,
        }
    }

    /// Number of boxes counted by `x^n`.
    pub fn boxes(self, n: usize) -> usize {
        match self {
            Family::DistAI { a, .. } => a * n,
            _ => 2 * n,
        }
    }

    fn case(self) -> Case {
        match self {
            Family::A { .. } | Family::DistA { .. } => Case::AII,
            Family::C { .. } | Family::DistC { .. } => Case::CII,
            Family::D { .. } | Family::DistD { .. } => Case::DII,
            Family::DistAI { .. } => Case::AI,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A { l } => write!(f, "A(l={l})"),
            Family::C { l } => write!(f, "C(l={l})"),
            Family::D { l } => write!(f, "D(l={l})"),
            Family::DistAI { m, a } => write!(f, "dist-AI(m={m},a={a})"),
            Family::DistA { l } => write!(f, "dist-A(l={l})"),
            Family::DistC { l } => write!(f, "dist-C(l={l})"),
            Family::DistD { l } => write!(f, "dist-D(l={l})"),
        }
    }
}

/// Family names as used on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    A,
    C,
    D,
    DistAI,
    DistA,
    DistC,
    DistD,
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" => FamilyKind::A,
            "C" => FamilyKind::C,
            "D" => FamilyKind::D,
            "dist-AI" => FamilyKind::DistAI,
            "dist-A" => FamilyKind::DistA,
            "dist-C" => FamilyKind::DistC,
            "dist-D" => FamilyKind::DistD,
            other => return Err(Error::Precondition(format!("unknown family {other:?}"))),
        })
    }
}

/// Generating function for all orbits of a type-II family.
pub fn gf_orbit_count(case: Case, l: usize, n_max: usize) -> Result<TruncSeries> {
    if l == 0 {
        return Err(Error::Precondition("l must be at least 1".into()));
    }
    let l = l as i64;
    let mut acc = TruncSeries::one(n_max);
    for k in 1..=n_max.max(1) {
        let factor = match case {
            Case::AII => series_geom_pow(k, l + 1, n_max),
            Case::CII => series_mul(&one_plus(k, false, n_max), &series_geom_pow(k, l, n_max)),
            Case::DII => series_mul(&series_geom_pow(k, l + 1, n_max), &one_plus(k, true, n_max)),
            Case::AI => {
                return Err(Error::Precondition(
                    "orbit-count generating functions are for type II".into(),
                ))
            }
        };
        acc = series_mul(&acc, &factor);
    }
    Ok(acc)
}

/// `∏_k (1 - x^{(m/d)k})^d / (1 - x^k)^m`, counting `⁰ₐΣ_{m,N}` by `N/a`.
pub fn gf_distinguished_ai(m: usize, a: usize, n_max: usize) -> Result<TruncSeries> {
    Family::DistAI { m, a }.validate()?;
    let d = a.gcd(&m);
    let mut acc = TruncSeries::one(n_max);
    for k in 1..=n_max.max(1) {
        acc = series_mul(&acc, &series_geom_pow((m / d) * k, -(d as i64), n_max));
        acc = series_mul(&acc, &series_geom_pow(k, m as i64, n_max));
    }
    Ok(acc)
}

/// Generating function for distinguished orbits of a type-II family.
pub fn gf_distinguished_ii(case: Case, l: usize, n_max: usize) -> Result<TruncSeries> {
    let base = gf_orbit_count(case, l, n_max)?;
    let cut = match case {
        Case::AII => 2 * l + 1,
        _ => 2 * l,
    };
    let mut acc = base;
    for k in 1..=n_max.max(1) {
        acc = series_mul(&acc, &series_geom_pow(cut * k, -1, n_max));
    }
    Ok(acc)
}

/// Generating function of any family.
pub fn gf(family: Family, n_max: usize) -> Result<TruncSeries> {
    family.validate()?;
    match family {
        Family::A { l } => gf_orbit_count(Case::AII, l, n_max),
        Family::C { l } => gf_orbit_count(Case::CII, l, n_max),
        Family::D { l } => gf_orbit_count(Case::DII, l, n_max),
        Family::DistAI { m, a } => gf_distinguished_ai(m, a, n_max),
        Family::DistA { l } => gf_distinguished_ii(Case::AII, l, n_max),
        Family::DistC { l } => gf_distinguished_ii(Case::CII, l, n_max),
        Family::DistD { l } => gf_distinguished_ii(Case::DII, l, n_max),
    }
}

/// Coefficient of `t^k` in `(1 - t^q)^e / (1 - t)^f`.
fn cut_coeff(k: usize, q: usize, e: u64, f: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0..=e {
        let shift = q as u64 * j;
        if shift > k as u64 {
            break;
        }
        let rest = k as u64 - shift;
        let term = binomial(e, j) * binomial(rest + f - 1, f - 1);
        if j % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

/// Weight attached to a partition `μ` of `n`; summing over `P(n)` gives the count at `x^n`.
///
/// For a part of multiplicity `k` the factor is the number of ways to
/// distribute `k` among the label classes a row of that length can occupy,
/// restricted to distinguished choices for the `Dist*` families.
pub fn weight_count(mu: &Partition, family: Family) -> Result<BigInt> {
    family.validate()?;
    let mut acc = BigInt::one();
    for (part, k) in mu.multiplicities() {
        let odd = part % 2 == 1;
        let w = match family {
            Family::A { l } => binomial((k + l) as u64, l as u64),
            Family::C { l } | Family::D { l } => {
                let wide = matches!(family, Family::C { .. }) == odd;
                if wide {
                    binomial((k + l) as u64, l as u64)
                } else {
                    binomial((k + l - 1) as u64, (l - 1) as u64)
                }
            }
            Family::DistAI { m, a } => {
                let d = a.gcd(&m);
                cut_coeff(k, m / d, d as u64, m as u64)
            }
            Family::DistA { l } => cut_coeff(k, 2 * l + 1, 1, (l + 1) as u64),
            Family::DistC { l } | Family::DistD { l } => {
                let wide = matches!(family, Family::DistC { .. }) == odd;
                let f = if wide { l + 1 } else { l };
                cut_coeff(k, 2 * l, 1, f as u64)
            }
        };
        acc *= w;
    }
    Ok(acc)
}

/// `Σ_{μ ∈ P(n)} weight_count(μ)`.
pub fn weight_sum(family: Family, n: usize) -> Result<BigInt> {
    partitions(n)
        .iter()
        .try_fold(BigInt::zero(), |acc, mu| Ok(acc + weight_count(mu, family)?))
}

/// Brute-force count of the family at `x^n` by enumerating diagrams.
pub fn count_by_enumeration(family: Family, n: usize) -> Result<usize> {
    family.validate()?;
    let k = family.modulus();
    let boxes = family.boxes(n);
    let count = match family {
        Family::DistAI { m, a } => enumerate_by_size_divisible(m, Sign::Plus, boxes, a)
            .iter()
            .filter(|lam| is_distinguished_ai(lam, a, m))
            .count(),
        _ => {
            let case = family.case();
            let distinguished = matches!(
                family,
                Family::DistA { .. } | Family::DistC { .. } | Family::DistD { .. }
            );
            enumerate_by_size(k, Sign::Plus, boxes)
                .iter()
                .filter(|lam| admissible_for_case(case, lam))
                .filter(|lam| {
                    !distinguished
                        || lam
                            .multiplicity_table()
                            .values()
                            .all(|p| p.iter().copied().min().unwrap_or(0) <= 1)
                })
                .count()
        }
    };
    Ok(count)
}

/// One line of a three-way count comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: usize,
    pub gf_coeff: String,
    pub weight_sum: String,
    pub enum_count: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Rows `n = 0..=n_max` comparing product coefficients, weight sums and enumeration.
pub fn count_table(family: Family, n_max: usize) -> Result<Vec<CountRow>> {
    let series = gf(family, n_max)?;
    (0..=n_max)
        .map(|n| {
            let g = series.coeff(n);
            let w = weight_sum(family, n)?;
            let e = count_by_enumeration(family, n)?;
            let matches = g == w && g == BigInt::from(e) && !g.is_negative();
            Ok(CountRow {
                n,
                gf_coeff: g.to_string(),
                weight_sum: w.to_string(),
                enum_count: e,
                matches,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn geometric_expansions() {
        assert_eq!(ints(&series_geom_pow(1, 1, 3)), [1, 1, 1, 1]);
        assert_eq!(ints(&series_geom_pow(1, 2, 3)), [1, 2, 3, 4]);
        assert_eq!(ints(&series_geom_pow(2, 1, 5)), [1, 0, 1, 0, 1, 0]);
        assert_eq!(ints(&series_geom_pow(1, -2, 4)), [1, -2, 1, 0, 0]);
        assert_eq!(ints(&series_geom_pow(3, 0, 4)), [1, 0, 0, 0, 0]);
        let p = series_mul(&TruncSeries::from_i64(&[1, 1]), &TruncSeries::from_i64(&[1, 1, 0]));
        assert_eq!(ints(&p), [1, 2]);
        let p = series_mul(&TruncSeries::from_i64(&[1, 1, 0]), &TruncSeries::from_i64(&[1, 1, 0]));
        assert_eq!(ints(&p), [1, 2, 1]);
        assert_eq!(ints(&one_plus(1, true, 4)), [1, -1, 1, -1, 1]);
    }

    #[test]
    fn orbit_count_heads() {
        assert_eq!(ints(&gf_orbit_count(Case::AII, 1, 4).unwrap()), [1, 2, 5, 10, 20]);
        assert_eq!(gf_orbit_count(Case::CII, 1, 3).unwrap().coeff(1), BigInt::from(2));
        for case in [Case::AII, Case::CII, Case::DII] {
            assert_eq!(gf_orbit_count(case, 2, 0).unwrap().coeff(0), BigInt::one());
        }
    }

    #[test]
    fn distinguished_heads() {
        assert_eq!(ints(&gf_distinguished_ai(2, 1, 2).unwrap()), [1, 2, 4]);
        assert_eq!(gf_distinguished_ai(3, 1, 2).unwrap().coeff(1), BigInt::from(3));
        assert!(matches!(gf_distinguished_ai(2, 2, 3), Err(Error::NotApplicable(_))));
        assert_eq!(gf_distinguished_ii(Case::AII, 1, 2).unwrap().coeff(1), BigInt::from(2));
        assert_eq!(gf_distinguished_ii(Case::DII, 1, 2).unwrap().coeff(0), BigInt::one());
    }

    #[test]
    fn weights() {
        let one = Partition::new(vec![1]).unwrap();
        assert_eq!(weight_count(&one, Family::A { l: 1 }).unwrap(), BigInt::from(2));
        assert_eq!(weight_count(&one, Family::C { l: 1 }).unwrap(), BigInt::from(2));
        assert_eq!(weight_count(&one, Family::D { l: 1 }).unwrap(), BigInt::from(1));
        assert_eq!(
            weight_count(&Partition::empty(), Family::DistAI { m: 3, a: 1 }).unwrap(),
            BigInt::one()
        );
        // (1 - t^2)/(1 - t)^2 = (1 + t)/(1 - t): every coefficient past t^0 is 2.
        let two_ones = Partition::new(vec![1, 1]).unwrap();
        assert_eq!(
            weight_count(&two_ones, Family::DistAI { m: 2, a: 1 }).unwrap(),
            BigInt::from(2)
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn count_table_at_zero() {
        let rows = count_table(Family::A { l: 1 }, 0).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!((rows[0].gf_coeff.as_str(), rows[0].enum_count, rows[0].matches), ("1", 1, true));
    }
}
