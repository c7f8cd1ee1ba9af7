use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagrams::DimensionVector;
use crate::error::{Error, Result};

/// Which classical graded Lie algebra the grading comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    /// Inner automorphism of `SL_N`; orbits are all of `Σ_{m,d}`.
    AI,
    /// Outer type on `SL_{2n}`, modulus `m_0 = 2l+1` odd.
    AII,
    /// `Sp_{2n}` with an even order inner automorphism.
    CII,
    /// `SO_{2n}` with an even order automorphism.
    DII,
}

impl Case {
    pub fn is_type_ii(self) -> bool {
        !matches!(self, Case::AI)
    }

    pub fn name(self) -> &'static str {
        match self {
            Case::AI => "AI",
            Case::AII => "AII",
            Case::CII => "CII",
            Case::DII => "DII",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "AI" => Ok(Case::AI),
            "AII" => Ok(Case::AII),
            "CII" => Ok(Case::CII),
            "DII" => Ok(Case::DII),
            other => Err(Error::InvalidGrading(format!("unknown case {other:?}"))),
        }
    }
}

/// Grading data: the case, the modulus of the cyclic quiver and its dimension vector.
///
/// The modulus is `m` for AI, CII and DII and `m_0` for AII. The vector
/// entries `d_i = dim M_i` are validated against the symmetry the
/// invariant form forces in type II.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GradingSpec {
    case: Case,
    modulus: usize,
    dims: DimensionVector,
}

impl GradingSpec {
    pub fn new(case: Case, modulus: usize, dims: Vec<usize>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidGrading(msg));
        if modulus == 0 {
            return bad("modulus must be at least 1".into());
        }
        if dims.len() != modulus {
            return bad(format!(
                "dimension vector has {} entries but the modulus is {modulus}",
                dims.len()
            ));
        }
        let d = |i: usize| dims[i - 1];
        let total: usize = dims.iter().sum();
        match case {
            Case::AI => {}
            Case::AII => {
                if modulus.is_multiple_of(2) {
                    return bad(format!("AII needs an odd modulus m0, got {modulus}"));
                }
                let l = (modulus - 1) / 2;
                for i in 1..=l {
                    if d(i) != d(modulus + 1 - i) {
                        return bad(format!("AII needs d_{i} = d_{}", modulus + 1 - i));
                    }
                }
                if d(l + 1) % 2 != 0 {
                    return bad(format!("AII needs d_{} even", l + 1));
                }
            }
            Case::CII => {
                if !modulus.is_multiple_of(2) {
                    return bad(format!("CII needs an even modulus, got {modulus}"));
                }
                let l = modulus / 2;
                for i in 1..l {
                    if d(i) != d(modulus - i) {
                        return bad(format!("CII needs d_{i} = d_{}", modulus - i));
                    }
                }
                if d(l) % 2 != 0 || d(modulus) % 2 != 0 {
                    return bad(format!("CII needs d_{l} and d_{modulus} even"));
                }
            }
            Case::DII => {
                if !modulus.is_multiple_of(2) {
                    return bad(format!("DII needs an even modulus, got {modulus}"));
                }
                for i in 1..=modulus {
                    if d(i) != d(modulus + 1 - i) {
                        return bad(format!("DII needs d_{i} = d_{}", modulus + 1 - i));
                    }
                }
            }
        }
        if case.is_type_ii() && !total.is_multiple_of(2) {
            return bad(format!("{case} needs |d| even, got {total}"));
        }
        Ok(GradingSpec {
            case,
            modulus,
            dims: DimensionVector::new(dims),
        })
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn dims(&self) -> &DimensionVector {
        &self.dims
    }

    /// `N = |d|`.
    pub fn total(&self) -> usize {
        self.dims.total()
    }

    /// `l = (m_0 - 1)/2` in AII, `m/2` in CII/DII; `None` for AI.
    pub fn half_modulus(&self) -> Option<usize> {
        match self.case {
            Case::AI => None,
            Case::AII => Some((self.modulus - 1) / 2),
            Case::CII | Case::DII => Some(self.modulus / 2),
        }
    }

    /// Dimension of a Cartan subspace: `min d_i` (AI) or `min ⌊d_i/2⌋` (type II).
    pub fn rank(&self) -> usize {
        let it = self.dims.entries().iter();
        match self.case {
            Case::AI => it.copied().min().unwrap_or(0),
            _ => it.map(|d| d / 2).min().unwrap_or(0),
        }
    }

    /// `dim K = Σ d_i² - 1` for AI (`0` when `N = 0`).
    pub fn dim_k(&self) -> usize {
        let sq: usize = self.dims.entries().iter().map(|d| d * d).sum();
        sq.saturating_sub(1)
    }

    /// `dim g_1 = Σ d_i d_{i-1}` for AI (quiver arrows `M_i -> M_{i-1}`).
    pub fn dim_g1(&self) -> usize {
        let d = self.dims.entries();
        let m = d.len();
        (0..m).map(|i| d[i] * d[(i + m - 1) % m]).sum()
    }
}

impl fmt::Display for GradingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = if self.case == Case::AII { "m0" } else { "m" };
        write!(f, "{} {}={} d={}", self.case, label, self.modulus, self.dims)
    }
}
