//! Character-sheaf labels and the orbital-complex bijections.
//!
//! Sheaves are handled purely as labels: a stratum, a central character and
//! a braid-group representation label. The orbital complexes `(O_λ, ψ)` are
//! mapped to labels by peeling `λ`, and [`verify_bijection`] checks that the
//! map hits every catalog entry exactly once.

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::diagrams::{
    canonicalize, enumerate_diagrams, multipartitions, partitions, FilledDiagram, MultiPartition,
    Partition, Sign,
};
use crate::error::{Error, Result};
use crate::oracle::stratum_dim_ai;
use crate::orbits::{
    admissible_for_case, d_check_stratum, duality, enumerate_strata_ai, enumerate_strata_ii,
    full_support_stratum_ii, peel_ai, peel_ii, Case, GradingSpec, StratumLabelAI, StratumLabelII,
};

/// A character of `Z/modulus` of exact order `order`, given by its index `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CentralCharacter {
    #[serde(rename = "mod")]
    pub modulus: usize,
    #[serde(rename = "idx")]
    pub index: usize,
    pub order: usize,
}

impl CentralCharacter {
    pub fn trivial() -> Self {
        CentralCharacter {
            modulus: 1,
            index: 0,
            order: 1,
        }
    }
}

/// The `φ(a)` characters of `Z/ď` of exact order `a`, by increasing index.
pub fn exact_order_characters(d_check: usize, a: usize) -> Vec<CentralCharacter> {
    if d_check == 0 || a == 0 || !d_check.is_multiple_of(a) {
        return Vec::new();
    }
    (0..d_check)
        .filter(|c| d_check / c.gcd(&d_check) == a)
        .map(|index| CentralCharacter {
            modulus: d_check,
            index,
            order: a,
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SheafFlags {
    /// Nilpotent support: the stratum is a distinguished orbit (`l = 0` or `k = 0`).
    pub nilp: bool,
    /// The support is all of `g_1`.
    pub full: bool,
    /// On the conjectural cuspidal list.
    pub cuspidal_conj: bool,
}

/// A character-sheaf label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SheafLabel {
    AI {
        stratum: StratumLabelAI,
        psi: CentralCharacter,
        tau: MultiPartition,
        flags: SheafFlags,
    },
    II {
        stratum: StratumLabelII,
        rho: Partition,
        flags: SheafFlags,
    },
}

impl SheafLabel {
    pub fn flags(&self) -> SheafFlags {
        match self {
            SheafLabel::AI { flags, .. } | SheafLabel::II { flags, .. } => *flags,
        }
    }

    /// `|τ|` or `|ρ|`.
    pub fn braid_rank(&self) -> usize {
        match self {
            SheafLabel::AI { tau, .. } => tau.size(),
            SheafLabel::II { rho, .. } => rho.size(),
        }
    }
}

impl Serialize for SheafLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SheafLabel", 5)?;
        match self {
            SheafLabel::AI {
                stratum,
                psi,
                tau,
                flags,
            } => {
                s.serialize_field("type", "AI")?;
                s.serialize_field("stratum", stratum)?;
                s.serialize_field("psi", psi)?;
                s.serialize_field("tau", tau)?;
                s.serialize_field("flags", flags)?;
            }
            SheafLabel::II {
                stratum,
                rho,
                flags,
            } => {
                s.serialize_field("type", "II")?;
                s.serialize_field("stratum", stratum)?;
                s.serialize_field("psi", &CentralCharacter::trivial())?;
                s.serialize_field("tau", &[rho])?;
                s.serialize_field("flags", flags)?;
            }
        }
        s.end()
    }
}

/// An orbit in degree `-1` (a `-` diagram) with a character of its component group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitalComplex {
    pub lambda: FilledDiagram,
    pub psi: CentralCharacter,
}

fn require_ai(g: &GradingSpec) -> Result<()> {
    if g.case() != Case::AI {
        return Err(Error::Precondition(format!("{} is not a type AI grading", g.case())));
    }
    if g.total() == 0 {
        return Err(Error::NotApplicable(
            "N = 0: the center is trivial and every order divides d_∅ = 0".into(),
        ));
    }
    Ok(())
}

fn require_ii(g: &GradingSpec) -> Result<()> {
    if !g.case().is_type_ii() {
        return Err(Error::Precondition("expected a type II grading".into()));
    }
    Ok(())
}

/// All `(O_λ, ψ)` with `λ ∈ Σ^-_{m,d}`, `a | d_λ` and `ψ` of exact order `a`.
///
/// In type II the component groups are trivial: every admissible `λ` with
/// the trivial character, and `a` is ignored.
pub fn orbital_complexes(g: &GradingSpec, a: usize) -> Result<Vec<OrbitalComplex>> {
    let m = g.modulus();
    let diagrams = enumerate_diagrams(m, Sign::Minus, g.dims());
    if g.case().is_type_ii() {
        return Ok(diagrams
            .into_iter()
            .filter(|lam| admissible_for_case(g.case(), lam))
            .map(|lambda| OrbitalComplex {
                lambda,
                psi: CentralCharacter::trivial(),
            })
            .collect());
    }
    require_ai(g)?;
    if a == 0 {
        return Err(Error::Precondition("a must be positive".into()));
    }
    let mut out = Vec::new();
    for lambda in diagrams {
        for psi in exact_order_characters(lambda.gcd_of_parts(), a) {
            out.push(OrbitalComplex {
                lambda: lambda.clone(),
                psi,
            });
        }
    }
    Ok(out)
}

/// Flag computation for AI labels, caching the support dimension per stratum.
struct FlagsAI<'g> {
    g: &'g GradingSpec,
    full: HashMap<StratumLabelAI, bool>,
    cuspidal: BTreeSet<(StratumLabelAI, CentralCharacter, MultiPartition)>,
}

impl<'g> FlagsAI<'g> {
    fn new(g: &'g GradingSpec) -> Result<Self> {
        let cuspidal = cuspidal_keys(g)?.into_iter().collect();
        Ok(FlagsAI {
            g,
            full: HashMap::new(),
            cuspidal,
        })
    }

    fn label(
        &mut self,
        stratum: StratumLabelAI,
        psi: CentralCharacter,
        tau: MultiPartition,
    ) -> Result<SheafLabel> {
        let full = match self.full.get(&stratum) {
            Some(&f) => f,
            None => {
                let f = stratum_dim_ai(&stratum, self.g)? == self.g.dim_g1();
                self.full.insert(stratum.clone(), f);
                f
            }
        };
        let key = (stratum, psi, tau);
        let flags = SheafFlags {
            nilp: key.0.l == 0,
            full,
            cuspidal_conj: self.cuspidal.contains(&key),
        };
        let (stratum, psi, tau) = key;
        Ok(SheafLabel::AI {
            stratum,
            psi,
            tau,
            flags,
        })
    }
}

/// All AI labels with central character of order `a`.
///
/// For each stratum `(a, l, μ)`: every `ψ` of exact order `a` on `Z/ď_{a,μ}`
/// and every `τ ∈ P_d(l)`, `d = gcd(a, m)`. Empty when `a ∤ N`.
pub fn catalog_ai(g: &GradingSpec, a: usize) -> Result<Vec<SheafLabel>> {
    require_ai(g)?;
    let mut flags = FlagsAI::new(g)?;
    let mut out = Vec::new();
    for stratum in enumerate_strata_ai(g, a)? {
        let d = stratum.gcd();
        let taus = multipartitions(d, stratum.l);
        for psi in exact_order_characters(stratum.d_check, a) {
            for tau in &taus {
                out.push(flags.label(stratum.clone(), psi, tau.clone())?);
            }
        }
    }
    Ok(out)
}

/// All type-II labels `(k, μ, ρ)` with `ρ ∈ P(k)`.
pub fn catalog_ii(g: &GradingSpec) -> Result<Vec<SheafLabel>> {
    require_ii(g)?;
    let full = full_support_stratum_ii(g)?;
    let mut out = Vec::new();
    for stratum in enumerate_strata_ii(g)? {
        for rho in partitions(stratum.k) {
            out.push(label_ii(stratum.clone(), rho, &full));
        }
    }
    Ok(out)
}

fn label_ii(stratum: StratumLabelII, rho: Partition, full: &StratumLabelII) -> SheafLabel {
    let flags = SheafFlags {
        nilp: stratum.k == 0,
        full: &stratum == full,
        cuspidal_conj: false,
    };
    SheafLabel::II {
        stratum,
        rho,
        flags,
    }
}

fn map_ai_with(
    lambda: &FilledDiagram,
    psi: CentralCharacter,
    a: usize,
    g: &GradingSpec,
    flags: &mut FlagsAI<'_>,
) -> Result<SheafLabel> {
    let m = g.modulus();
    if lambda.sign() != Sign::Minus || lambda.dimension_vector() != *g.dims() {
        return Err(Error::Precondition(format!(
            "{lambda} is not a `-` diagram with dimension vector {}",
            g.dims()
        )));
    }
    let source = exact_order_characters(lambda.gcd_of_parts(), a);
    let position = source.iter().position(|c| *c == psi).ok_or_else(|| {
        Error::Precondition(format!(
            "ψ = {}/{} does not have exact order {a} on Z/{}",
            psi.index,
            psi.modulus,
            lambda.gcd_of_parts()
        ))
    })?;
    let peeled = peel_ai(lambda, a, m)?;
    let l = peeled.braid_rank();
    let d_check = d_check_stratum(a, &peeled.residual, m);
    let target = exact_order_characters(d_check, a);
    let stratum = StratumLabelAI {
        a,
        l,
        d_check,
        braid_rank: l,
        mu: peeled.residual,
    };
    flags.label(stratum, target[position], peeled.tau)
}

/// `IC(O_λ, ψ) ↦ IC(Ǒ_{a,μ_λ}, T_{ψ,τ_λ})`.
///
/// Characters are matched by position: the `i`-th order-`a` character of
/// `Z/d_λ` goes to the `i`-th of `Z/ď_{a,μ_λ}`.
pub fn map_sheaf_ai(
    lambda: &FilledDiagram,
    psi: CentralCharacter,
    a: usize,
    g: &GradingSpec,
) -> Result<SheafLabel> {
    require_ai(g)?;
    let mut flags = FlagsAI::new(g)?;
    map_ai_with(lambda, psi, a, g, &mut flags)
}

/// `IC(O_λ, C) ↦ IC(Ǒ_{|ν|,μ}, L_ν)`.
pub fn map_sheaf_ii(lambda: &FilledDiagram, g: &GradingSpec) -> Result<SheafLabel> {
    require_ii(g)?;
    if lambda.sign() != Sign::Minus || lambda.dimension_vector() != *g.dims() {
        return Err(Error::Precondition(format!(
            "{lambda} is not a `-` diagram with dimension vector {}",
            g.dims()
        )));
    }
    let full = full_support_stratum_ii(g)?;
    let peeled = peel_ii(lambda, g)?;
    let stratum = StratumLabelII {
        k: peeled.k,
        mu: peeled.residual,
    };
    Ok(label_ii(stratum, peeled.nu, &full))
}

/// Outcome of [`verify_bijection`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub case: Case,
    pub dims: Vec<usize>,
    /// `None` in type II, where the order is irrelevant.
    pub a: Option<usize>,
    pub complexes: usize,
    pub catalog: usize,
    pub counts_equal: bool,
    pub injective: bool,
    pub surjective: bool,
    pub pass: bool,
}

/// Maps every orbital complex and compares the image with the catalog.
pub fn verify_bijection(g: &GradingSpec, a: usize) -> Result<BijectionReport> {
    let complexes = orbital_complexes(g, a)?;
    let (catalog, image) = if g.case().is_type_ii() {
        let image = complexes
            .iter()
            .map(|c| map_sheaf_ii(&c.lambda, g))
            .collect::<Result<Vec<_>>>()?;
        (catalog_ii(g)?, image)
    } else {
        let catalog = catalog_ai(g, a)?;
        let mut flags = FlagsAI::new(g)?;
        let image = complexes
            .iter()
            .map(|c| map_ai_with(&c.lambda, c.psi, a, g, &mut flags))
            .collect::<Result<Vec<_>>>()?;
        (catalog, image)
    };
    let image_set: BTreeSet<&SheafLabel> = image.iter().collect();
    let catalog_set: BTreeSet<&SheafLabel> = catalog.iter().collect();
    let counts_equal = complexes.len() == catalog.len();
    let injective = image_set.len() == image.len();
    let surjective = image_set == catalog_set && catalog_set.len() == catalog.len();
    Ok(BijectionReport {
        case: g.case(),
        dims: g.dims().entries().to_vec(),
        a: (!g.case().is_type_ii()).then_some(a),
        complexes: complexes.len(),
        catalog: catalog.len(),
        counts_equal,
        injective,
        surjective,
        pass: counts_equal && injective && surjective,
    })
}

fn cuspidal_keys(
    g: &GradingSpec,
) -> Result<Vec<(StratumLabelAI, CentralCharacter, MultiPartition)>> {
    let m = g.modulus();
    let n = g.total();
    let mut out = Vec::new();
    if !n.is_multiple_of(m) {
        let Some(row) = (1..=m)
            .map(|i| canonicalize(&[(n, i)], m, Sign::Plus))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .find(|row| row.dimension_vector() == *g.dims())
        else {
            return Ok(out);
        };
        let mu = duality(&row);
        let d = n.gcd(&m);
        let stratum = StratumLabelAI {
            a: n,
            l: 0,
            d_check: d_check_stratum(n, &mu, m),
            braid_rank: 0,
            mu,
        };
        for psi in exact_order_characters(stratum.d_check, n) {
            out.push((stratum.clone(), psi, MultiPartition::empty(d)));
        }
        return Ok(out);
    }
    let q = n / m;
    if g.dims().entries().iter().any(|&di| di != q) {
        return Ok(out);
    }
    for d_prime in (1..=m).filter(|dp| m.is_multiple_of(*dp)) {
        if q.gcd(&(m / d_prime)) != 1 {
            continue;
        }
        let a = d_prime * q;
        let mu = FilledDiagram::empty(m, Sign::Minus);
        let stratum = StratumLabelAI {
            a,
            l: 1,
            d_check: d_check_stratum(a, &mu, m),
            braid_rank: 1,
            mu,
        };
        for psi in exact_order_characters(stratum.d_check, a) {
            for tau in multipartitions(d_prime, 1) {
                out.push((stratum.clone(), psi, tau));
            }
        }
    }
    Ok(out)
}

/// The conjectural cuspidal labels.
///
/// When `m ∤ N` they live on the regular orbit, which must be a single row
/// `N_i` of dimension vector `d`, with `ψ` of exact order `N`. When `m | N`
/// and `d = (N/m)·1` they are the labels with `μ = ∅`, `l = 1`,
/// `a = d'N/m` for each `d' | m` with `gcd(N/m, m/d') = 1`.
pub fn cuspidal_ai(g: &GradingSpec) -> Result<Vec<SheafLabel>> {
    require_ai(g)?;
    let mut flags = FlagsAI::new(g)?;
    cuspidal_keys(g)?
        .into_iter()
        .map(|(stratum, psi, tau)| flags.label(stratum, psi, tau))
        .collect()
}
