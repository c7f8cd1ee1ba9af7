//! Nilpotent orbits and character-sheaf labels for `Z/m`-graded classical Lie algebras.
//!
//! Orbits of `K = G^θ` on the nilpotent cone of `g_1` are labeled by filled
//! Young diagrams. The crate enumerates them, splits them into strata,
//! counts them through generating functions, realizes type AI orbits as
//! exact rational matrices, and builds the label catalogs matched by the
//! orbital-complex bijections.

pub mod cli;
pub mod diagrams;
pub mod error;
pub mod oracle;
pub mod orbits;
pub mod series;
pub mod sheaves;

pub use diagrams::{
    canonicalize, enumerate_diagrams, DimensionVector, FilledDiagram, FilledRow, MultiPartition,
    Partition, Sign,
};
pub use error::{Error, Result};
pub use orbits::{Case, GradingSpec, OrbitLabel, StratumLabelAI, StratumLabelII};
pub use series::{Family, TruncSeries};
