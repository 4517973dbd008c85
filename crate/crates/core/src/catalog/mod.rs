//! Named expansions of `e` and `pi`, their target constants, closed-form
//! convergent oracles, and numeric verification.

mod entries;
mod oracle;
mod reference;
mod verify;

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use oracle::{e_half_convergent, e_minus_two_convergent, factorial, subfactorial};
pub use reference::{enclosure, reference_constant, reference_value, Base, Enclosure};
pub use verify::{scientific_string, verify_entry, VerifyReport};

use crate::cf::{CFSpec, CfError};
use crate::generate::SeriesSpec;
use crate::numerics::{format_rational, DecimalString, Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("unknown series {0:?}")]
    UnknownSeries(String),
    #[error("entry {0:?} has no closed-form oracle")]
    NoOracle(String),
    #[error("oracle index must be at least 1")]
    OracleIndex,
    #[error(transparent)]
    Cf(#[from] CfError),
}

/// `scale * base + offset`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantExpr {
    pub base: Base,
    pub scale: Rational,
    pub offset: Rational,
}

impl ConstantExpr {
    /// Exact decimal digits of the target.
    pub fn reference(&self, digits: usize) -> DecimalString {
        reference_value(self.base, &self.scale, &self.offset, digits)
    }
}

impl fmt::Display for ConstantExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.scale;
        if s.is_one() {
            write!(f, "{}", self.base)?;
        } else if (-s).is_one() {
            write!(f, "-{}", self.base)?;
        } else {
            write!(f, "({})*{}", format_rational(s), self.base)?;
        }
        if !self.offset.is_zero() {
            let sign = if self.offset.is_negative() { '-' } else { '+' };
            write!(f, " {sign} {}", format_rational(&self.offset.abs()))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Theorem,
    Conjecture,
    Classical,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Theorem => "theorem",
            Status::Conjecture => "conjecture",
            Status::Classical => "classical",
        })
    }
}

/// Which closed form reproduces an entry's convergents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Oracle {
    EHalf,
    EMinusTwo,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: CFSpec,
    pub target: ConstantExpr,
    pub status: Status,
    pub oracle: Option<Oracle>,
    pub summary: String,
    pub errata: Vec<String>,
}

fn registry() -> &'static [CatalogEntry] {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(entries::build)
}

/// Every entry, in catalog order.
pub fn catalog_entries() -> &'static [CatalogEntry] {
    registry()
}

pub fn catalog_get(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    registry()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::UnknownEntry(name.to_string()))
}

/// Named series with the constant their sum converges to.
pub fn series_get(name: &str) -> Result<(SeriesSpec, ConstantExpr), CatalogError> {
    entries::series()
        .into_iter()
        .find(|(n, _, _)| *n == name)
        .map(|(_, s, t)| (s, t))
        .ok_or_else(|| CatalogError::UnknownSeries(name.to_string()))
}

pub fn series_names() -> Vec<&'static str> {
    entries::series().into_iter().map(|(n, _, _)| n).collect()
}

/// Closed-form `(A_n, B_n)` for entries that have one.
pub fn oracle_convergent(name: &str, n: usize) -> Result<(Integer, Integer), CatalogError> {
    let entry = catalog_get(name)?;
    match entry.oracle {
        None => Err(CatalogError::NoOracle(name.to_string())),
        Some(_) if n == 0 => Err(CatalogError::OracleIndex),
        Some(Oracle::EHalf) => Ok(e_half_convergent(n as u64)),
        Some(Oracle::EMinusTwo) => Ok(e_minus_two_convergent(n as u64)),
    }
}
