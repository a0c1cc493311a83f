//! Canonical JSON form shared by the library and the CLI.
//!
//! Single-variable series: {"kind":"uni","terms":[{"deg":n,"c":…}…]}.
//! Lattice-graded series: {"kind":"multi","d":…,"cut":…,"terms":[{"deg":[i,k],"c":…}…]}.
//! Terms are sorted (by exponent, or by height then first coordinate),
//! zero coefficients are omitted, and serialization is byte-stable.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{ConeContext, MultiDegree};
use crate::series::{MultiSeries, UniSeries};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniTerm {
    pub deg: u64,
    pub c: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiTerm {
    pub deg: [i64; 2],
    pub c: i64,
}

/// The portable form of a series. Parsing is lenient about term order but
/// rejects duplicate degrees; re-serialization is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SeriesJson {
    Uni {
        terms: Vec<UniTerm>,
    },
    Multi {
        d: i64,
        cut: i64,
        terms: Vec<MultiTerm>,
    },
}

fn coeff_to_i64(c: &BigInt) -> Result<i64> {
    i64::try_from(c.clone()).map_err(|_| {
        Error::ConsistencyCheck(format!(
            "coefficient {c} does not fit the JSON integer range"
        ))
    })
}

impl SeriesJson {
    pub fn from_uni(s: &UniSeries) -> Result<Self> {
        let mut terms = Vec::new();
        for (n, c) in s.terms() {
            terms.push(UniTerm {
                deg: n as u64,
                c: coeff_to_i64(c)?,
            });
        }
        Ok(SeriesJson::Uni { terms })
    }

    pub fn from_multi(s: &MultiSeries) -> Result<Self> {
        let mut terms = Vec::new();
        for (r, c) in s.terms() {
            terms.push(MultiTerm {
                deg: [r.i, r.k],
                c: coeff_to_i64(c)?,
            });
        }
        Ok(SeriesJson::Multi {
            d: s.ctx().d(),
            cut: s.height_cut(),
            terms,
        })
    }

    /// The canonical byte form: compact separators, sorted terms.
    pub fn to_canonical_string(&self) -> String {
        let mut sorted = self.clone();
        match &mut sorted {
            SeriesJson::Uni { terms } => terms.sort_by_key(|t| t.deg),
            SeriesJson::Multi { terms, .. } => terms.sort_by_key(|t| (t.deg[1], t.deg[0])),
        }
        serde_json::to_string(&sorted).expect("series JSON serialization cannot fail")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let parsed: SeriesJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        parsed.validate()?;
        Ok(parsed)
    }

    fn validate(&self) -> Result<()> {
        match self {
            SeriesJson::Uni { terms } => {
                let mut degs: Vec<u64> = terms.iter().map(|t| t.deg).collect();
                degs.sort_unstable();
                if degs.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::Parse("duplicate degree in series terms".into()));
                }
            }
            SeriesJson::Multi { d, cut, terms } => {
                let ctx = ConeContext::new(*d)?;
                let mut degs: Vec<[i64; 2]> = Vec::with_capacity(terms.len());
                for t in terms {
                    let r = MultiDegree::new(t.deg[0], t.deg[1]);
                    if !ctx.in_lambda(r) {
                        return Err(Error::SupportViolation {
                            degree: r.to_string(),
                            reason: "degree lies outside the cone monoid".into(),
                        });
                    }
                    if r.ht() > *cut {
                        return Err(Error::SupportViolation {
                            degree: r.to_string(),
                            reason: format!("height exceeds the stated cut {cut}"),
                        });
                    }
                    degs.push(t.deg);
                }
                degs.sort_unstable();
                if degs.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::Parse("duplicate degree in series terms".into()));
                }
            }
        }
        Ok(())
    }

    /// Rebuilds the in-memory series. A plain-series JSON carries no order
    /// field, so the order is the largest listed exponent.
    pub fn to_uni(&self) -> Result<UniSeries> {
        match self {
            SeriesJson::Uni { terms } => {
                let order = terms.iter().map(|t| t.deg as usize).max().unwrap_or(0);
                Ok(UniSeries::from_terms(
                    order,
                    terms.iter().map(|t| (t.deg as usize, BigInt::from(t.c))),
                ))
            }
            SeriesJson::Multi { .. } => Err(Error::Parse(
                "expected a single-variable series, found a lattice-graded one".into(),
            )),
        }
    }

    pub fn to_multi(&self) -> Result<MultiSeries> {
        match self {
            SeriesJson::Multi { d, cut, terms } => MultiSeries::from_terms(
                ConeContext::new(*d)?,
                *cut,
                terms
                    .iter()
                    .map(|t| (MultiDegree::new(t.deg[0], t.deg[1]), BigInt::from(t.c))),
            ),
            SeriesJson::Uni { .. } => Err(Error::Parse(
                "expected a lattice-graded series, found a single-variable one".into(),
            )),
        }
    }
}
