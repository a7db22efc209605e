//! Index report emitted by every computation path.

use std::time::Duration;

use serde::Serialize;

use crate::error::{binom2, Error, Result};

/// Which computation path produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "naive")]
    Naive,
    #[serde(rename = "generic-cut")]
    GenericCut,
    #[serde(rename = "benzenoid")]
    Benzenoid,
    #[serde(rename = "tree")]
    Tree,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Naive => "naive",
            Method::GenericCut => "generic-cut",
            Method::Benzenoid => "benzenoid",
            Method::Tree => "tree",
        };
        f.write_str(s)
    }
}

/// Computed indices plus method provenance.
///
/// Two structural identities hold in every validated report:
/// `W_e = Ŵ_e + C(m, 2)` and `WW_e = 2·W_e + WW_e* − C(m, 2)`.
#[derive(Debug, Clone, Serialize)]
pub struct IndexReport {
    pub m: u64,
    pub edge_wiener: u64,
    pub edge_wiener_hat: u64,
    pub ww_star: u64,
    pub edge_hyper_wiener: u64,
    pub method: Method,
    #[serde(serialize_with = "serialize_ms")]
    #[serde(rename = "elapsed_ms")]
    pub elapsed: Duration,
}

fn serialize_ms<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl IndexReport {
    /// Builds a report and checks the structural identities. Every
    /// computation path goes through here, so a path that miscomputes any
    /// one of the four numbers fails loudly instead of emitting a report.
    pub fn new(
        m: u64,
        edge_wiener: u64,
        edge_wiener_hat: u64,
        ww_star: u64,
        edge_hyper_wiener: u64,
        method: Method,
        elapsed: Duration,
    ) -> Result<IndexReport> {
        let report = IndexReport {
            m,
            edge_wiener,
            edge_wiener_hat,
            ww_star,
            edge_hyper_wiener,
            method,
            elapsed,
        };
        report.validate()?;
        Ok(report)
    }

    pub fn validate(&self) -> Result<()> {
        let pairs = binom2(self.m)?;
        let consistent = self.edge_wiener == self.edge_wiener_hat.checked_add(pairs).ok_or(Error::Overflow)?
            && Some(self.edge_hyper_wiener)
                == self
                    .edge_wiener
                    .checked_mul(2)
                    .and_then(|x| x.checked_add(self.ww_star))
                    .and_then(|x| x.checked_sub(pairs))
            && self.edge_hyper_wiener >= self.edge_wiener;
        if consistent {
            Ok(())
        } else {
            Err(Error::Internal(format!(
                "index identities violated: m={} W_e={} What_e={} WW*={} WW_e={}",
                self.m, self.edge_wiener, self.edge_wiener_hat, self.ww_star, self.edge_hyper_wiener
            )))
        }
    }

    /// The stable index fields, ignoring method and timing. Used by tests
    /// and the verification suites to compare computation paths.
    pub fn values(&self) -> (u64, u64, u64, u64, u64) {
        (
            self.m,
            self.edge_wiener,
            self.edge_wiener_hat,
            self.ww_star,
            self.edge_hyper_wiener,
        )
    }
}
