use serde::{Deserialize, Serialize};

use crate::ratpoly::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one exact identity check. A failed identity is a returned
/// certificate, never an error.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub identity: String,
    pub n: usize,
    pub k: Option<i64>,
    pub status: Status,
    /// Nonzero terms left in the residual; 0 on success.
    pub residual_terms: usize,
    pub detail: String,
}

impl Certificate {
    /// Passes iff `residual` is the zero polynomial.
    pub fn from_residual(identity: &str, n: usize, k: Option<i64>, residual: &LaurentPoly) -> Self {
        let terms = residual.term_count();
        let detail = if terms == 0 {
            "zero residual".to_string()
        } else {
            format!("residual {residual}")
        };
        Certificate {
            identity: identity.to_string(),
            n,
            k,
            status: if terms == 0 { Status::Pass } else { Status::Fail },
            residual_terms: terms,
            detail,
        }
    }

    pub fn from_check(identity: &str, n: usize, k: Option<i64>, ok: bool, detail: impl Into<String>) -> Self {
        Certificate {
            identity: identity.to_string(),
            n,
            k,
            status: if ok { Status::Pass } else { Status::Fail },
            residual_terms: usize::from(!ok),
            detail: detail.into(),
        }
    }

    /// Merges several residual checks into one certificate that passes only
    /// if all of them vanish.
    pub fn from_residuals(identity: &str, n: usize, k: Option<i64>, residuals: &[LaurentPoly]) -> Self {
        let terms: usize = residuals.iter().map(LaurentPoly::term_count).sum();
        let mut cert = Certificate::from_residual(identity, n, k, &LaurentPoly::zero());
        if terms > 0 {
            cert.status = Status::Fail;
            cert.residual_terms = terms;
            cert.detail = residuals
                .iter()
                .filter(|r| !r.is_zero())
                .map(|r| format!("residual {r}"))
                .collect::<Vec<_>>()
                .join("; ");
        }
        cert
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
