use crate::birge::{approx_monotone_sum, Direction, FnAccess, MonotoneAudit};
use crate::error::{Error, Result};

/// Accuracy requested from a counting routine.
///
/// `Exact` evaluates every probe. The arithmetic is `f64`, which is exact for
/// counts below 2^53.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Precision {
    Exact,
    Approx(f64),
}

impl Precision {
    pub fn approx(epsilon: f64) -> Result<Self> {
        if epsilon.is_finite() && epsilon > 0.0 && epsilon < 1.0 {
            Ok(Precision::Approx(epsilon))
        } else {
            Err(Error::InvalidEpsilon(epsilon))
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Precision::Exact)
    }

    pub fn epsilon(self) -> Option<f64> {
        match self {
            Precision::Exact => None,
            Precision::Approx(e) => Some(e),
        }
    }

    /// Per-stage budget `eps / d`.
    pub fn divide(self, d: f64) -> Self {
        match self {
            Precision::Exact => Precision::Exact,
            Precision::Approx(e) => Precision::Approx(e / d),
        }
    }

    /// Budget for one of `stages` chained lower-bound stages:
    /// `(1 + eps/2s)^s <= 1 + eps` for `eps < 1`.
    pub fn per_stage(self, stages: usize) -> Self {
        if stages == 0 {
            self
        } else {
            self.divide(2.0 * stages as f64)
        }
    }
}

/// Precision plus an optional monotonicity audit, threaded through the
/// counting routines.
#[derive(Clone, Copy, Debug)]
pub struct Estimator<'a> {
    pub precision: Precision,
    pub audit: Option<&'a MonotoneAudit>,
}

impl<'a> Estimator<'a> {
    pub fn new(precision: Precision) -> Self {
        Self { precision, audit: None }
    }

    pub fn audited(precision: Precision, audit: &'a MonotoneAudit) -> Self {
        Self { precision, audit: Some(audit) }
    }

    pub fn with_precision(self, precision: Precision) -> Self {
        Self { precision, ..self }
    }

    pub fn per_stage(self, stages: usize) -> Self {
        self.with_precision(self.precision.per_stage(stages))
    }

    pub fn divide(self, d: f64) -> Self {
        self.with_precision(self.precision.divide(d))
    }

    /// Sums `probe(0..len)` assuming the sequence is monotone in `dir`.
    #[inline]
    pub fn monotone_sum(&self, len: usize, dir: Direction, probe: impl FnMut(usize) -> f64) -> f64 {
        if len == 0 {
            return 0.0;
        }
        let mut acc = FnAccess { len, dir, probe };
        match self.audit {
            Some(audit) => audit.checked_sum(&mut acc),
            None => approx_monotone_sum(&mut acc, self.precision),
        }
    }
}
