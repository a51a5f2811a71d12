use std::cmp::Ordering;
use std::fmt;

/// A real number extended with both infinities.
///
/// Generalized inverses use `inf ∅ = +∞`, so quantile evaluation returns this
/// type instead of a bare `f64`. NaN is not representable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedReal {
    NegInfinity,
    Finite(f64),
    PosInfinity,
}

impl ExtendedReal {
    /// Wraps an `f64`, mapping `±inf` to the matching variant. Returns `None` for NaN.
    pub fn from_f64(x: f64) -> Option<Self> {
        if x.is_nan() {
            None
        } else if x == f64::INFINITY {
            Some(ExtendedReal::PosInfinity)
        } else if x == f64::NEG_INFINITY {
            Some(ExtendedReal::NegInfinity)
        } else {
            Some(ExtendedReal::Finite(x))
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedReal::Finite(_))
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            ExtendedReal::Finite(x) => Some(x),
            _ => None,
        }
    }

    /// Lossy conversion back to `f64` (infinities map to `±inf`).
    pub fn to_f64(self) -> f64 {
        match self {
            ExtendedReal::NegInfinity => f64::NEG_INFINITY,
            ExtendedReal::Finite(x) => x,
            ExtendedReal::PosInfinity => f64::INFINITY,
        }
    }
}

impl Eq for ExtendedReal {}

impl PartialOrd for ExtendedReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedReal {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedReal::*;
        match (self, other) {
            (NegInfinity, NegInfinity) | (PosInfinity, PosInfinity) => Ordering::Equal,
            (NegInfinity, _) | (_, PosInfinity) => Ordering::Less,
            (_, NegInfinity) | (PosInfinity, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.total_cmp(b),
        }
    }
}

impl From<f64> for ExtendedReal {
    /// Panics on NaN.
    fn from(x: f64) -> Self {
        ExtendedReal::from_f64(x).expect("NaN is not an extended real")
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::NegInfinity => write!(f, "-inf"),
            ExtendedReal::Finite(x) => write!(f, "{x}"),
            ExtendedReal::PosInfinity => write!(f, "+inf"),
        }
    }
}
