use std::fmt;

use crate::arith::is_prime;
use crate::error::{invalid, Result};

/// A place of `Q`: the real place or a finite prime.
///
/// Ordering puts the real place first, then primes ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Real,
    Finite(u64),
}

impl Place {
    pub fn finite(p: u64) -> Result<Place> {
        if !is_prime(p as u128) {
            return invalid(format!("{p} is not prime"));
        }
        Ok(Place::Finite(p))
    }

    pub fn prime(self) -> Option<u64> {
        match self {
            Place::Real => None,
            Place::Finite(p) => Some(p),
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, Place::Real)
    }

    /// Order of the full root-of-unity group of `Q_v`.
    pub fn roots_of_unity(self) -> u64 {
        match self {
            Place::Real | Place::Finite(2) => 2,
            Place::Finite(p) => p - 1,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "inf"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}
