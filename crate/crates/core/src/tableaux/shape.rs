use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::binomial_u64;
use crate::error::{Error, Result};

/// The two-row shifted shape for `(n, k, d)` with `0 <= k <= d <= n - k`.
///
/// The bottom row has `n - d` cells in columns `1..=n-d`; the top row has `d` cells in
/// columns `n-k-d+1..=n-k`. Exactly `k` columns hold two cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShiftedShape {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl ShiftedShape {
    pub fn new(n: usize, k: usize, d: usize) -> Result<Self> {
        if k <= d && d + k <= n {
            Ok(ShiftedShape { n, k, d })
        } else {
            Err(Error::InvalidShape {
                n: n as i64,
                k: k as i64,
                d: d as i64,
            })
        }
    }

    pub fn from_signed(n: i64, k: i64, d: i64) -> Result<Self> {
        if n < 0 || k < 0 || d < 0 {
            return Err(Error::InvalidShape { n, k, d });
        }
        ShiftedShape::new(n as usize, k as usize, d as usize)
    }

    /// Every admissible shape with the given `n`.
    pub fn all(n: usize) -> Vec<ShiftedShape> {
        let mut out = Vec::new();
        for k in 0..=n / 2 {
            for d in k..=n - k {
                out.push(ShiftedShape { n, k, d });
            }
        }
        out
    }

    pub fn columns(&self) -> usize {
        self.n - self.k
    }

    /// Number of columns holding only a bottom cell.
    pub fn single_columns(&self) -> usize {
        self.n - self.k - self.d
    }

    pub fn bottom_len(&self) -> usize {
        self.n - self.d
    }

    /// `C(n,d) - C(n,k-1)`.
    pub fn standard_count(&self) -> u64 {
        binomial_u64(self.n as u64, self.d as i64) - binomial_u64(self.n as u64, self.k as i64 - 1)
    }
}

impl fmt::Display for ShiftedShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.k, self.d)
    }
}
