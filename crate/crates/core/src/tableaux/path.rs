use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::arith::binomial;
use crate::error::{Error, Result};

use super::shape::ShiftedShape;
use super::tableau::Tableau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    N,
    E,
}

/// A north-east lattice path starting at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn end(&self) -> (i64, i64) {
        let n = self.steps.iter().filter(|&&s| s == Step::N).count() as i64;
        (self.steps.len() as i64 - n, n)
    }

    /// Every lattice point visited, starting with the origin.
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut p = (0, 0);
        let mut out = vec![p];
        for s in &self.steps {
            match s {
                Step::N => p.1 += 1,
                Step::E => p.0 += 1,
            }
            out.push(p);
        }
        out
    }

    /// All points satisfy `y - x <= c`.
    pub fn stays_below(&self, c: i64) -> bool {
        self.points().iter().all(|&(x, y)| y - x <= c)
    }

    /// Every path with the given numbers of E- and N-steps.
    pub fn all(east: usize, north: usize) -> Vec<LatticePath> {
        let total = east + north;
        crate::combin::index_subsets(total, north)
            .into_iter()
            .map(|ns| LatticePath {
                steps: (1..=total)
                    .map(|i| if ns.contains(&i) { Step::N } else { Step::E })
                    .collect(),
            })
            .collect()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", if *s == Step::N { 'N' } else { 'E' })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'N' | 'n' => Ok(Step::N),
                'E' | 'e' => Ok(Step::E),
                _ => Err(Error::Parse {
                    pos: 0,
                    msg: format!("unexpected step {c:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(|steps| LatticePath { steps })
    }
}

/// Step `i` (from 1) carries label `n - i + 1`; N-labels fill the top row, E-labels the bottom
/// row, each right to left.
pub fn path_to_tableau(path: &LatticePath, shape: ShiftedShape) -> Result<Tableau> {
    if path.end() != ((shape.n - shape.d) as i64, shape.d as i64) {
        return Err(Error::EndpointMismatch);
    }
    let n = shape.n;
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for (i, s) in path.steps.iter().enumerate() {
        let label = n - i;
        match s {
            Step::N => top.push(label),
            Step::E => bottom.push(label),
        }
    }
    top.reverse();
    bottom.reverse();
    Tableau::new(shape, top, bottom)
}

/// Inverse of [`path_to_tableau`] on tableaux with increasing rows.
pub fn tableau_to_path(t: &Tableau) -> LatticePath {
    let n = t.shape().n;
    LatticePath {
        steps: (1..=n)
            .map(|i| if t.top().contains(&(n - i + 1)) { Step::N } else { Step::E })
            .collect(),
    }
}

/// Number of NE paths between two points.
pub fn count_paths(from: (i64, i64), to: (i64, i64)) -> Result<BigInt> {
    let (dx, dy) = (to.0 - from.0, to.1 - from.1);
    if dx < 0 || dy < 0 {
        return Err(Error::InvalidEndpoints);
    }
    Ok(binomial((dx + dy) as u64, dy))
}

/// Paths from `from` to `to` that touch or cross `y = x + c`, by reflecting the start point.
/// Both endpoints must lie strictly below the line.
pub fn count_touching(from: (i64, i64), to: (i64, i64), c: i64) -> Result<BigInt> {
    if from.1 - from.0 >= c || to.1 - to.0 >= c {
        return Err(Error::InvalidEndpoints);
    }
    let reflected = (from.1 - c, from.0 + c);
    if to.0 < reflected.0 || to.1 < reflected.1 {
        return Ok(BigInt::from(0));
    }
    count_paths(reflected, to)
}

/// Paths from the origin to `(n-d, d)` staying weakly below `y = x + (d-k)`.
pub fn count_subdiagonal(shape: ShiftedShape) -> BigInt {
    let to = ((shape.n - shape.d) as i64, shape.d as i64);
    let c = (shape.d - shape.k) as i64 + 1;
    let all = count_paths((0, 0), to).expect("valid endpoints");
    if to.1 - to.0 >= c {
        return BigInt::from(0);
    }
    all - count_touching((0, 0), to, c).expect("endpoints below the line")
}
