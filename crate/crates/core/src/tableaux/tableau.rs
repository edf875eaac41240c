use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combin::index_subsets;
use crate::error::{Error, Result};

use super::shape::ShiftedShape;

/// A filling of a shifted shape by `1..=n`.
///
/// `top` is `(i_1..i_d)`, `bottom` is `(i_{d+1}..i_{n-k}, j_1..j_k)`; the cell `j_t` sits
/// below `i_t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    shape: ShiftedShape,
    top: Vec<usize>,
    bottom: Vec<usize>,
}

/// One column of a tableau, read top to bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    Bottom(usize),
    Pair(usize, usize),
    Top(usize),
}

impl Column {
    pub fn cells(&self) -> Vec<usize> {
        match *self {
            Column::Bottom(a) | Column::Top(a) => vec![a],
            Column::Pair(a, b) => vec![a, b],
        }
    }
}

impl Tableau {
    pub fn new(shape: ShiftedShape, top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        if top.len() != shape.d || bottom.len() != shape.bottom_len() {
            return Err(Error::InvalidTableau(format!(
                "shape {shape} needs rows of length {} and {}",
                shape.d,
                shape.bottom_len()
            )));
        }
        let mut seen = vec![false; shape.n + 1];
        for &v in top.iter().chain(&bottom) {
            if v == 0 || v > shape.n || seen[v] {
                return Err(Error::InvalidTableau(format!(
                    "entries must be a permutation of 1..={}",
                    shape.n
                )));
            }
            seen[v] = true;
        }
        Ok(Tableau { shape, top, bottom })
    }

    pub(crate) fn new_unchecked(shape: ShiftedShape, top: Vec<usize>, bottom: Vec<usize>) -> Self {
        Tableau { shape, top, bottom }
    }

    /// The tableau with the given top row and the complement, sorted, as bottom row.
    pub fn from_top_row(shape: ShiftedShape, top: &[usize]) -> Result<Self> {
        let bottom = (1..=shape.n).filter(|v| !top.contains(v)).collect();
        Tableau::new(shape, top.to_vec(), bottom)
    }

    pub fn shape(&self) -> ShiftedShape {
        self.shape
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    /// `j_t` for `t` in `1..=k`.
    pub fn j(&self, t: usize) -> usize {
        self.bottom[self.shape.single_columns() + t - 1]
    }

    /// The `(i_t, j_t)` pairs of the two-cell columns.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.shape.k).map(|t| (self.top[t - 1], self.j(t))).collect()
    }

    /// Top-row entries without a cell below them.
    pub fn free_top(&self) -> &[usize] {
        &self.top[self.shape.k..]
    }

    /// Columns left to right.
    pub fn columns(&self) -> Vec<Column> {
        let s = self.shape.single_columns();
        let mut cols: Vec<Column> = self.bottom[..s].iter().map(|&a| Column::Bottom(a)).collect();
        for t in 1..=self.shape.d {
            if t <= self.shape.k {
                cols.push(Column::Pair(self.top[t - 1], self.j(t)));
            } else {
                cols.push(Column::Top(self.top[t - 1]));
            }
        }
        cols
    }

    /// Entries in or right of a two-cell column.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.top.iter().copied().chain((1..=self.shape.k).map(|t| self.j(t))).collect();
        s.sort_unstable();
        s
    }

    /// Entries not in the top row, sorted.
    pub fn complement_of_top(&self) -> Vec<usize> {
        let mut c = self.bottom.clone();
        c.sort_unstable();
        c
    }

    pub fn is_standard(&self) -> bool {
        self.top.windows(2).all(|w| w[0] < w[1])
            && self.bottom.windows(2).all(|w| w[0] < w[1])
            && self.pairs().iter().all(|(i, j)| i < j)
    }

    /// Applies the transposition `(a b)` to the entries.
    pub fn transpose_entries(&self, a: usize, b: usize) -> Tableau {
        let sw = |v: usize| if v == a { b } else if v == b { a } else { v };
        Tableau {
            shape: self.shape,
            top: self.top.iter().map(|&v| sw(v)).collect(),
            bottom: self.bottom.iter().map(|&v| sw(v)).collect(),
        }
    }

    /// Relabels every entry through `perm`, where `perm[v-1]` is the image of `v`.
    pub fn permute(&self, perm: &[usize]) -> Tableau {
        Tableau {
            shape: self.shape,
            top: self.top.iter().map(|&v| perm[v - 1]).collect(),
            bottom: self.bottom.iter().map(|&v| perm[v - 1]).collect(),
        }
    }

    /// Sorts every two-cell column increasing; returns the tableau and the sign `(-1)^swaps`.
    pub fn sort_columns(&self) -> (Tableau, i64) {
        let mut t = self.clone();
        let mut sign = 1;
        let s = self.shape.single_columns();
        for c in 0..self.shape.k {
            if t.top[c] > t.bottom[s + c] {
                std::mem::swap(&mut t.top[c], &mut t.bottom[s + c]);
                sign = -sign;
            }
        }
        (t, sign)
    }

    /// `gamma^a_b`: number of entries `<= a` in column `b` (both 1-based).
    pub fn composition_entry(&self, a: usize, b: usize) -> u8 {
        self.columns()[b - 1].cells().iter().filter(|&&c| c <= a).count() as u8
    }

    /// The matrix with rows indexed by columns `b` and columns by thresholds `a = 1..=n`.
    pub fn composition_series(&self) -> Vec<Vec<u8>> {
        self.columns()
            .iter()
            .map(|col| {
                let cells = col.cells();
                (1..=self.shape.n)
                    .map(|a| cells.iter().filter(|&&c| c <= a).count() as u8)
                    .collect()
            })
            .collect()
    }

    /// `self ⊴ other`: every composition vector of `other` dominates the matching one of `self`.
    pub fn dominates(&self, other: &Tableau) -> Result<bool> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch);
        }
        let g = self.composition_series();
        let h = other.composition_series();
        for a in 0..self.shape.n {
            let (mut sg, mut sh) = (0i32, 0i32);
            for b in 0..g.len() {
                sg += g[b][a] as i32;
                sh += h[b][a] as i32;
                if sh < sg {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The tableau filling the columns left to right with `1..=n`, the maximum of the order.
    pub fn column_filling(shape: ShiftedShape) -> Tableau {
        let mut top = Vec::new();
        let mut bottom = vec![0; shape.bottom_len()];
        let mut next = 1;
        let s = shape.single_columns();
        for slot in bottom.iter_mut().take(s) {
            *slot = next;
            next += 1;
        }
        for t in 0..shape.d {
            top.push(next);
            next += 1;
            if t < shape.k {
                bottom[s + t] = next;
                next += 1;
            }
        }
        Tableau::new_unchecked(shape, top, bottom)
    }
}

/// The standard tableaux of `shape`, ordered lexicographically by top row.
pub fn enumerate_standard(shape: ShiftedShape) -> Vec<Tableau> {
    index_subsets(shape.n, shape.d)
        .into_iter()
        .filter(|top| satisfies_row_condition(shape, top))
        .map(|top| Tableau::from_top_row(shape, &top).expect("valid top row"))
        .collect()
}

/// For each `t <= k`, at least `t` non-top entries exceed `i_{k+1-t}`.
fn satisfies_row_condition(shape: ShiftedShape, top: &[usize]) -> bool {
    (1..=shape.k).all(|t| {
        let it = top[shape.k - t];
        let above = (it + 1..=shape.n).filter(|v| !top.contains(v)).count();
        above >= t
    })
}

pub fn is_standard(t: &Tableau) -> bool {
    t.is_standard()
}

pub fn composition_series(t: &Tableau) -> Vec<Vec<u8>> {
    t.composition_series()
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "top={};bottom={}", join(&self.top), join(&self.bottom))
    }
}

/// Parses `top=...;bottom=...`. The text form does not determine `k`, so the caller supplies it.
pub fn parse_tableau(s: &str, k: usize) -> Result<Tableau> {
    let bad = || Error::InvalidTableau(format!("expected `top=..;bottom=..`, got {s:?}"));
    let mut top = None;
    let mut bottom = None;
    for part in s.split(';') {
        let (key, val) = part.split_once('=').ok_or_else(bad)?;
        let nums: Result<Vec<usize>> = val
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|_| bad()))
            .collect();
        match key.trim() {
            "top" => top = Some(nums?),
            "bottom" => bottom = Some(nums?),
            _ => return Err(bad()),
        }
    }
    let (top, bottom) = (top.ok_or_else(bad)?, bottom.ok_or_else(bad)?);
    let n = top.len() + bottom.len();
    let shape = ShiftedShape::new(n, k, top.len())?;
    Tableau::new(shape, top, bottom)
}

impl FromStr for ShiftedShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let nums: Vec<i64> = s
            .trim_matches(|c| c == '(' || c == ')')
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::InvalidShape { n: -1, k: -1, d: -1 })?;
        match nums[..] {
            [n, k, d] => ShiftedShape::from_signed(n, k, d),
            _ => Err(Error::InvalidShape { n: -1, k: -1, d: -1 }),
        }
    }
}
