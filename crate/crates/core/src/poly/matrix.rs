use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Prime used for the modular rank screen over the rationals.
const SCREEN_PRIME: u64 = 2_147_483_647;

/// Dense matrix over a [`FieldSpec`], row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = ExactMatrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for x in row {
                if x.field() != field {
                    return Err(Error::FieldMismatch(field, x.field()));
                }
                data.push(x);
            }
        }
        Ok(ExactMatrix {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn from_i64_rows(field: FieldSpec, rows: &[Vec<i64>]) -> Result<Self> {
        ExactMatrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = ExactMatrix::zero(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let mut out = ExactMatrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect())
    }

    fn zip_with(&self, other: &ExactMatrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<ExactMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(ExactMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> ExactMatrix {
        ExactMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hcat(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hcat row counts differ".into()));
        }
        let mut out = ExactMatrix::zero(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        match self.field {
            FieldSpec::PrimeField(p) => rank_mod_p(self.residues(p), self.rows, self.cols, p),
            FieldSpec::Rationals => {
                let ints = self.integer_rows();
                let full = self.rows.min(self.cols);
                let screened = rank_mod_p(
                    ints.iter()
                        .flatten()
                        .map(|v| v.mod_floor(&BigInt::from(SCREEN_PRIME)).to_u64().unwrap())
                        .collect(),
                    self.rows,
                    self.cols,
                    SCREEN_PRIME,
                );
                if screened == full {
                    screened
                } else {
                    bareiss_rank(ints, self.cols)
                }
            }
        }
    }

    fn residues(&self, p: u64) -> Vec<u64> {
        self.data
            .iter()
            .map(|s| match s {
                Scalar::Residue { value, .. } => *value,
                Scalar::Rational(_) => unreachable!("rational entry in a matrix over fp:{p}"),
            })
            .collect()
    }

    /// Rows scaled by the lcm of their denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let rats: Vec<_> = row.iter().map(|s| s.as_rational().unwrap().clone()).collect();
                let l = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
                rats.iter().map(|r| r.numer() * (&l / r.denom())).collect()
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let b = m.get(r, j);
                    if !b.is_zero() {
                        let v = m.get(i, j) - &(&f * b);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// A basis of `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    /// Some `x` with `M x = v`, if one exists.
    pub fn solve(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                v.len(),
                self.rows
            )));
        }
        let aug = self.hcat(&ExactMatrix::from_columns(self.field, self.rows, &[v.to_vec()])?)?;
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn in_column_space(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} rows",
                v.len(),
                self.rows
            )));
        }
        let aug = self.hcat(&ExactMatrix::from_columns(self.field, self.rows, &[v.to_vec()])?)?;
        Ok(aug.rank() == self.rank())
    }

    /// Column space of `other` contained in that of `self`.
    pub fn column_space_contains(&self, other: &ExactMatrix) -> Result<bool> {
        Ok(self.hcat(other)?.rank() == self.rank())
    }

    pub fn column_space_equals(&self, other: &ExactMatrix) -> Result<bool> {
        let joint = self.hcat(other)?.rank();
        Ok(joint == self.rank() && joint == other.rank())
    }
}

fn rank_mod_p(mut a: Vec<u64>, rows: usize, cols: usize, p: u64) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                a.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = inv_mod(a[r * cols + c], p);
        for j in c..cols {
            a[r * cols + j] = a[r * cols + j] * inv % p;
        }
        for i in r + 1..rows {
            let f = a[i * cols + c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = f * a[r * cols + j] % p;
                a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
            }
        }
        r += 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    FieldSpec::PrimeField(p)
        .from_i64(a as i64)
        .inv()
        .ok()
        .and_then(|s| s.to_i64())
        .expect("invertible") as u64
}

/// Fraction-free Gaussian elimination.
fn bareiss_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(pr, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn matrix_rank(m: &ExactMatrix) -> usize {
    m.rank()
}

pub fn matrix_kernel(m: &ExactMatrix) -> Vec<Vec<Scalar>> {
    m.kernel()
}

pub fn in_column_space(m: &ExactMatrix, v: &[Scalar]) -> Result<bool> {
    m.in_column_space(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::index_subsets;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn identity_rank() {
        assert_eq!(ExactMatrix::identity(Q, 3).rank(), 3);
    }

    #[test]
    fn zero_kernel() {
        let z = ExactMatrix::zero(Q, 2, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel().len(), 3);
    }

    #[test]
    fn derivative_incidence_n4() {
        // D: A_2 -> A_1 for n = 4; rows singletons, columns pairs, entry 1 when contained.
        let singles = index_subsets(4, 1);
        let pairs = index_subsets(4, 2);
        let rows: Vec<Vec<i64>> = singles
            .iter()
            .map(|s| pairs.iter().map(|p| p.contains(&s[0]) as i64).collect())
            .collect();
        let m = ExactMatrix::from_i64_rows(Q, &rows).unwrap();
        assert_eq!(m.rows(), 4);
        assert_eq!(m.cols(), 6);
        assert_eq!(m.rank(), 4);
        // mod 2 the row sum vanishes: each pair lies over exactly two singletons
        let m2 = ExactMatrix::from_i64_rows(FieldSpec::PrimeField(2), &rows).unwrap();
        assert_eq!(m2.rank(), 3);
    }

    #[test]
    fn screen_falls_back_to_bareiss() {
        let p = SCREEN_PRIME as i64;
        let m = ExactMatrix::from_i64_rows(Q, &[vec![p, 0], vec![0, 0]]).unwrap();
        assert_eq!(m.rank(), 1);
        let m = ExactMatrix::from_i64_rows(Q, &[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, p]]).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn dimension_errors() {
        let a = ExactMatrix::zero(Q, 2, 3);
        assert!(matches!(a.mul(&a), Err(Error::DimensionMismatch(_))));
        assert!(matches!(a.in_column_space(&[Q.one()]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn solve_and_membership() {
        let m = ExactMatrix::from_i64_rows(Q, &[vec![1, 1], vec![0, 2], vec![1, 3]]).unwrap();
        let v: Vec<_> = [3, 4, 7].iter().map(|&x| Q.from_i64(x)).collect();
        let x = m.solve(&v).unwrap().unwrap();
        assert_eq!(m.apply(&x).unwrap(), v);
        let w: Vec<_> = [1, 0, 0].iter().map(|&x| Q.from_i64(x)).collect();
        assert!(m.solve(&w).unwrap().is_none());
        assert!(!m.in_column_space(&w).unwrap());
    }

    fn arb_matrix() -> impl Strategy<Value = (FieldSpec, Vec<Vec<i64>>)> {
        (
            prop_oneof![Just(Q), Just(FieldSpec::PrimeField(2)), Just(FieldSpec::PrimeField(5))],
            1usize..6,
            1usize..6,
        )
            .prop_flat_map(|(f, r, c)| {
                (Just(f), prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
            })
    }

    proptest! {
        #[test]
        fn kernel_is_annihilated((f, rows) in arb_matrix()) {
            let m = ExactMatrix::from_i64_rows(f, &rows).unwrap();
            let k = m.kernel();
            prop_assert_eq!(k.len() + m.rank(), m.cols());
            for v in &k {
                prop_assert!(m.apply(v).unwrap().iter().all(Scalar::is_zero));
            }
            prop_assert_eq!(m.rank(), m.transpose().rank());
            prop_assert_eq!(m.rank(), m.rref().1.len());
        }
    }
}
