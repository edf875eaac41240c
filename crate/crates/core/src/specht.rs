//! Shifted Specht polynomials, the standard basis, and straightening.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{FieldSpec, Scalar};
use crate::combin::index_subsets;
use crate::error::{Error, Result};
use crate::poly::{vandermonde, ExactMatrix, Monomial, Polynomial};
use crate::poly::polynomial::{linear_difference, squarefree_monomial};
use crate::tableaux::{enumerate_standard, ShiftedShape, Tableau};

/// `F_T(d) = prod_t (x_{i_t} - x_{j_t}) * x_{i_{k+1}} ... x_{i_d}`, read from the tableau as given.
pub fn specht_polynomial(t: &Tableau, field: FieldSpec) -> Polynomial {
    let n = t.shape().n;
    let mut f = squarefree_monomial(t.free_top(), n, field);
    for (i, j) in t.pairs() {
        f = &f * &linear_difference(i, j, n, field);
    }
    f
}

/// Product of the column Vandermondes of a filling of the partition `lambda`.
/// `rows[r]` lists row `r` left to right.
pub fn general_specht_polynomial(lambda: &[usize], rows: &[Vec<usize>], field: FieldSpec) -> Result<Polynomial> {
    if lambda.windows(2).any(|w| w[0] < w[1]) || lambda.contains(&0) {
        return Err(Error::InvalidFilling(format!("{lambda:?} is not a partition")));
    }
    if rows.len() != lambda.len() || rows.iter().zip(lambda).any(|(r, &l)| r.len() != l) {
        return Err(Error::InvalidFilling("row lengths differ from the partition".into()));
    }
    let n: usize = lambda.iter().sum();
    let mut seen = vec![false; n + 1];
    for &v in rows.iter().flatten() {
        if v == 0 || v > n || seen[v] {
            return Err(Error::InvalidFilling(format!("entries must be a permutation of 1..={n}")));
        }
        seen[v] = true;
    }
    let mut f = Polynomial::one(field, n);
    for c in 0..lambda.first().copied().unwrap_or(0) {
        let col: Vec<usize> = rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect();
        f = &f * &vandermonde(&col, n, field)?;
    }
    Ok(f)
}

/// A vector of `V(n,k,d)` in coordinates over the standard basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpechtVector {
    pub shape: ShiftedShape,
    pub field: FieldSpec,
    pub coords: BTreeMap<Tableau, Scalar>,
}

impl SpechtVector {
    pub fn zero(shape: ShiftedShape, field: FieldSpec) -> Self {
        SpechtVector {
            shape,
            field,
            coords: BTreeMap::new(),
        }
    }

    pub fn unit(t: Tableau, field: FieldSpec) -> Self {
        let mut v = SpechtVector::zero(t.shape(), field);
        v.coords.insert(t, field.one());
        v
    }

    fn add_to(&mut self, t: Tableau, c: Scalar) {
        let e = self.coords.entry(t).or_insert_with(|| self.field.zero());
        *e = &*e + &c;
        if e.is_zero() {
            self.coords.retain(|_, v| !v.is_zero());
        }
    }

    /// `sum_T c_T F_T(d)`.
    pub fn expand(&self) -> Polynomial {
        let mut f = Polynomial::zero(self.field, self.shape.n);
        for (t, c) in &self.coords {
            f = &f + &specht_polynomial(t, self.field).scale(c);
        }
        f
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

/// The standard tableaux of a shape with their polynomials and coefficient matrix.
#[derive(Debug, Clone)]
pub struct SpechtModuleBasis {
    pub shape: ShiftedShape,
    pub field: FieldSpec,
    pub tableaux: Vec<Tableau>,
    pub polynomials: Vec<Polynomial>,
    /// Rows indexed by the square-free degree-`d` monomials, columns by basis elements.
    pub matrix: ExactMatrix,
}

impl SpechtModuleBasis {
    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    /// Coordinates of a polynomial of `V(n,k,d)`, or `None` if it lies outside.
    pub fn coordinates(&self, f: &Polynomial) -> Result<Option<SpechtVector>> {
        let v = squarefree_coordinates(f, self.shape.n, self.shape.d)?;
        let Some(v) = v else { return Ok(None) };
        let Some(x) = self.matrix.solve(&v)? else {
            return Ok(None);
        };
        let mut out = SpechtVector::zero(self.shape, self.field);
        for (t, c) in self.tableaux.iter().zip(x) {
            if !c.is_zero() {
                out.coords.insert(t.clone(), c);
            }
        }
        Ok(Some(out))
    }
}

/// Coordinates of `f` over the square-free degree-`d` monomials, ordered as `index_subsets(n, d)`.
/// `None` when `f` has any other term.
pub fn squarefree_coordinates(f: &Polynomial, n: usize, d: usize) -> Result<Option<Vec<Scalar>>> {
    if f.nvars() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: f.nvars(),
        });
    }
    if f.terms().any(|(m, _)| m.degree() as usize != d || !m.is_squarefree()) {
        return Ok(None);
    }
    Ok(Some(
        index_subsets(n, d)
            .iter()
            .map(|s| f.coefficient(&Monomial::squarefree(n, s)))
            .collect(),
    ))
}

pub fn module_basis(shape: ShiftedShape, field: FieldSpec) -> SpechtModuleBasis {
    let tableaux = enumerate_standard(shape);
    let polynomials: Vec<Polynomial> = tableaux.iter().map(|t| specht_polynomial(t, field)).collect();
    let cols: Vec<Vec<Scalar>> = polynomials
        .iter()
        .map(|f| squarefree_coordinates(f, shape.n, shape.d).unwrap().expect("square-free of degree d"))
        .collect();
    let rows = index_subsets(shape.n, shape.d).len();
    let matrix = ExactMatrix::from_columns(field, rows, &cols).expect("consistent column lengths");
    SpechtModuleBasis {
        shape,
        field,
        tableaux,
        polynomials,
        matrix,
    }
}

/// The next rewrite of a column-sorted, non-standard tableau: `F_T = F_{T'} + F_{T''}` on raw
/// tableaux, or `F_T = F_{T'}` when only one successor is given.
fn rewrite(t: &Tableau) -> (Tableau, Option<Tableau>) {
    let s = t.shape().single_columns();
    let k = t.shape().k;
    let top = t.top();
    let bottom = t.bottom();
    for p in 0..bottom.len().saturating_sub(1) {
        if bottom[p] < bottom[p + 1] {
            continue;
        }
        let (u, w) = (bottom[p], bottom[p + 1]);
        if p + 1 < s {
            return (t.transpose_entries(u, w), None);
        }
        if p + 1 == s {
            let above = top[0];
            return (t.transpose_entries(u, w), Some(t.transpose_entries(above, u)));
        }
        let b = p - s;
        let (r, q, sv) = (top[b + 1], w.max(u), w.min(u));
        debug_assert_eq!(q, bottom[s + b]);
        return (t.transpose_entries(r, q), Some(t.transpose_entries(sv, q)));
    }
    for q in 0..top.len().saturating_sub(1) {
        if top[q] < top[q + 1] {
            continue;
        }
        let (p_, r) = (top[q], top[q + 1]);
        if q + 1 < k {
            let below = bottom[s + q];
            return (t.transpose_entries(r, below), Some(t.transpose_entries(r, p_)));
        }
        if q + 1 == k {
            let below = bottom[s + q];
            return (t.transpose_entries(r, p_), Some(t.transpose_entries(r, below)));
        }
        return (t.transpose_entries(p_, r), None);
    }
    unreachable!("a column-sorted tableau without row descents is standard")
}

type Coords = BTreeMap<Tableau, BigInt>;

/// Straightening with a memo table shared across calls on the same shape.
#[derive(Default)]
pub struct Straightener {
    memo: HashMap<Tableau, Coords>,
}

impl Straightener {
    pub fn new() -> Self {
        Straightener::default()
    }

    /// Integer coordinates of `F_T(d)` over the standard tableaux.
    pub fn straighten_integral(&mut self, t: &Tableau) -> Result<Coords> {
        let (c, sign) = t.sort_columns();
        let limit = factorial_capped(t.shape().n);
        let mut out = self.canonical(&c, 0, limit)?;
        if sign < 0 {
            for v in out.values_mut() {
                *v = -&*v;
            }
        }
        Ok(out)
    }

    fn canonical(&mut self, t: &Tableau, depth: usize, limit: usize) -> Result<Coords> {
        if let Some(hit) = self.memo.get(t) {
            return Ok(hit.clone());
        }
        if depth > limit {
            return Err(Error::NonTermination(limit));
        }
        let result = if t.is_standard() {
            BTreeMap::from([(t.clone(), BigInt::one())])
        } else {
            let (a, b) = rewrite(t);
            let mut acc = Coords::new();
            for raw in std::iter::once(a).chain(b) {
                let (c, sign) = raw.sort_columns();
                for (key, v) in self.canonical(&c, depth + 1, limit)? {
                    let e = acc.entry(key).or_insert_with(BigInt::zero);
                    *e += v * sign;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            acc
        };
        self.memo.insert(t.clone(), result.clone());
        Ok(result)
    }

    pub fn straighten(&mut self, t: &Tableau, field: FieldSpec) -> Result<SpechtVector> {
        let coords = self.straighten_integral(t)?;
        let mut v = SpechtVector::zero(t.shape(), field);
        for (key, c) in coords {
            v.add_to(key, field.from_bigint(&c));
        }
        Ok(v)
    }
}

fn factorial_capped(n: usize) -> usize {
    (1..=n).fold(1usize, |acc, i| acc.saturating_mul(i))
}

/// Writes `F_T(d)` over the standard basis by the rewriting rules.
pub fn straighten(t: &Tableau, field: FieldSpec) -> Result<SpechtVector> {
    Straightener::new().straighten(t, field)
}

/// Straightening by solving against the coefficient matrix of the basis.
pub fn straighten_by_solving(t: &Tableau, basis: &SpechtModuleBasis) -> Result<SpechtVector> {
    if t.shape() != basis.shape {
        return Err(Error::ShapeMismatch);
    }
    let f = specht_polynomial(t, basis.field);
    basis
        .coordinates(&f)?
        .ok_or_else(|| Error::InvalidTableau("polynomial outside the module".into()))
}

/// The substitution `x_i -> x_n - x_i` for `i < n`, `x_n -> x_n`.
pub fn phi_images(n: usize, field: FieldSpec) -> Vec<Polynomial> {
    (1..=n)
        .map(|i| {
            if i < n {
                linear_difference(n, i, n, field)
            } else {
                Polynomial::var(field, n, n).expect("index in range")
            }
        })
        .collect()
}

pub fn phi_map(f: &Polynomial, n: usize) -> Result<Polynomial> {
    f.substitute(&phi_images(n, f.field()))
}

/// For `T` in `STab(n,k,k)`: the tableau in `STab(n-1,k-1,k)` with the cell holding `n` removed.
pub fn delete_max(t: &Tableau) -> Result<Tableau> {
    let s = t.shape();
    if s.d != s.k || s.k == 0 || t.bottom().last() != Some(&s.n) {
        return Err(Error::InvalidTableau(format!("{t} does not end in {} below the top row", s.n)));
    }
    let shape = ShiftedShape::new(s.n - 1, s.k - 1, s.k)?;
    Tableau::new(shape, t.top().to_vec(), t.bottom()[..t.bottom().len() - 1].to_vec())
}

/// For tableaux whose top row starts with `1..=m`: delete those cells and relabel `v -> v - m`.
pub fn restrict_tableau(t: &Tableau, m: usize) -> Result<Tableau> {
    let s = t.shape();
    if m > s.d || t.top()[..m].iter().copied().ne(1..=m) {
        return Err(Error::SupportViolation(m));
    }
    let shape = ShiftedShape::new(s.n - m, s.k.saturating_sub(m), s.d - m)?;
    let top = t.top()[m..].iter().map(|v| v - m).collect();
    let bottom = t.bottom().iter().map(|v| v - m).collect();
    Tableau::new(shape, top, bottom)
}

/// The injection `V_m(n,k,d) -> V(n-m, k-m, d-m)`, `F_T(d) -> F_{T'}(d-m)`. The target is written
/// on the variables `1..=n-m`, standing for `x_{m+1}..x_n`.
pub fn restrict_support(v: &SpechtVector, m: usize) -> Result<SpechtVector> {
    let s = v.shape;
    if m > s.d {
        return Err(Error::SupportViolation(m));
    }
    let shape = ShiftedShape::new(s.n - m, s.k.saturating_sub(m), s.d - m)?;
    let mut out = SpechtVector::zero(shape, v.field);
    for (t, c) in &v.coords {
        out.coords.insert(restrict_tableau(t, m)?, c.clone());
    }
    Ok(out)
}
