//! The operators D, L, H on `A = F[x_1..x_n]/(x_1^2..x_n^2)` and Lefschetz rank tests.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::{binomial_u64, FieldSpec, Scalar};
use crate::combin::index_subsets;
use crate::error::{Error, Result};
use crate::poly::{elementary_symmetric, ExactMatrix, Polynomial};
use crate::specht::{module_basis, specht_polynomial, squarefree_coordinates};
use crate::tableaux::{enumerate_standard, ShiftedShape};

/// Graded pieces of `A`, each with its basis of square-free monomials.
#[derive(Debug, Clone)]
pub struct SquareFreeAlgebra {
    pub n: usize,
    pub field: FieldSpec,
    bases: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    D,
    L,
    H,
    LPower(usize),
}

/// A linear map between graded pieces, as a matrix in monomial bases.
#[derive(Debug, Clone)]
pub struct GradedOperator {
    pub kind: OperatorKind,
    pub source: usize,
    /// `None` when the target degree falls outside `0..=n`; the matrix then has no rows.
    pub target: Option<usize>,
    pub matrix: ExactMatrix,
}

impl SquareFreeAlgebra {
    pub fn new(n: usize, field: FieldSpec) -> Self {
        let bases: Vec<Vec<Vec<usize>>> = (0..=n).map(|i| index_subsets(n, i)).collect();
        let index = bases
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        SquareFreeAlgebra { n, field, bases, index }
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.bases.get(degree).map_or(0, Vec::len)
    }

    pub fn basis(&self, degree: usize) -> &[Vec<usize>] {
        &self.bases[degree]
    }

    /// Coordinates of a square-free homogeneous polynomial of degree `degree`.
    pub fn coordinates(&self, f: &Polynomial, degree: usize) -> Result<Vec<Scalar>> {
        squarefree_coordinates(f, self.n, degree)?
            .ok_or_else(|| Error::DimensionMismatch(format!("polynomial is not in A_{degree}")))
    }

    pub fn polynomial(&self, v: &[Scalar], degree: usize) -> Polynomial {
        let mut f = Polynomial::zero(self.field, self.n);
        for (s, c) in self.bases[degree].iter().zip(v) {
            f = &f + &crate::poly::polynomial::squarefree_monomial(s, self.n, self.field).scale(c);
        }
        f
    }

    /// Matrix of `x_S -> c * sum of x_T` over `T` containing `S` with `|T| = |S| + m`.
    fn raising(&self, degree: usize, m: usize, c: &Scalar) -> ExactMatrix {
        let rows = self.dim(degree + m);
        let mut mat = ExactMatrix::zero(self.field, rows, self.dim(degree));
        if rows == 0 {
            return mat;
        }
        for (j, s) in self.bases[degree].iter().enumerate() {
            let rest: Vec<usize> = (1..=self.n).filter(|v| !s.contains(v)).collect();
            for add in index_subsets(rest.len(), m) {
                let mut t = s.clone();
                t.extend(add.iter().map(|&i| rest[i - 1]));
                t.sort_unstable();
                mat.set(self.index[degree + m][&t], j, c.clone());
            }
        }
        mat
    }

    pub fn operator_matrix(&self, kind: OperatorKind, degree: usize) -> Result<GradedOperator> {
        if degree > self.n {
            return Err(Error::DegreeOutOfRange { degree, n: self.n });
        }
        let one = self.field.one();
        let (target, matrix) = match kind {
            OperatorKind::L => ((degree < self.n).then_some(degree + 1), self.raising(degree, 1, &one)),
            OperatorKind::LPower(m) => {
                let fact = (1..=m as u64).fold(BigInt::from(1), |a, i| a * i);
                (
                    (degree + m <= self.n).then_some(degree + m),
                    self.raising(degree, m, &self.field.from_bigint(&fact)),
                )
            }
            OperatorKind::D => {
                if degree == 0 {
                    (None, ExactMatrix::zero(self.field, 0, 1))
                } else {
                    (Some(degree - 1), self.raising(degree - 1, 1, &one).transpose())
                }
            }
            OperatorKind::H => {
                let c = self.field.from_i64(self.n as i64 - 2 * degree as i64);
                (Some(degree), ExactMatrix::identity(self.field, self.dim(degree)).scale(&c))
            }
        };
        Ok(GradedOperator {
            kind,
            source: degree,
            target,
            matrix,
        })
    }

    fn op(&self, kind: OperatorKind, degree: usize) -> ExactMatrix {
        self.operator_matrix(kind, degree).expect("degree in range").matrix
    }

    /// `[D,L] = H`, `[H,D] = 2D`, `[H,L] = -2L` on every graded piece.
    pub fn check_sl2_relations(&self) -> bool {
        let two = self.field.from_i64(2);
        (0..=self.n).all(|i| {
            let h = self.op(OperatorKind::H, i);
            let d = self.op(OperatorKind::D, i);
            let l = self.op(OperatorKind::L, i);
            let dl = if i < self.n {
                self.op(OperatorKind::D, i + 1).mul(&l).unwrap()
            } else {
                ExactMatrix::zero(self.field, self.dim(i), self.dim(i))
            };
            let ld = if i > 0 {
                self.op(OperatorKind::L, i - 1).mul(&d).unwrap()
            } else {
                ExactMatrix::zero(self.field, self.dim(i), self.dim(i))
            };
            let first = dl.sub(&ld).unwrap() == h;
            let second = if i > 0 {
                let hd = self.op(OperatorKind::H, i - 1).mul(&d).unwrap();
                hd.sub(&d.mul(&h).unwrap()).unwrap() == d.scale(&two)
            } else {
                true
            };
            let third = if i < self.n {
                let hl = self.op(OperatorKind::H, i + 1).mul(&l).unwrap();
                hl.sub(&l.mul(&h).unwrap()).unwrap() == l.scale(&-&two)
            } else {
                true
            };
            first && second && third
        })
    }

    /// A basis of `P_k = ker(D) ∩ A_k`.
    pub fn primitive_subspace(&self, k: usize) -> Result<Vec<Vec<Scalar>>> {
        if k > self.n {
            return Err(Error::DegreeOutOfRange { degree: k, n: self.n });
        }
        if k == 0 {
            return Ok(vec![vec![self.field.one()]]);
        }
        Ok(self.op(OperatorKind::D, k).kernel())
    }

    /// `ker(L^m) ∩ A_degree`.
    pub fn kernel_of_power(&self, degree: usize, m: usize) -> Vec<Vec<Scalar>> {
        if degree + m > self.n {
            return identity_columns(self.field, self.dim(degree));
        }
        self.op(OperatorKind::LPower(m), degree).kernel()
    }
}

fn identity_columns(field: FieldSpec, n: usize) -> Vec<Vec<Scalar>> {
    ExactMatrix::identity(field, n).columns()
}

fn columns_matrix(field: FieldSpec, rows: usize, cols: &[Vec<Scalar>]) -> ExactMatrix {
    ExactMatrix::from_columns(field, rows, cols).expect("consistent lengths")
}

pub fn check_sl2_relations(n: usize, field: FieldSpec) -> bool {
    SquareFreeAlgebra::new(n, field).check_sl2_relations()
}

/// Every `L: A_{i-1} -> A_i` has maximal rank.
pub fn has_wlp(n: usize, field: FieldSpec) -> bool {
    let alg = SquareFreeAlgebra::new(n, field);
    (1..=n).all(|i| {
        let l = alg.op(OperatorKind::L, i - 1);
        l.rank() == l.rows().min(l.cols())
    })
}

pub fn wlp_threshold_predicate(n: usize, p: u64) -> bool {
    p == 0 || p >= (n as u64 + 3) / 2
}

/// Every `L^{n-2k}: A_k -> A_{n-k}` is bijective.
pub fn has_slp(n: usize, field: FieldSpec) -> bool {
    let alg = SquareFreeAlgebra::new(n, field);
    (0..=n / 2).all(|k| alg.op(OperatorKind::LPower(n - 2 * k), k).rank() == alg.dim(k))
}

pub fn slp_threshold_predicate(n: usize, p: u64) -> bool {
    p == 0 || p > n as u64
}

/// Coordinates in `A_k` of the standard basis of `V(n,k,k)`.
fn specht_columns(n: usize, k: usize, field: FieldSpec) -> Vec<Vec<Scalar>> {
    module_basis(ShiftedShape::new(n, k, k).expect("2k <= n"), field).matrix.columns()
}

#[derive(Debug, Clone, Serialize)]
pub struct DSurjectivityReport {
    pub n: usize,
    pub k: usize,
    pub field: FieldSpec,
    /// Surjectivity of `D: A_i -> A_{i-1}` for `i = 1..=k`.
    pub surjective: Vec<bool>,
    pub dim_primitive: usize,
    pub dim_specht: usize,
    pub specht_equals_primitive: bool,
    pub characteristic_predicate: bool,
    /// Degree and polynomial of a primitive element outside the Specht module, when one exists.
    pub witness: Option<(usize, String)>,
    pub consistent: bool,
}

/// Compares surjectivity of `D` in degrees `1..=k`, the equality `V(n,k,k) = P_k`, and the
/// characteristic condition `p = 0` or `p >= k + 1`.
pub fn d_surjectivity_equiv(n: usize, k: usize, field: FieldSpec) -> Result<DSurjectivityReport> {
    if 2 * k > n {
        return Err(Error::ParameterOutOfRange(format!("need 2k <= n, got n={n}, k={k}")));
    }
    let alg = SquareFreeAlgebra::new(n, field);
    let surjective: Vec<bool> = (1..=k)
        .map(|i| alg.op(OperatorKind::D, i).rank() == alg.dim(i - 1))
        .collect();
    let prim = alg.primitive_subspace(k)?;
    let spec = specht_columns(n, k, field);
    let pm = columns_matrix(field, alg.dim(k), &prim);
    let vm = columns_matrix(field, alg.dim(k), &spec);
    let contained = pm.column_space_contains(&vm)?;
    let equal = contained && prim.len() == spec.len();
    let p = field.characteristic();
    let predicate = p == 0 || p > k as u64;
    let witness = if equal { None } else { primitive_witness(&alg, k)? };
    let all = surjective.iter().all(|&b| b);
    let at_k = surjective.last().copied().unwrap_or(true);
    Ok(DSurjectivityReport {
        n,
        k,
        field,
        dim_primitive: prim.len(),
        dim_specht: spec.len(),
        specht_equals_primitive: equal,
        characteristic_predicate: predicate,
        witness,
        consistent: contained && all == at_k && at_k == equal && equal == predicate,
        surjective,
    })
}

/// `e_p(x_1..x_{2p-1})` when it lies in `P_p` but not in `V(n,p,p)`; otherwise any kernel
/// vector of `D` in degree `k` outside `V(n,k,k)`.
fn primitive_witness(alg: &SquareFreeAlgebra, k: usize) -> Result<Option<(usize, String)>> {
    let (n, field) = (alg.n, alg.field);
    let p = field.characteristic() as usize;
    if p > 0 && p <= k && 2 * p - 1 <= n {
        let vars: Vec<usize> = (1..=2 * p - 1).collect();
        let alpha = elementary_symmetric(p, &vars, n, field)?;
        let coords = alg.coordinates(&alpha, p)?;
        let in_kernel = alg.op(OperatorKind::D, p).apply(&coords)?.iter().all(Scalar::is_zero);
        let spec = columns_matrix(field, alg.dim(p), &specht_columns(n, p, field));
        if in_kernel && !spec.in_column_space(&coords)? {
            return Ok(Some((p, alpha.to_string())));
        }
    }
    let spec = columns_matrix(field, alg.dim(k), &specht_columns(n, k, field));
    for v in alg.primitive_subspace(k)? {
        if !spec.in_column_space(&v)? {
            return Ok(Some((k, alg.polynomial(&v, k).to_string())));
        }
    }
    Ok(None)
}

/// `D(L^m a) = m (n - 2k + 1 - m) L^{m-1} a` for every `a` in a basis of `P_k`.
pub fn sl2_string_identity(n: usize, k: usize, m: usize, field: FieldSpec) -> Result<bool> {
    if k + m > n {
        return Err(Error::DegreeOutOfRange { degree: k + m, n });
    }
    let alg = SquareFreeAlgebra::new(n, field);
    let basis = alg.primitive_subspace(k)?;
    let scalar = field.from_i64(m as i64 * (n as i64 - 2 * k as i64 + 1 - m as i64));
    let lm = alg.op(OperatorKind::LPower(m), k);
    let d = alg.op(OperatorKind::D, k + m);
    for a in &basis {
        let lhs = d.apply(&lm.apply(a)?)?;
        let ok = if m == 0 {
            lhs.iter().all(Scalar::is_zero)
        } else {
            let rhs = alg.op(OperatorKind::LPower(m - 1), k).apply(a)?;
            lhs.iter().zip(&rhs).all(|(x, y)| *x == y * &scalar)
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `V(n,k,k) ⊆ P_k` and `P_k ⊆ ker(L^{n-2k+1}) ∩ A_k`.
pub fn containment_chain(n: usize, k: usize, field: FieldSpec) -> Result<(bool, bool)> {
    let alg = SquareFreeAlgebra::new(n, field);
    let prim = columns_matrix(field, alg.dim(k), &alg.primitive_subspace(k)?);
    let spec = columns_matrix(field, alg.dim(k), &specht_columns(n, k, field));
    let ker = columns_matrix(field, alg.dim(k), &alg.kernel_of_power(k, n + 1 - 2 * k));
    Ok((prim.column_space_contains(&spec)?, ker.column_space_contains(&prim)?))
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub field: FieldSpec,
    /// `(i, dim L^{d-i}(P_i))` for `i = k..=min(d, n-d)`; the remaining summands vanish.
    pub summands: Vec<(usize, usize)>,
    pub dim_specht: usize,
    pub sum_is_direct: bool,
    pub sum_equals_specht: bool,
    pub kernel_equals_specht: bool,
    pub explicit_bases_span: bool,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.sum_is_direct && self.sum_equals_specht && self.kernel_equals_specht && self.explicit_bases_span
    }
}

/// Checks `V(n,k,d) = ⊕_{i=k}^{d} L^{d-i}(P_i) = ker(L^{n-k-d+1}) ∩ A_d` and the explicit
/// bases `e_{d-i}(T^c) F_T` of the summands.
pub fn primitive_decomposition(n: usize, k: usize, d: usize, field: FieldSpec) -> Result<DecompositionReport> {
    let shape = ShiftedShape::new(n, k, d)?;
    let p = field.characteristic();
    if !slp_threshold_predicate(n, p) {
        return Err(Error::CharacteristicTooSmall {
            p,
            need: format!("p = 0 or p >= {}", n + 1),
        });
    }
    let alg = SquareFreeAlgebra::new(n, field);
    let rows = alg.dim(d);
    let spec = module_basis(shape, field).matrix;
    let mut summands = Vec::new();
    let mut all_cols = Vec::new();
    let mut explicit_ok = true;
    for i in k..=d.min(n - d) {
        let lift = alg.op(OperatorKind::LPower(d - i), i);
        let image: Vec<Vec<Scalar>> = alg
            .primitive_subspace(i)?
            .iter()
            .map(|a| lift.apply(a))
            .collect::<Result<_>>()?;
        let image_m = columns_matrix(field, rows, &image);
        let dim = image_m.rank();
        summands.push((i, dim));
        let explicit: Vec<Vec<Scalar>> = enumerate_standard(ShiftedShape::new(n, i, i)?)
            .iter()
            .map(|t| {
                let rest: Vec<usize> = (1..=n).filter(|v| !t.support().contains(v)).collect();
                let e = elementary_symmetric(d - i, &rest, n, field)?;
                alg.coordinates(&(&e * &specht_polynomial(t, field)), d)
            })
            .collect::<Result<_>>()?;
        let explicit_m = columns_matrix(field, rows, &explicit);
        explicit_ok &= explicit_m.rank() == explicit.len() && explicit_m.column_space_equals(&image_m)?;
        all_cols.extend(image);
    }
    let sum = columns_matrix(field, rows, &all_cols);
    let total: usize = summands.iter().map(|s| s.1).sum();
    let kernel = columns_matrix(field, rows, &alg.kernel_of_power(d, n + 1 - k - d));
    Ok(DecompositionReport {
        n,
        k,
        d,
        field,
        dim_specht: spec.cols(),
        sum_is_direct: sum.rank() == total,
        sum_equals_specht: sum.column_space_equals(&spec)?,
        kernel_equals_specht: kernel.column_space_equals(&spec)?,
        explicit_bases_span: explicit_ok,
        summands,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct RestrictionReport {
    pub n: usize,
    pub j: usize,
    pub k: usize,
    pub field: FieldSpec,
    pub dim_small: usize,
    pub dim_intersection: usize,
    pub contained: bool,
    pub equal: bool,
}

/// Compares `V(j,k,k)` with `V(n,k,k) ∩ B_k`, where `B` is the subalgebra on `x_1..x_j`.
pub fn restriction_report(n: usize, j: usize, k: usize, field: FieldSpec) -> Result<RestrictionReport> {
    if 2 * k > j || j > n {
        return Err(Error::ParameterOutOfRange(format!("need 2k <= j <= n, got n={n}, j={j}, k={k}")));
    }
    let rows = binomial_u64(n as u64, k as i64) as usize;
    let big = columns_matrix(field, rows, &specht_columns(n, k, field));
    let index: HashMap<Vec<usize>, usize> =
        index_subsets(n, k).into_iter().enumerate().map(|(i, s)| (s, i)).collect();
    let b_cols: Vec<Vec<Scalar>> = index_subsets(j, k)
        .iter()
        .map(|s| {
            let mut v = vec![field.zero(); rows];
            v[index[s]] = field.one();
            v
        })
        .collect();
    let small: Vec<Vec<Scalar>> = specht_columns(j, k, field)
        .iter()
        .map(|c| {
            let mut v = vec![field.zero(); rows];
            for (s, x) in index_subsets(j, k).iter().zip(c) {
                v[index[s]] = x.clone();
            }
            v
        })
        .collect();
    // kernel of [V | -B] gives the intersection as V a
    let b = columns_matrix(field, rows, &b_cols);
    let stacked = big.hcat(&b.scale(&field.from_i64(-1)))?;
    let inter: Vec<Vec<Scalar>> = stacked
        .kernel()
        .iter()
        .map(|v| big.apply(&v[..big.cols()]))
        .collect::<Result<_>>()?;
    let inter_m = columns_matrix(field, rows, &inter);
    let small_m = columns_matrix(field, rows, &small);
    let dim_intersection = inter_m.rank();
    let contained = inter_m.column_space_contains(&small_m)?;
    Ok(RestrictionReport {
        n,
        j,
        k,
        field,
        dim_small: small.len(),
        dim_intersection,
        contained,
        equal: contained && dim_intersection == small_m.rank(),
    })
}

/// `V(j,k,k) = V(n,k,k) ∩ B_k`, under `p = 0` or `p >= k + 1`.
pub fn restriction_identity(n: usize, j: usize, k: usize, field: FieldSpec) -> Result<bool> {
    let p = field.characteristic();
    if p != 0 && p <= k as u64 {
        return Err(Error::CharacteristicTooSmall {
            p,
            need: format!("p = 0 or p >= {}", k + 1),
        });
    }
    Ok(restriction_report(n, j, k, field)?.equal)
}
