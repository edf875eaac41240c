use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{FieldSpec, Scalar};
use crate::error::{Error, Result};

use super::monomial::{Monomial, MonomialOrder};

/// Sparse polynomial over a [`FieldSpec`]. Terms are kept in grevlex order and never hold zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldSpec,
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(field: FieldSpec, nvars: usize) -> Self {
        Polynomial {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: FieldSpec, nvars: usize, c: Scalar) -> Self {
        let mut p = Polynomial::zero(field, nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(field: FieldSpec, nvars: usize) -> Self {
        Polynomial::constant(field, nvars, field.one())
    }

    /// The variable `x_i`, `i` counted from 1.
    pub fn var(field: FieldSpec, nvars: usize, i: usize) -> Result<Self> {
        check_index(i, nvars)?;
        Ok(Polynomial::monomial(field, Monomial::var(nvars, i), field.one()))
    }

    pub fn monomial(field: FieldSpec, m: Monomial, c: Scalar) -> Self {
        let mut p = Polynomial::zero(field, m.nvars());
        p.add_term(m, c);
        p
    }

    /// Builds from raw terms, summing repeated monomials.
    pub fn from_terms<I>(field: FieldSpec, nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut p = Polynomial::zero(field, nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert_eq!(m.nvars(), self.nvars);
        debug_assert_eq!(c.field(), self.field);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Largest total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Leading monomial and coefficient for the given order.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        match order {
            MonomialOrder::GrevLex => self.terms.iter().next_back(),
            _ => self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)),
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field, self.nvars);
        }
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        Polynomial::from_terms(
            self.field,
            self.nvars,
            self.terms.iter().map(|(t, a)| (t.mul(m), a * c)),
        )
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.field, self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient (grevlex); zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading(&MonomialOrder::GrevLex) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Ring homomorphism sending `x_i` to `images[i-1]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.nvars,
            None => 0,
        };
        for img in images {
            if img.field != self.field {
                return Err(Error::FieldMismatch(self.field, img.field));
            }
            if img.nvars != target {
                return Err(Error::ArityMismatch {
                    expected: target,
                    got: img.nvars,
                });
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(self.field, target), p.clone()])
            .collect();
        let mut out = Polynomial::zero(self.field, target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(self.field, target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// `D = d/dx_1 + ... + d/dx_n`, the formal derivative sum.
    pub fn lowering_derivative(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    out.add_term(m.lower(i), c.mul_int(e as i64));
                }
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = t.checked_mul(&point[i])?;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Re-embeds into `nvars` variables, dropping or appending trailing ones.
    /// Dropped variables must not occur.
    pub fn with_nvars(&self, nvars: usize) -> Result<Polynomial> {
        if nvars < self.nvars {
            for m in self.terms.keys() {
                if m.exponents()[nvars..].iter().any(|&e| e > 0) {
                    return Err(Error::ArityMismatch {
                        expected: nvars,
                        got: self.nvars,
                    });
                }
            }
        }
        Ok(Polynomial::from_terms(
            self.field,
            nvars,
            self.terms.iter().map(|(m, c)| (m.resized(nvars), c.clone())),
        ))
    }

    /// Renames variables: `x_i` becomes `x_{map[i-1]}` in `nvars` variables.
    pub fn rename(&self, nvars: usize, map: &[usize]) -> Result<Polynomial> {
        if map.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: map.len(),
            });
        }
        for &j in map {
            check_index(j, nvars)?;
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u16; nvars];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[map[i] - 1] += x;
            }
            (Monomial::from_exponents(e), c.clone())
        });
        Ok(Polynomial::from_terms(self.field, nvars, terms))
    }

    /// Reinterprets integer-valued coefficients in another field.
    pub fn change_field(&self, field: FieldSpec) -> Result<Polynomial> {
        let mut out = Polynomial::zero(field, self.nvars);
        for (m, c) in &self.terms {
            let c = match c {
                Scalar::Rational(r) => field.from_ratio(r.numer(), r.denom())?,
                Scalar::Residue { value, .. } => field.from_i64(*value as i64),
            };
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Option<Polynomial> {
        let order = MonomialOrder::GrevLex;
        let (lm, lc) = g.leading(&order)?;
        let lc_inv = lc.inv().ok()?;
        let mut rem = self.clone();
        let mut q = Polynomial::zero(self.field, self.nvars);
        while let Some((m, c)) = rem.leading(&order) {
            let t = m.try_div(lm)?;
            let c = c * &lc_inv;
            rem = &rem - &g.mul_monomial(&t, &c);
            q.add_term(t, c);
        }
        Some(q)
    }
}

fn check_index(i: usize, nvars: usize) -> Result<()> {
    if i == 0 || i > nvars {
        Err(Error::IndexOutOfRange { index: i, nvars })
    } else {
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.field, self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `prod_{i<j in S} (x_i - x_j)` with `S` sorted ascending; `1` when `|S| < 2`.
pub fn vandermonde(s: &[usize], n: usize, field: FieldSpec) -> Result<Polynomial> {
    let mut s = s.to_vec();
    for &i in &s {
        check_index(i, n)?;
    }
    s.sort_unstable();
    let mut acc = Polynomial::one(field, n);
    for a in 0..s.len() {
        for b in a + 1..s.len() {
            acc = &acc * &linear_difference(s[a], s[b], n, field);
        }
    }
    Ok(acc)
}

/// Product over the given pairs, in order, of `x_a - x_b`. Used by Specht polynomials whose
/// columns are not sorted.
pub fn product_of_differences(pairs: &[(usize, usize)], n: usize, field: FieldSpec) -> Result<Polynomial> {
    let mut acc = Polynomial::one(field, n);
    for &(a, b) in pairs {
        check_index(a, n)?;
        check_index(b, n)?;
        acc = &acc * &linear_difference(a, b, n, field);
    }
    Ok(acc)
}

pub fn linear_difference(a: usize, b: usize, n: usize, field: FieldSpec) -> Polynomial {
    let mut p = Polynomial::zero(field, n);
    p.add_term(Monomial::var(n, a), field.one());
    p.add_term(Monomial::var(n, b), -&field.one());
    p
}

/// Sum of all square-free degree-`j` monomials in the variables `vars` (1-based).
pub fn elementary_symmetric(j: usize, vars: &[usize], n: usize, field: FieldSpec) -> Result<Polynomial> {
    for &i in vars {
        check_index(i, n)?;
    }
    if j > vars.len() {
        return Err(Error::InvalidDegree(j as i64));
    }
    let mut out = Polynomial::zero(field, n);
    for subset in crate::combin::subsets(vars, j) {
        out.add_term(Monomial::squarefree(n, &subset), field.one());
    }
    Ok(out)
}

/// The square-free monomial on `support`, coefficient one.
pub fn squarefree_monomial(support: &[usize], n: usize, field: FieldSpec) -> Polynomial {
    Polynomial::monomial(field, Monomial::squarefree(n, support), field.one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_polynomial;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, Q, n).unwrap()
    }

    fn x(i: usize, n: usize) -> Polynomial {
        Polynomial::var(Q, n, i).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = p("x1 - x2", 2);
        let b = p("x1 + x2", 2);
        assert_eq!(&a * &b, p("x1^2 - x2^2", 2));
        assert!((&a * &Polynomial::zero(Q, 2)).is_zero());
    }

    #[test]
    fn four_term_product() {
        let f = &p("x1 - x2", 4) * &p("x3 - x4", 4);
        assert_eq!(f.len(), 4);
        assert_eq!(f, p("x1*x3 - x1*x4 - x2*x3 + x2*x4", 4));
    }

    #[test]
    fn mismatched_operands() {
        let f2 = FieldSpec::prime(2).unwrap();
        let a = Polynomial::var(Q, 2, 1).unwrap();
        let b = Polynomial::var(f2, 2, 1).unwrap();
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch(..))));
        let c = Polynomial::var(Q, 3, 1).unwrap();
        assert!(matches!(a.checked_mul(&c), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn vandermonde_small() {
        assert_eq!(vandermonde(&[1, 2], 3, Q).unwrap(), p("x1 - x2", 3));
        assert_eq!(vandermonde(&[3], 3, Q).unwrap(), Polynomial::one(Q, 3));
        assert!(matches!(vandermonde(&[4], 3, Q), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn vandermonde_three_by_brute_force() {
        // independent expansion: sum over S_3 of sign(σ) x_σ(1)^2 x_σ(2)
        let n = 3;
        let perms: [([usize; 3], i64); 6] = [
            ([1, 2, 3], 1),
            ([2, 1, 3], -1),
            ([1, 3, 2], -1),
            ([3, 2, 1], -1),
            ([2, 3, 1], 1),
            ([3, 1, 2], 1),
        ];
        let mut expect = Polynomial::zero(Q, n);
        for (s, sign) in perms {
            let mut e = [0u16; 3];
            e[s[0] - 1] = 2;
            e[s[1] - 1] = 1;
            expect.add_term(Monomial::from_exponents(e), Q.from_i64(sign));
        }
        assert_eq!(vandermonde(&[1, 2, 3], n, Q).unwrap(), expect);
        assert_eq!(
            vandermonde(&[1, 2, 3], n, Q).unwrap(),
            p("x1*x2^2 - x1^2*x2 + x1^2*x3 - x2^2*x3 + x2*x3^2 - x1*x3^2", 3).scale(&Q.from_i64(-1))
        );
    }

    #[test]
    fn elementary_symmetric_values() {
        assert_eq!(elementary_symmetric(2, &[1, 2, 3], 3, Q).unwrap(), p("x1*x2 + x1*x3 + x2*x3", 3));
        assert_eq!(elementary_symmetric(0, &[1, 2], 2, Q).unwrap(), Polynomial::one(Q, 2));
        let e2 = elementary_symmetric(2, &[1, 2, 3, 4], 4, Q).unwrap();
        assert_eq!(e2.evaluate(&vec![Q.one(); 4]).unwrap(), Q.from_i64(6));
        assert!(matches!(elementary_symmetric(3, &[1, 2], 2, Q), Err(Error::InvalidDegree(3))));
    }

    fn phi(n: usize) -> Vec<Polynomial> {
        (1..=n)
            .map(|i| if i < n { &x(n, n) - &x(i, n) } else { x(n, n) })
            .collect()
    }

    #[test]
    fn phi_substitution() {
        let images = phi(3);
        assert_eq!(x(1, 3).substitute(&images).unwrap(), p("x3 - x1", 3));
        let id: Vec<_> = (1..=3).map(|i| x(i, 3)).collect();
        let f = p("x1^2*x2 - 3/2*x3 + 7", 3);
        assert_eq!(f.substitute(&id).unwrap(), f);
        assert!(matches!(f.substitute(&id[..2]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn phi_is_involution() {
        for n in 1..=6 {
            let images = phi(n);
            for i in 1..=n {
                let once = x(i, n).substitute(&images).unwrap();
                assert_eq!(once.substitute(&images).unwrap(), x(i, n));
            }
        }
    }

    #[test]
    fn lowering_derivative_examples() {
        assert_eq!(p("x1*x2", 2).lowering_derivative(), p("x1 + x2", 2));
        assert!(p("x1 - x2", 2).lowering_derivative().is_zero());
        let f2 = FieldSpec::prime(2).unwrap();
        let e2 = elementary_symmetric(2, &[1, 2, 3], 3, f2).unwrap();
        assert!(e2.lowering_derivative().is_zero());
    }

    #[test]
    fn exact_division() {
        let f = p("x1^2 - x2^2", 2);
        assert_eq!(f.exact_div(&p("x1 - x2", 2)), Some(p("x1 + x2", 2)));
        assert_eq!(p("x1 + 1", 2).exact_div(&p("x2", 2)), None);
    }

    fn arb_poly(field: FieldSpec) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u16..=2, 4), -3i64..=3), 0..5).prop_map(
            move |ts| {
                Polynomial::from_terms(
                    field,
                    4,
                    ts.into_iter()
                        .map(|(e, c)| (Monomial::from_exponents(e), field.from_i64(c))),
                )
            },
        )
    }

    fn fields() -> impl Strategy<Value = FieldSpec> {
        prop_oneof![Just(Q), Just(FieldSpec::PrimeField(2)), Just(FieldSpec::PrimeField(3))]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms((f, g, h) in fields().prop_flat_map(|k| (arb_poly(k), arb_poly(k), arb_poly(k)))) {
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        }

        #[test]
        fn substitution_is_homomorphism((f, g, imgs) in fields().prop_flat_map(|k| (arb_poly(k), arb_poly(k), prop::collection::vec(arb_poly(k), 4)))) {
            let lhs = (&f * &g).substitute(&imgs).unwrap();
            let rhs = &f.substitute(&imgs).unwrap() * &g.substitute(&imgs).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn derivation_rule((f, g) in fields().prop_flat_map(|k| (arb_poly(k), arb_poly(k)))) {
            let lhs = (&f * &g).lowering_derivative();
            let rhs = &(&f.lowering_derivative() * &g) + &(&f * &g.lowering_derivative());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn vandermonde_alternates(s in prop::sample::subsequence(vec![1usize, 2, 3, 4, 5], 2..=4), a in 0usize..4, b in 0usize..4) {
            let a = a % s.len();
            let b = b % s.len();
            prop_assume!(a != b);
            // swapping two indices of S is the transposition acting on variables
            let mut map: Vec<usize> = (1..=5).collect();
            map[s[a] - 1] = s[b];
            map[s[b] - 1] = s[a];
            let v = vandermonde(&s, 5, Q).unwrap();
            prop_assert_eq!(v.rename(5, &map).unwrap(), -&v);
        }
    }
}
