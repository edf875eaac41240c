//! Ideals in `F[x_1..x_n]`: Gröbner bases and the operations built on them.

mod cm;
mod engine;
mod hilbert;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::arith::FieldSpec;
use crate::error::{Error, Result};
use crate::poly::{parse_polynomial_list, Monomial, MonomialOrder, Polynomial};

pub use cm::{cm_certify, cm_certify_forms, embedded_max_prime, CmVerdict, MaxPrimeVerdict};
pub use hilbert::HilbertData;

use engine::Poly;

/// An ideal given by generators, with reduced Gröbner bases cached per term order.
pub struct Ideal {
    field: FieldSpec,
    nvars: usize,
    generators: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<Poly>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            field: self.field,
            nvars: self.nvars,
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({self})")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl Ideal {
    pub fn new(field: FieldSpec, nvars: usize, generators: Vec<Polynomial>) -> Result<Ideal> {
        for g in &generators {
            if g.field() != field {
                return Err(Error::FieldMismatch(field, g.field()));
            }
            if g.nvars() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    got: g.nvars(),
                });
            }
        }
        Ok(Ideal {
            field,
            nvars,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn parse(s: &str, field: FieldSpec, nvars: usize) -> Result<Ideal> {
        Ideal::new(field, nvars, parse_polynomial_list(s, field, nvars)?)
    }

    pub fn zero(field: FieldSpec, nvars: usize) -> Ideal {
        Ideal::new(field, nvars, Vec::new()).expect("no generators")
    }

    pub fn unit(field: FieldSpec, nvars: usize) -> Ideal {
        Ideal::new(field, nvars, vec![Polynomial::one(field, nvars)]).expect("compatible")
    }

    /// `(x_1, ..., x_n)`.
    pub fn maximal(field: FieldSpec, nvars: usize) -> Ideal {
        let gens = (1..=nvars).map(|i| Polynomial::var(field, nvars, i).expect("in range")).collect();
        Ideal::new(field, nvars, gens).expect("compatible")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    fn check(&self, f: &Polynomial) -> Result<()> {
        if f.field() != self.field {
            return Err(Error::FieldMismatch(self.field, f.field()));
        }
        if f.nvars() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: f.nvars(),
            });
        }
        Ok(())
    }

    fn check_ideal(&self, other: &Ideal) -> Result<()> {
        if other.field != self.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if other.nvars != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        Ok(())
    }

    fn internal_basis(&self, order: &MonomialOrder) -> Arc<Vec<Poly>> {
        if let Some(b) = self.cache.lock().expect("cache lock").get(order) {
            return b.clone();
        }
        let basis = Arc::new(engine::reduced_basis(&self.generators, order));
        self.cache
            .lock()
            .expect("cache lock")
            .entry(order.clone())
            .or_insert(basis)
            .clone()
    }

    /// The reduced Gröbner basis, monic, by increasing leading monomial.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Vec<Polynomial> {
        self.internal_basis(order)
            .iter()
            .map(|p| p.to_polynomial(self.field, self.nvars))
            .collect()
    }

    pub fn leading_monomials(&self, order: &MonomialOrder) -> Vec<Monomial> {
        self.internal_basis(order).iter().map(|p| engine::leading_monomial(p).clone()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
        self.check(f)?;
        Ok(engine::normal_form(f, &self.internal_basis(order), order))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f, &MonomialOrder::GrevLex)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ideal(other)?;
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals, by comparing reduced grevlex bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ideal(other)?;
        let order = MonomialOrder::GrevLex;
        Ok(self.groebner_basis(&order) == other.groebner_basis(&order))
    }

    pub fn is_unit(&self) -> bool {
        let b = self.internal_basis(&MonomialOrder::GrevLex);
        b.len() == 1 && engine::leading_monomial(&b[0]).is_one()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        let gens = self.generators.iter().chain(&other.generators).cloned().collect();
        Ideal::new(self.field, self.nvars, gens)
    }

    pub fn add_generators(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let gens = self.generators.iter().chain(extra).cloned().collect();
        Ideal::new(self.field, self.nvars, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        let mut gens = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f * g);
            }
        }
        Ideal::new(self.field, self.nvars, gens)
    }

    /// `I ∩ J`, eliminating `t` from `t I + (1 - t) J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        if self.generators.is_empty() || other.generators.is_empty() {
            return Ok(Ideal::zero(self.field, self.nvars));
        }
        let n = self.nvars;
        let t = Polynomial::var(self.field, n + 1, n + 1)?;
        let one_minus_t = &Polynomial::one(self.field, n + 1) - &t;
        let mut gens = Vec::new();
        for f in &self.generators {
            gens.push(&t * &f.with_nvars(n + 1)?);
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.with_nvars(n + 1)?);
        }
        let order = MonomialOrder::BlockElimination(vec![n]);
        let basis = engine::reduced_basis(&gens, &order);
        let kept = basis
            .iter()
            .filter(|p| engine::leading_monomial(p).exponent(n) == 0)
            .map(|p| p.to_polynomial(self.field, n + 1).with_nvars(n))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.field, n, kept)
    }

    /// `(I : f)`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        self.check(f)?;
        if f.is_zero() {
            return Err(Error::ZeroDivisorInput);
        }
        let principal = Ideal::new(self.field, self.nvars, vec![f.clone()])?;
        let inter = self.intersect(&principal)?;
        let gens = inter
            .generators
            .iter()
            .map(|g| g.exact_div(f).expect("generators of I ∩ (f) are multiples of f"))
            .collect();
        Ideal::new(self.field, self.nvars, gens)
    }

    /// `(I : J)`, the intersection of the colons by the generators of `J`.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        let mut acc: Option<Ideal> = None;
        for g in &other.generators {
            let c = self.colon(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(self.field, self.nvars)))
    }

    /// `(I : f^∞)`.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        let mut cur = self.clone();
        loop {
            let next = cur.colon(f)?;
            if next.equals(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `(I : m^∞)` for the homogeneous maximal ideal `m`.
    pub fn saturate_max(&self) -> Result<Ideal> {
        let m = Ideal::maximal(self.field, self.nvars);
        let mut cur = self.clone();
        loop {
            let next = cur.colon_ideal(&m)?;
            if next.equals(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `f ∈ √I`, via `1 ∈ I + (1 - y f)` in one extra variable.
    pub fn radical_member(&self, f: &Polynomial) -> Result<bool> {
        self.check(f)?;
        let n = self.nvars;
        let y = Polynomial::var(self.field, n + 1, n + 1)?;
        let mut gens = self
            .generators
            .iter()
            .map(|g| g.with_nvars(n + 1))
            .collect::<Result<Vec<_>>>()?;
        gens.push(&Polynomial::one(self.field, n + 1) - &(&y * &f.with_nvars(n + 1)?));
        Ok(Ideal::new(self.field, n + 1, gens)?.is_unit())
    }

    /// Hilbert series of `R/I` from the grevlex leading-term ideal.
    pub fn hilbert_data(&self) -> Result<HilbertData> {
        self.hilbert_data_with_order(&MonomialOrder::GrevLex)
    }

    pub fn hilbert_data_with_order(&self, order: &MonomialOrder) -> Result<HilbertData> {
        if !self.is_homogeneous() {
            return Err(Error::NonHomogeneous);
        }
        HilbertData::from_full_numerator(self.full_numerator(order), self.nvars)
            .ok_or_else(|| Error::ParameterOutOfRange("the unit ideal has zero quotient".into()))
    }

    /// Numerator of the Hilbert series over `(1-t)^nvars`.
    pub(crate) fn full_numerator(&self, order: &MonomialOrder) -> Vec<i64> {
        let lts = self.leading_monomials(order).iter().map(|m| m.exponents().to_vec()).collect();
        hilbert::monomial_numerator(lts)
    }
}

pub fn groebner_basis(ideal: &Ideal, order: &MonomialOrder) -> Vec<Polynomial> {
    ideal.groebner_basis(order)
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    a.equals(b)
}

pub fn colon(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    ideal.colon(f)
}

pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.intersect(b)
}

pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    ideal.saturate(f)
}

pub fn saturate_max(ideal: &Ideal) -> Result<Ideal> {
    ideal.saturate_max()
}

pub fn radical_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.radical_member(f)
}

pub fn hilbert_data(ideal: &Ideal) -> Result<HilbertData> {
    ideal.hilbert_data()
}
