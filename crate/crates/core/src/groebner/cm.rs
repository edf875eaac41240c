//! Cohen–Macaulay certificates by regular sequences of forms, and the embedded maximal prime probe.

use std::collections::HashSet;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::FieldSpec;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

use super::Ideal;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CmVerdict {
    /// A linear regular sequence of length `krull_dim`.
    CertifiedCM(Vec<Polynomial>),
    Inconclusive,
}

impl CmVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, CmVerdict::CertifiedCM(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MaxPrimeVerdict {
    MaxIdealAssociated,
    NotAssociated,
}

fn linear_form(field: FieldSpec, coeffs: &[i64]) -> Polynomial {
    let n = coeffs.len();
    let mut f = Polynomial::zero(field, n);
    for (i, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            f = &f + &Polynomial::var(field, n, i + 1).expect("in range").scale(&field.from_i64(c));
        }
    }
    f
}

/// Coordinate forms, then forms with coefficients in {0, 1, -1} by support size.
fn deterministic_candidates(field: FieldSpec, n: usize) -> Vec<Polynomial> {
    let mut vecs: Vec<Vec<i64>> = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 1..total {
        let mut c = code;
        let v: Vec<i64> = (0..n)
            .map(|_| {
                let d = c % 3;
                c /= 3;
                [0, 1, -1][d]
            })
            .collect();
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            vecs.push(v);
        }
    }
    vecs.sort_by_key(|v| (v.iter().filter(|&&x| x != 0).count(), v.iter().map(|&x| -x.abs()).collect::<Vec<_>>()));
    let mut seen = HashSet::new();
    vecs.iter()
        .map(|v| linear_form(field, v))
        .filter(|f| !f.is_zero() && seen.insert(f.monic()))
        .collect()
}

fn random_form(field: FieldSpec, n: usize, rng: &mut ChaCha8Rng) -> Polynomial {
    let coeffs: Vec<i64> = (0..n)
        .map(|_| match field {
            FieldSpec::Rationals => rng.random_range(-9..=9),
            FieldSpec::PrimeField(p) => rng.random_range(0..p as i64),
        })
        .collect();
    linear_form(field, &coeffs)
}

/// A form of degree `deg` with seeded random coefficients on every monomial.
fn random_form_of_degree(field: FieldSpec, n: usize, deg: u16, rng: &mut ChaCha8Rng) -> Polynomial {
    let mut exps = Vec::new();
    let mut cur = vec![0u16; n];
    fn rec(i: usize, left: u16, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    rec(0, deg, &mut cur, &mut exps);
    let terms = exps.into_iter().map(|e| {
        let c = match field {
            FieldSpec::Rationals => rng.random_range(-9..=9),
            FieldSpec::PrimeField(p) => rng.random_range(0..p as i64),
        };
        (Monomial::from_exponents(e), field.from_i64(c))
    });
    Polynomial::from_terms(field, n, terms)
}

fn times_one_minus_t(p: &[i64], deg: usize) -> Vec<i64> {
    let mut out = p.to_vec();
    out.resize(p.len() + deg, 0);
    for i in (deg..out.len()).rev() {
        out[i] -= p[i - deg];
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// A form `f` of degree `e` is a nonzerodivisor on `R/I` exactly when
/// `HS(R/(I+f)) = (1-t^e) HS(R/I)`; the colon `(I : f) = I` is then confirmed directly.
fn is_regular(ideal: &Ideal, base_numerator: &[i64], l: &Polynomial) -> Result<Option<Ideal>> {
    let deg = l.total_degree().unwrap_or(0) as usize;
    let next = ideal.add_generators(std::slice::from_ref(l))?;
    if next.full_numerator(&MonomialOrder::GrevLex) != times_one_minus_t(base_numerator, deg) {
        return Ok(None);
    }
    if !ideal.colon(l)?.equals(ideal)? {
        return Ok(None);
    }
    Ok(Some(next))
}

/// Searches for a linear regular sequence of length `krull_dim(R/I)`. Tries the deterministic
/// candidates, then `trials` seeded random forms, at each step.
pub fn cm_certify(ideal: &Ideal, trials: usize, seed: u64) -> Result<CmVerdict> {
    certify_with_degrees(ideal, 1, trials, seed)
}

/// Like [`cm_certify`], but when no linear form is regular at a step, also tries `trials`
/// random forms of each degree `2..=max_degree`.
pub fn cm_certify_forms(ideal: &Ideal, max_degree: u16, trials: usize, seed: u64) -> Result<CmVerdict> {
    certify_with_degrees(ideal, max_degree, trials, seed)
}

fn certify_with_degrees(ideal: &Ideal, max_degree: u16, trials: usize, seed: u64) -> Result<CmVerdict> {
    let data = ideal.hilbert_data()?;
    let field = ideal.field();
    let n = ideal.nvars();
    let fixed = deterministic_candidates(field, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = ideal.clone();
    let mut seq = Vec::new();
    for _ in 0..data.krull_dim {
        let base = cur.full_numerator(&MonomialOrder::GrevLex);
        let mut found = None;
        for l in &fixed {
            if let Some(next) = is_regular(&cur, &base, l)? {
                found = Some((l.clone(), next));
                break;
            }
        }
        if found.is_none() {
            for _ in 0..trials {
                let l = random_form(field, n, &mut rng);
                if l.is_zero() {
                    continue;
                }
                if let Some(next) = is_regular(&cur, &base, &l)? {
                    found = Some((l, next));
                    break;
                }
            }
        }
        for deg in 2..=max_degree {
            if found.is_some() {
                break;
            }
            for _ in 0..trials {
                let f = random_form_of_degree(field, n, deg, &mut rng);
                if f.is_zero() {
                    continue;
                }
                if let Some(next) = is_regular(&cur, &base, &f)? {
                    found = Some((f, next));
                    break;
                }
            }
        }
        match found {
            Some((l, next)) => {
                seq.push(l);
                cur = next;
            }
            None => return Ok(CmVerdict::Inconclusive),
        }
    }
    Ok(CmVerdict::CertifiedCM(seq))
}

/// Whether `m = (x_1..x_n)` is an associated prime of `R/I`, tested by `(I : m) ≠ I`.
pub fn embedded_max_prime(ideal: &Ideal) -> Result<MaxPrimeVerdict> {
    let data = ideal.hilbert_data()?;
    if data.krull_dim == 0 {
        return Err(Error::ZeroDimensional);
    }
    let m = Ideal::maximal(ideal.field(), ideal.nvars());
    Ok(if ideal.colon_ideal(&m)?.equals(ideal)? {
        MaxPrimeVerdict::NotAssociated
    } else {
        MaxPrimeVerdict::MaxIdealAssociated
    })
}
