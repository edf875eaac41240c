use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 8]>;

/// An exponent vector with its cached total degree.
///
/// The derived ordering on `Monomial` is graded reverse lexicographic with
/// `x1 > x2 > ... > xn`; other orders go through [`MonomialOrder`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn from_exponents<I: IntoIterator<Item = u16>>(exps: I) -> Self {
        let exps: Exponents = exps.into_iter().collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    /// The variable `x_i`, with `i` counted from 1.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i - 1] = 1;
        m.degree = 1;
        m
    }

    /// Square-free monomial on the given 1-based indices.
    pub fn squarefree(nvars: usize, support: &[usize]) -> Self {
        let mut m = Monomial::one(nvars);
        for &i in support {
            m.exps[i - 1] += 1;
        }
        m.degree = support.len() as u32;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Number of variables that occur.
    pub fn weight(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// 1-based indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        }
    }

    pub fn try_div(&self, by: &Monomial) -> Option<Monomial> {
        by.divides(self).then(|| by.quotient_of(self))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Lowers the exponent at `i` (0-based) by one.
    pub fn lower(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] -= 1;
        m.degree -= 1;
        m
    }

    /// Appends or removes trailing variables.
    pub fn resized(&self, nvars: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(nvars, 0);
        Monomial::from_exponents(exps)
    }

    /// Bit signature for fast non-divisibility checks.
    pub fn divmask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                let slot = (i % 32) * 2;
                mask |= 1 << slot;
                if e > 1 {
                    mask |= 1 << (slot + 1);
                }
            }
        }
        mask
    }

    pub(crate) fn set_exponent(&mut self, i: usize, e: u16) {
        self.degree = self.degree - self.exps[i] as u32 + e as u32;
        self.exps[i] = e;
    }
}

fn grevlex(a: &[u16], da: u32, b: &[u16], db: u32) -> Ordering {
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nvars()
            .cmp(&other.nvars())
            .then_with(|| grevlex(&self.exps, self.degree, &other.exps, other.degree))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A term order on monomials of a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// Product order: grevlex on the listed (0-based) variables first, then grevlex on the rest.
    BlockElimination(Vec<usize>),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => a.cmp(b),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::BlockElimination(block) => {
                let restrict = |m: &Monomial, inside: bool| -> (Exponents, u32) {
                    let e: Exponents = m
                        .exps
                        .iter()
                        .enumerate()
                        .map(|(i, &e)| if block.contains(&i) == inside { e } else { 0 })
                        .collect();
                    let d = e.iter().map(|&x| x as u32).sum();
                    (e, d)
                };
                let (ai, dai) = restrict(a, true);
                let (bi, dbi) = restrict(b, true);
                grevlex(&ai, dai, &bi, dbi).then_with(|| {
                    let (ao, dao) = restrict(a, false);
                    let (bo, dbo) = restrict(b, false);
                    grevlex(&ao, dao, &bo, dbo)
                })
            }
        }
    }
}
