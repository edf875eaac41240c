//! Hilbert series of monomial quotients by pivot splitting.

use serde::Serialize;

/// Hilbert series of `R/I` written as `numerator(t) / (1-t)^krull_dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// Coefficients of the numerator, lowest degree first.
    pub numerator: Vec<i64>,
    pub krull_dim: usize,
    pub height: usize,
}

impl HilbertData {
    /// From the numerator over `(1-t)^nvars`; `None` for the zero ring.
    pub(crate) fn from_full_numerator(mut num: Vec<i64>, nvars: usize) -> Option<HilbertData> {
        trim(&mut num);
        if num.is_empty() {
            return None;
        }
        let mut dim = nvars;
        while dim > 0 && num.iter().sum::<i64>() == 0 {
            num = divide_one_minus_t(&num);
            dim -= 1;
        }
        Some(HilbertData {
            numerator: num,
            krull_dim: dim,
            height: nvars - dim,
        })
    }

    /// Value of the numerator at 1, the degree of `R/I`.
    pub fn multiplicity(&self) -> i64 {
        self.numerator.iter().sum()
    }

    /// `dim_F (R/I)_i`.
    pub fn hilbert_function(&self, i: usize) -> i64 {
        let r = self.krull_dim as i64;
        self.numerator
            .iter()
            .enumerate()
            .filter(|&(j, _)| j <= i)
            .map(|(j, &c)| {
                let m = (i - j) as i64;
                if r == 0 {
                    if m == 0 { c } else { 0 }
                } else {
                    c * binom(m + r - 1, r - 1)
                }
            })
            .sum()
    }

    /// Vector-space dimension of `R/I` when it is finite.
    pub fn vector_space_dim(&self) -> Option<i64> {
        (self.krull_dim == 0).then(|| self.multiplicity())
    }

    pub fn numerator_string(&self) -> String {
        let mut parts = Vec::new();
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            let body = match (c.abs(), mono.is_empty()) {
                (a, true) => a.to_string(),
                (1, false) => mono,
                (a, false) => format!("{a}*{mono}"),
            };
            let sign = if c < 0 { "-" } else { "+" };
            if parts.is_empty() {
                parts.push(if c < 0 { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{sign} {body}"));
            }
        }
        if parts.is_empty() { "0".into() } else { parts.join(" ") }
    }
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

fn trim(p: &mut Vec<i64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn divide_one_minus_t(p: &[i64]) -> Vec<i64> {
    // q_i = p_0 + ... + p_i
    let mut q = Vec::with_capacity(p.len());
    let mut acc = 0;
    for &c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc);
    }
    trim(&mut q);
    q
}

fn sub_shifted(a: &[i64], b: &[i64], shift: usize) -> Vec<i64> {
    let mut out = a.to_vec();
    out.resize(a.len().max(b.len() + shift), 0);
    for (i, &c) in b.iter().enumerate() {
        out[i + shift] -= c;
    }
    trim(&mut out);
    out
}

fn add_shifted(a: &[i64], b: &[i64], shift: usize) -> Vec<i64> {
    let neg: Vec<i64> = b.iter().map(|c| -c).collect();
    sub_shifted(a, &neg, shift)
}

fn minimalize(mut gens: Vec<Vec<u16>>) -> Vec<Vec<u16>> {
    gens.sort_by_key(|g| g.iter().map(|&e| e as u32).sum::<u32>());
    gens.dedup();
    let mut out: Vec<Vec<u16>> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.iter().zip(&g).all(|(a, b)| a <= b)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N` with `HS(R/M) = N(t) / (1-t)^n` for the monomial ideal `M` with the given
/// exponent vectors.
pub(crate) fn monomial_numerator(gens: Vec<Vec<u16>>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    let support = |g: &Vec<u16>| g.iter().filter(|&&e| e > 0).count();
    if gens.iter().all(|g| support(g) <= 1) {
        let mut acc = vec![1i64];
        for g in &gens {
            let d: usize = g.iter().map(|&e| e as usize).sum();
            acc = sub_shifted(&acc, &acc.clone(), d);
        }
        return acc;
    }
    let n = gens[0].len();
    let mut counts = vec![0usize; n];
    for g in gens.iter().filter(|g| support(g) > 1) {
        for (i, &e) in g.iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let x = (0..n).max_by_key(|&i| counts[i]).expect("nonempty");
    // N(M) = N(M + x) + t * N(M : x)
    let mut plus: Vec<Vec<u16>> = gens.iter().filter(|g| g[x] == 0).cloned().collect();
    let mut xv = vec![0u16; n];
    xv[x] = 1;
    plus.push(xv);
    let colon: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[x] = h[x].saturating_sub(1);
            h
        })
        .collect();
    add_shifted(&monomial_numerator(plus), &monomial_numerator(colon), 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_numerators() {
        assert_eq!(monomial_numerator(vec![]), vec![1]);
        // (x^2) in one variable: 1 - t^2
        assert_eq!(monomial_numerator(vec![vec![2]]), vec![1, 0, -1]);
        // (xy) in two variables: 1 - t^2
        assert_eq!(monomial_numerator(vec![vec![1, 1]]), vec![1, 0, -1]);
        let h = HilbertData::from_full_numerator(vec![1, 0, -1], 2).unwrap();
        assert_eq!((h.krull_dim, h.numerator.clone()), (1, vec![1, 1]));
        assert_eq!(h.hilbert_function(3), 2);
        assert!(HilbertData::from_full_numerator(vec![0], 2).is_none());
    }

    #[test]
    fn counts_standard_monomials() {
        // (x1x2, x1x3, x2x3) in 3 variables: standard monomials per degree are 1, 3, 3, 3, ...
        let gens = vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]];
        let h = HilbertData::from_full_numerator(monomial_numerator(gens), 3).unwrap();
        assert_eq!(h.krull_dim, 1);
        assert_eq!(h.numerator, vec![1, 2]);
        for i in 1..6 {
            assert_eq!(h.hilbert_function(i), 3);
        }
        assert_eq!(h.numerator_string(), "1 + 2*t");
    }
}
