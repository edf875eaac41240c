//! Shifted Specht ideals, Specht-monomial ideals, and executable checks of the structural
//! theorems about them.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::arith::FieldSpec;
use crate::combin::index_subsets;
use crate::error::{Error, Result};
use crate::groebner::{cm_certify_forms, embedded_max_prime, Ideal, MaxPrimeVerdict};
use crate::lefschetz::has_wlp;
use crate::poly::polynomial::{linear_difference, squarefree_monomial};
use crate::poly::{MonomialOrder, Polynomial};
use crate::specht::{delete_max, module_basis, phi_map, specht_polynomial};
use crate::tableaux::{enumerate_standard, ShiftedShape};

/// Parameters of the ideal generated by `V(n,k,d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpechtIdealSpec {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub field: FieldSpec,
}

/// `a(n,k,d)`, generated by the standard shifted Specht polynomials.
pub fn specht_ideal(spec: SpechtIdealSpec) -> Result<Ideal> {
    let shape = ShiftedShape::new(spec.n, spec.k, spec.d)?;
    Ideal::new(spec.field, spec.n, module_basis(shape, spec.field).polynomials)
}

fn specht(n: usize, k: usize, d: usize, field: FieldSpec) -> Result<Ideal> {
    specht_ideal(SpechtIdealSpec { n, k, d, field })
}

/// `(x_1..x_n)^(d)`, generated by the square-free monomials of degree `d`.
pub fn squarefree_power(n: usize, d: usize, field: FieldSpec) -> Ideal {
    let gens = index_subsets(n, d).iter().map(|s| squarefree_monomial(s, n, field)).collect();
    Ideal::new(field, n, gens).expect("compatible generators")
}

fn check_ink_range(n: usize, k: usize) -> Result<()> {
    if k == 0 || 2 * k + 1 > n {
        return Err(Error::ParameterOutOfRange(format!("need 1 <= k and 2k+1 <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// `a(n,k,k) + m^(k+1)`; at `k = 0` this is the unit ideal.
fn ink(n: usize, k: usize, field: FieldSpec) -> Result<Ideal> {
    specht(n, k, k, field)?.sum(&squarefree_power(n, k + 1, field))
}

/// The Specht-monomial ideal `I(n,k) = a(n,k,k) + m^(k+1)`.
pub fn specht_monomial_ideal(n: usize, k: usize, field: FieldSpec) -> Result<Ideal> {
    check_ink_range(n, k)?;
    ink(n, k, field)
}

/// `y_i = x_n - x_i` for `i < n`.
fn y_images(n: usize, field: FieldSpec) -> Vec<Polynomial> {
    (1..n).map(|i| linear_difference(n, i, n, field)).collect()
}

/// `(y_1..y_{n-1})^(k) + (x_n^2)`, expanded in the `x` variables.
pub fn y_ideal(n: usize, k: usize, field: FieldSpec) -> Result<Ideal> {
    check_ink_range(n, k)?;
    let ys = y_images(n, field);
    let mut gens: Vec<Polynomial> = index_subsets(n - 1, k)
        .iter()
        .map(|s| s.iter().fold(Polynomial::one(field, n), |acc, &i| &acc * &ys[i - 1]))
        .collect();
    gens.push(Polynomial::var(field, n, n)?.pow(2));
    Ideal::new(field, n, gens)
}

fn embed(ideal: &Ideal, n: usize) -> Result<Ideal> {
    let gens = ideal.generators().iter().map(|g| g.with_nvars(n)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.field(), n, gens)
}

/// `I(n-1,k-1)` in `n` variables.
fn ink_below(n: usize, k: usize, field: FieldSpec) -> Result<Ideal> {
    embed(&ink(n - 1, k - 1, field)?, n)
}

/// `J(n,k) = I(n-1,k-1) + (y_1..y_{n-1})^(k) + (x_n^2)`.
pub fn j_ideal(n: usize, k: usize, field: FieldSpec) -> Result<Ideal> {
    check_ink_range(n, k)?;
    ink_below(n, k, field)?.sum(&y_ideal(n, k, field)?)
}

/// The ideal of differences `x_{s_1} - x_{s_j}` over `S`, with `x_{s_1}^2` when `squared`.
pub fn translate_ideal(n: usize, subset: &[usize], squared: bool, field: FieldSpec) -> Result<Ideal> {
    let s1 = subset[0];
    let mut gens: Vec<Polynomial> = subset[1..].iter().map(|&s| linear_difference(s1, s, n, field)).collect();
    if squared {
        gens.push(Polynomial::var(field, n, s1)?.pow(2));
    }
    Ideal::new(field, n, gens)
}

pub fn intersect_all(ideals: &[Ideal]) -> Result<Ideal> {
    let (first, rest) = ideals
        .split_first()
        .ok_or_else(|| Error::ParameterOutOfRange("empty intersection".into()))?;
    rest.iter().try_fold(first.clone(), |acc, i| acc.intersect(i))
}

fn characteristic_predicate(field: FieldSpec, k: usize) -> bool {
    let p = field.characteristic();
    p == 0 || p > k as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "radD")]
    RadD,
    #[serde(rename = "rad")]
    Rad,
    #[serde(rename = "coc")]
    Coc,
    #[serde(rename = "perfectD")]
    PerfectD,
    #[serde(rename = "jnk")]
    Jnk,
    #[serde(rename = "primary")]
    Primary,
    #[serde(rename = "perfect")]
    Perfect,
    #[serde(rename = "hE")]
    HE,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::RadD,
        TheoremId::Rad,
        TheoremId::Coc,
        TheoremId::PerfectD,
        TheoremId::Jnk,
        TheoremId::Primary,
        TheoremId::Perfect,
        TheoremId::HE,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::RadD => "radD",
            TheoremId::Rad => "rad",
            TheoremId::Coc => "coc",
            TheoremId::PerfectD => "perfectD",
            TheoremId::Jnk => "jnk",
            TheoremId::Primary => "primary",
            TheoremId::Perfect => "perfect",
            TheoremId::HE => "hE",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::ParameterOutOfRange(format!("unknown theorem {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    Fails,
    Inconclusive,
}

impl Outcome {
    fn from_bool(b: bool) -> Outcome {
        if b { Outcome::Holds } else { Outcome::Fails }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub params: String,
    pub field: FieldSpec,
    pub outcome: Outcome,
    /// The outcome predicted from the characteristic; `true` means the statement should hold.
    pub expected: bool,
    /// A polynomial lying in exactly one side of a failed equality.
    pub witness: Option<String>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl TheoremVerdict {
    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    /// `None` when inconclusive.
    pub fn agrees(&self) -> Option<bool> {
        match self.outcome {
            Outcome::Inconclusive => None,
            o => Some((o == Outcome::Holds) == self.expected),
        }
    }
}

/// Outcome of comparing two ideals.
struct Comparison {
    equal: bool,
    witness: Option<String>,
    note: Option<String>,
}

fn compare(lhs: &Ideal, rhs: &Ideal, lname: &str, rname: &str) -> Result<Comparison> {
    if lhs.equals(rhs)? {
        return Ok(Comparison {
            equal: true,
            witness: None,
            note: None,
        });
    }
    for (a, b, aname, bname) in [(rhs, lhs, rname, lname), (lhs, rhs, lname, rname)] {
        for g in a.groebner_basis(&MonomialOrder::GrevLex) {
            if !b.contains(&g)? {
                return Ok(Comparison {
                    equal: false,
                    note: Some(format!("witness lies in {aname} but not in {bname}")),
                    witness: Some(g.to_string()),
                });
            }
        }
    }
    unreachable!("distinct reduced bases imply a non-member generator")
}

/// Size limits and search parameters shared by the checks.
#[derive(Debug, Clone)]
pub struct CheckConfig {
    /// Largest number of variables for Gröbner-based checks.
    pub max_groebner_n: usize,
    pub allow_large: bool,
    /// Random linear forms tried per step of a regular-sequence search.
    pub cm_trials: usize,
    /// Largest degree of the forms tried once linear forms are exhausted.
    pub cm_max_degree: u16,
    pub seed: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            max_groebner_n: 6,
            allow_large: false,
            cm_trials: 100,
            cm_max_degree: 3,
            seed: 0x5eed,
        }
    }
}

struct Timer(Instant);

impl Timer {
    fn start() -> Self {
        Timer(Instant::now())
    }
}

impl CheckConfig {
    fn check_size(&self, nvars: usize) -> Result<()> {
        if nvars > self.max_groebner_n && !self.allow_large {
            return Err(Error::TooLarge(format!(
                "{nvars} variables exceeds the cap of {}",
                self.max_groebner_n
            )));
        }
        Ok(())
    }

    fn verdict(
        &self,
        theorem: TheoremId,
        params: String,
        field: FieldSpec,
        outcome: Outcome,
        expected: bool,
        timer: Timer,
    ) -> TheoremVerdict {
        TheoremVerdict {
            theorem,
            params,
            field,
            outcome,
            expected,
            witness: None,
            notes: Vec::new(),
            elapsed: timer.0.elapsed(),
        }
    }

    fn verdict_from(
        &self,
        theorem: TheoremId,
        params: String,
        field: FieldSpec,
        c: Comparison,
        expected: bool,
        timer: Timer,
    ) -> TheoremVerdict {
        let mut v = self.verdict(theorem, params, field, Outcome::from_bool(c.equal), expected, timer);
        v.witness = c.witness;
        v.notes.extend(c.note);
        v
    }

    /// `a(n,k,d) = a(n,k,d-1) ∩ m^(d)`.
    pub fn check_thm_rad_d(&self, n: usize, k: usize, d: usize, field: FieldSpec) -> Result<TheoremVerdict> {
        let timer = Timer::start();
        if d == 0 || k >= d || ShiftedShape::new(n, k, d).is_err() {
            return Err(Error::ParameterOutOfRange(format!("need 0 <= k < d <= n-k, got ({n},{k},{d})")));
        }
        self.check_size(n)?;
        let lhs = specht(n, k, d, field)?;
        let rhs = specht(n, k, d - 1, field)?.intersect(&squarefree_power(n, d, field))?;
        let c = compare(&lhs, &rhs, "a(n,k,d)", "a(n,k,d-1) ∩ m^(d)")?;
        Ok(self.verdict_from(TheoremId::RadD, format!("n={n} k={k} d={d}"), field, c, true, timer))
    }

    /// `∩_S (x_{s_1} - x_{s_2}, ..., x_{s_1} - x_{s_h}) = a(n+1,k+1,k+1)` over the `h`-subsets
    /// `S` of `1..=n+1`, with `h = n + 1 - k`.
    pub fn check_radical(&self, n: usize, k: usize, field: FieldSpec) -> Result<TheoremVerdict> {
        let timer = Timer::start();
        let m = n + 1;
        if m < 3 || 2 * (k + 1) > m {
            return Err(Error::ParameterOutOfRange(format!("need 2(k+1) <= n+1 and n >= 2, got n={n}, k={k}")));
        }
        self.check_size(m)?;
        let h = m - k;
        let parts = index_subsets(m, h)
            .iter()
            .map(|s| translate_ideal(m, s, false, field))
            .collect::<Result<Vec<_>>>()?;
        let lhs = intersect_all(&parts)?;
        let rhs = specht(m, k + 1, k + 1, field)?;
        let c = compare(&lhs, &rhs, "the intersection of translates", "a(n+1,k+1,k+1)")?;
        let mut v = self.verdict_from(TheoremId::Rad, format!("m={m} h={h}"), field, c, true, timer);
        v.notes.push(format!("translates: {}", parts.len()));
        Ok(v)
    }

    /// `a(n,k,k) + (x_n) = a(n-1,k-1,k) + (x_n)`, and `F_T = (-1)^k Φ(F_T')` for every standard `T`.
    pub fn check_coc(&self, n: usize, k: usize, field: FieldSpec) -> Result<TheoremVerdict> {
        let timer = Timer::start();
        if k == 0 || 2 * k > n {
            return Err(Error::ParameterOutOfRange(format!("need 1 <= k <= n-k, got n={n}, k={k}")));
        }
        self.check_size(n)?;
        let xn = Polynomial::var(field, n, n)?;
        let lhs = specht(n, k, k, field)?.add_generators(std::slice::from_ref(&xn))?;
        let rhs = embed(&specht(n - 1, k - 1, k, field)?, n)?.add_generators(std::slice::from_ref(&xn))?;
        let c = compare(&lhs, &rhs, "a(n,k,k)+(x_n)", "a(n-1,k-1,k)+(x_n)")?;
        let sign = field.from_i64(if k.is_multiple_of(2) { 1 } else { -1 });
        let mut phi_ok = true;
        for t in enumerate_standard(ShiftedShape::new(n, k, k)?) {
            let small = specht_polynomial(&delete_max(&t)?, field).with_nvars(n)?;
            phi_ok &= specht_polynomial(&t, field) == phi_map(&small, n)?.scale(&sign);
        }
        let equal = c.equal;
        let mut v = self.verdict_from(TheoremId::Coc, format!("n={n} k={k}"), field, c, true, timer);
        if !phi_ok {
            v.outcome = Outcome::Fails;
            v.notes.push("a generator does not match its image under the change of coordinates".into());
        } else if equal {
            v.notes.push("generator-wise change of coordinates verified".into());
        }
        Ok(v)
    }

    /// `I(n,k) = I(n-1,k-1) ∩ ((y_1..y_{n-1})^(k) + (x_n^2))`; expected exactly when `p = 0`
    /// or `p >= k + 1`.
    pub fn check_thm_perfect_d(&self, n: usize, k: usize, field: FieldSpec) -> Result<TheoremVerdict> {
        let timer = Timer::start();
        check_ink_range(n, k)?;
        self.check_size(n)?;
        let lhs = ink(n, k, field)?;
        let rhs = ink_below(n, k, field)?.intersect(&y_ideal(n, k, field)?)?;
        let c = compare(&lhs, &rhs, "I(n,k)", "I(n-1,k-1) ∩ y-ideal")?;
        Ok(self.verdict_from(
            TheoremId::PerfectD,
            format!("n={n} k={k}"),
            field,
            c,
            characteristic_predicate(field, k),
            timer,
        ))
    }

    /// `J(n,k) + (x_n) = I(n-1,k-1) + (x_n)` and `(J(n,k) : x_n) = (x_1..x_{n-1})^(k-1) + (x_n)`.
    pub fn check_lemma_jnk(&self, n: usize, k: usize, field: FieldSpec) -> Result<TheoremVerdict> {
        let timer = Timer::start();
        check_ink_range(n, k)?;
        if !characteristic_predicate(field, k) {
            return Err(Error::CharacteristicTooSmall {
                p: field.characteristic(),
                need: format!("p = 0 or p >= {}", k + 1),
            });
        }
        self.check_size(n)?;
        let xn = Polynomial::var(field, n, n)?;
        let j = j_ideal(n, k, field)?;
        let first = compare(
            &j.add_generators(std::slice::from_ref(&xn))?,
            &ink_below(n, k, field)?.add_generators(std::slice::from_ref(&xn))?,
            "J(n,k)+(x_n)",
            "I(n-1,k-1)+(x_n)",
        )?;
        let target = embed(&squarefree_power(n - 1, k - 1, field), n)?.add_generators(std::slice::from_ref(&xn))?;
        let second = compare(&j.colon(&xn)?, &target, "(J(n,k):x_n)", "(x_1..x_{n-1})^(k-1)+(x_n)")?;
        let both = first.equal && second.equal;
        let bad = if first.equal { second } else { first };
        let mut v = self.verdict(TheoremId::Jnk, format!("n={n} k={k}"), field, Outcome::from_bool(both), true, timer);
        v.witness = bad.witness;
        v.notes.extend(bad.note);
        Ok(v)
    }

    /// `I(n,k) = ∩_S (x_{s_1} - x_{s_2}, ..., x_{s_1} - x_{s_{n-k+1}}, x_{s_1}^2)` over the
    /// `(n-k+1)`-subsets `S`; expected exactly when `p = 0` or `p >= k + 1`.
    pub fn check_primary_shape(&self, n: usize, k: usize, field: FieldSpec) -> Result<TheoremVerdict> {
        let timer = Timer::start();
        check_ink_range(n, k)?;
        self.check_size(n)?;
        let parts = index_subsets(n, n - k + 1)
            .iter()
            .map(|s| translate_ideal(n, s, true, field))
            .collect::<Result<Vec<_>>>()?;
        let rhs = intersect_all(&parts)?;
        let c = compare(&ink(n, k, field)?, &rhs, "I(n,k)", "the intersection of primary translates")?;
        let mut v = self.verdict_from(
            TheoremId::Primary,
            format!("n={n} k={k}"),
            field,
            c,
            characteristic_predicate(field, k),
            timer,
        );
        v.notes.push(format!("components: {}", parts.len()));
        Ok(v)
    }

    fn certify(&self, ideal: &Ideal) -> Result<bool> {
        Ok(cm_certify_forms(ideal, self.cm_max_degree, self.cm_trials, self.seed)?.is_certified())
    }

    /// Perfection evidence for `I(n,k)`: a linear regular sequence, or an embedded maximal prime.
    pub fn ink_perfection(&self, n: usize, k: usize, field: FieldSpec) -> Result<(Outcome, Vec<String>)> {
        check_ink_range(n, k)?;
        self.check_size(n)?;
        let i = ink(n, k, field)?;
        if i.hilbert_data()?.krull_dim > 0 && embedded_max_prime(&i)? == MaxPrimeVerdict::MaxIdealAssociated {
            return Ok((Outcome::Fails, vec![format!("I({n},{k}): the maximal ideal is an associated prime")]));
        }
        if self.certify(&i)? {
            return Ok((Outcome::Holds, vec![format!("I({n},{k}): regular sequence found")]));
        }
        Ok((Outcome::Inconclusive, vec![format!("I({n},{k}): no certificate either way")]))
    }

    /// Perfection evidence for `a(n+1,i+1,i+1)`, `1 <= i <= k`, through the isomorphic model
    /// `a(n,i,i+1) = a(n,i,i) ∩ m^(i+1)`.
    pub fn specht_chain_perfection(&self, n: usize, k: usize, field: FieldSpec) -> Result<(Outcome, Vec<String>)> {
        check_ink_range(n, k)?;
        self.check_size(n)?;
        let mut notes = Vec::new();
        for i in 1..=k {
            let model = specht(n, i, i + 1, field)?;
            if self.certify(&model)? {
                notes.push(format!("a({},{},{}) via a({n},{i},{}): perfect", n + 1, i + 1, i + 1, i + 1));
                continue;
            }
            let he = check_he_grades(&specht(n, i, i, field)?, &squarefree_power(n, i + 1, field))?;
            // a(n,i,i) is perfect exactly when its model a(n-1,i-1,i) is
            let component = self.certify(&specht(n - 1, i - 1, i, field)?)?;
            let ink_bad = embedded_max_prime(&ink(n, i, field)?)? == MaxPrimeVerdict::MaxIdealAssociated;
            notes.push(format!(
                "a({},{},{}): heights {}, {}, {}; a({n},{i},{i}) perfect: {component}; I({n},{i}) has embedded maximal prime: {ink_bad}",
                n + 1,
                i + 1,
                i + 1,
                he.height_i,
                he.height_j,
                he.height_sum
            ));
            if he.pattern_holds && component && ink_bad {
                notes.push(format!("a({},{},{}) is not perfect", n + 1, i + 1, i + 1));
                return Ok((Outcome::Fails, notes));
            }
            return Ok((Outcome::Inconclusive, notes));
        }
        Ok((Outcome::Holds, notes))
    }

    /// Perfection of `I(n,k)` and of the Specht ideals `a(n+1,i+1,i+1)`, `i <= k`.
    pub fn check_perfection(&self, n: usize, k: usize, field: FieldSpec) -> Result<TheoremVerdict> {
        let timer = Timer::start();
        let (a, mut notes) = self.ink_perfection(n, k, field)?;
        let (b, more) = self.specht_chain_perfection(n, k, field)?;
        notes.extend(more);
        let outcome = match (a, b) {
            (Outcome::Holds, Outcome::Holds) => Outcome::Holds,
            (Outcome::Fails, _) | (_, Outcome::Fails) => Outcome::Fails,
            _ => Outcome::Inconclusive,
        };
        let mut v = self.verdict(
            TheoremId::Perfect,
            format!("n={n} k={k}"),
            field,
            outcome,
            characteristic_predicate(field, k),
            timer,
        );
        v.notes = notes;
        Ok(v)
    }

    /// Heights of `a(n,k,k)`, `m^(k+1)` and their sum `I(n,k)` follow the pattern `g, g, g+1`.
    pub fn check_he(&self, n: usize, k: usize, field: FieldSpec) -> Result<TheoremVerdict> {
        let timer = Timer::start();
        check_ink_range(n, k)?;
        self.check_size(n)?;
        let r = check_he_grades(&specht(n, k, k, field)?, &squarefree_power(n, k + 1, field))?;
        let mut v = self.verdict(TheoremId::HE, format!("n={n} k={k}"), field, Outcome::from_bool(r.pattern_holds), true, timer);
        v.notes.push(format!("heights {}, {}, {}", r.height_i, r.height_j, r.height_sum));
        Ok(v)
    }

    /// Dispatches on the theorem id; `d` is used only by `radD`.
    pub fn verify(&self, theorem: TheoremId, n: usize, k: usize, d: Option<usize>, field: FieldSpec) -> Result<TheoremVerdict> {
        match theorem {
            TheoremId::RadD => {
                let d = d.ok_or_else(|| Error::ParameterOutOfRange("radD needs d".into()))?;
                self.check_thm_rad_d(n, k, d, field)
            }
            TheoremId::Rad => self.check_radical(n, k, field),
            TheoremId::Coc => self.check_coc(n, k, field),
            TheoremId::PerfectD => self.check_thm_perfect_d(n, k, field),
            TheoremId::Jnk => self.check_lemma_jnk(n, k, field),
            TheoremId::Primary => self.check_primary_shape(n, k, field),
            TheoremId::Perfect => self.check_perfection(n, k, field),
            TheoremId::HE => self.check_he(n, k, field),
        }
    }

    /// Heights of `a(n,k,k)` and `m^(d)` and minimal-prime probes for `a(n,k,d)`.
    pub fn mixed_height_evidence(&self, n: usize, k: usize, d: usize, field: FieldSpec) -> Result<MixedHeightReport> {
        if k == 0 || d <= k + 1 || ShiftedShape::new(n, k, d).is_err() {
            return Err(Error::ParameterOutOfRange(format!("need 1 <= k, k+1 < d <= n-k, got ({n},{k},{d})")));
        }
        self.check_size(n)?;
        let whole = specht(n, k, d, field)?;
        let spec_part = specht(n, k, k, field)?;
        let mono = squarefree_power(n, d, field);
        let decomposes = whole.equals(&spec_part.intersect(&mono)?)?;
        let all_vars = squarefree_monomial(&(1..=n).collect::<Vec<_>>(), n, field);
        let mut monomial_component = false;
        for g in spec_part.generators() {
            if !whole.radical_member(g)? {
                monomial_component = true;
                break;
            }
        }
        Ok(MixedHeightReport {
            n,
            k,
            d,
            field,
            decomposes,
            height_specht: spec_part.hilbert_data()?.height,
            height_monomial: mono.hilbert_data()?.height,
            specht_component: !whole.radical_member(&all_vars)?,
            monomial_component,
        })
    }

    /// The four characteristic-dependent verdicts compared with `p = 0 or p >= k + 1`.
    pub fn agreement_chain(&self, n: usize, k: usize, field: FieldSpec) -> Result<AgreementReport> {
        check_ink_range(n, k)?;
        let predicate = characteristic_predicate(field, k);
        let wlp = has_wlp(2 * k, field);
        let perfect_d = self.check_thm_perfect_d(n, k, field)?.holds();
        let (ink_outcome, _) = self.ink_perfection(n, k, field)?;
        let (chain_outcome, _) = self.specht_chain_perfection(n, k, field)?;
        let as_bool = |o: Outcome| match o {
            Outcome::Holds => Some(true),
            Outcome::Fails => Some(false),
            Outcome::Inconclusive => None,
        };
        let all_agree = wlp == predicate
            && perfect_d == predicate
            && as_bool(ink_outcome) == Some(predicate)
            && as_bool(chain_outcome) == Some(predicate);
        Ok(AgreementReport {
            n,
            k,
            field,
            predicate,
            wlp,
            perfect_d,
            ink_perfection: ink_outcome,
            specht_chain: chain_outcome,
            all_agree,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HeReport {
    pub height_i: usize,
    pub height_j: usize,
    pub height_sum: usize,
    /// Heights `g, g, g + 1`.
    pub pattern_holds: bool,
}

pub fn check_he_grades(i: &Ideal, j: &Ideal) -> Result<HeReport> {
    let hi = i.hilbert_data()?.height;
    let hj = j.hilbert_data()?.height;
    let sum = i.sum(j)?;
    let hs = if sum.is_unit() { i.nvars() + 1 } else { sum.hilbert_data()?.height };
    Ok(HeReport {
        height_i: hi,
        height_j: hj,
        height_sum: hs,
        pattern_holds: hi == hj && hs == hi + 1,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct MixedHeightReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub field: FieldSpec,
    /// `a(n,k,d) = a(n,k,k) ∩ m^(d)`.
    pub decomposes: bool,
    pub height_specht: usize,
    pub height_monomial: usize,
    /// `x_1...x_n` is outside the radical, so some minimal prime contains `a(n,k,k)`.
    pub specht_component: bool,
    /// A generator of `a(n,k,k)` is outside the radical, so some minimal prime contains `m^(d)`.
    pub monomial_component: bool,
}

impl MixedHeightReport {
    pub fn mixed(&self) -> bool {
        self.decomposes
            && self.height_specht == self.n - self.k
            && self.height_monomial == self.n - self.d + 1
            && self.height_specht != self.height_monomial
            && self.specht_component
            && self.monomial_component
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AgreementReport {
    pub n: usize,
    pub k: usize,
    pub field: FieldSpec,
    pub predicate: bool,
    pub wlp: bool,
    pub perfect_d: bool,
    pub ink_perfection: Outcome,
    pub specht_chain: Outcome,
    pub all_agree: bool,
}

pub fn check_thm_rad_d(n: usize, k: usize, d: usize, field: FieldSpec) -> Result<TheoremVerdict> {
    CheckConfig::default().check_thm_rad_d(n, k, d, field)
}

pub fn check_radical(n: usize, k: usize, field: FieldSpec) -> Result<TheoremVerdict> {
    CheckConfig::default().check_radical(n, k, field)
}

pub fn check_coc(n: usize, k: usize, field: FieldSpec) -> Result<TheoremVerdict> {
    CheckConfig::default().check_coc(n, k, field)
}

pub fn check_thm_perfect_d(n: usize, k: usize, field: FieldSpec) -> Result<TheoremVerdict> {
    CheckConfig::default().check_thm_perfect_d(n, k, field)
}

pub fn check_lemma_jnk(n: usize, k: usize, field: FieldSpec) -> Result<TheoremVerdict> {
    CheckConfig::default().check_lemma_jnk(n, k, field)
}

pub fn check_primary_shape(n: usize, k: usize, field: FieldSpec) -> Result<TheoremVerdict> {
    CheckConfig::default().check_primary_shape(n, k, field)
}

pub fn check_perfection(n: usize, k: usize, field: FieldSpec) -> Result<TheoremVerdict> {
    CheckConfig::default().check_perfection(n, k, field)
}
