//! Worked examples replayed end to end, with committed golden outputs.

use std::fmt::Write as _;

use clap::ValueEnum;

use specht_core::groebner::{cm_certify, embedded_max_prime, CmVerdict, Ideal, MaxPrimeVerdict};
use specht_core::poly::{elementary_symmetric, MonomialOrder, Polynomial};
use specht_core::specht::module_basis;
use specht_core::tableaux::ShiftedShape;
use specht_core::theorems::{
    check_he_grades, specht_ideal, specht_monomial_ideal, squarefree_power, y_ideal, CheckConfig, Outcome,
    SpechtIdealSpec,
};
use specht_core::{Error, FieldSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Example {
    /// The basis of V(5,1,3).
    #[value(name = "513")]
    E513,
    /// The base case I(3,1).
    #[value(name = "i31")]
    I31,
    /// I(5,2) in characteristic 2.
    #[value(name = "p23")]
    P23,
}

impl Example {
    pub fn name(self) -> &'static str {
        match self {
            Example::E513 => "513",
            Example::I31 => "i31",
            Example::P23 => "p23",
        }
    }
}

pub fn golden(example: Example) -> &'static str {
    match example {
        Example::E513 => include_str!("../golden/513.txt"),
        Example::I31 => include_str!("../golden/i31.txt"),
        Example::P23 => include_str!("../golden/p23.txt"),
    }
}

pub fn render(example: Example, cfg: &CheckConfig) -> Result<String, Error> {
    match example {
        Example::E513 => example_513(),
        Example::I31 => example_i31(cfg),
        Example::P23 => example_p23(cfg),
    }
}

fn outcome(o: Outcome) -> &'static str {
    match o {
        Outcome::Holds => "holds",
        Outcome::Fails => "fails",
        Outcome::Inconclusive => "inconclusive",
    }
}

fn embed(i: &Ideal, n: usize) -> Result<Ideal, Error> {
    let gens = i.generators().iter().map(|g| g.with_nvars(n)).collect::<Result<Vec<_>, _>>()?;
    Ideal::new(i.field(), n, gens)
}

fn example_513() -> Result<String, Error> {
    let b = module_basis(ShiftedShape::new(5, 1, 3)?, FieldSpec::Rationals);
    let mut out = format!("V(5,1,3) over q: {} standard tableaux\n", b.tableaux.len());
    for (t, f) in b.tableaux.iter().zip(&b.polynomials) {
        let _ = writeln!(out, "{t}  {f}");
    }
    let _ = writeln!(out, "rank of the coefficient matrix: {}", b.matrix.rank());
    Ok(out)
}

fn example_i31(cfg: &CheckConfig) -> Result<String, Error> {
    let q = FieldSpec::Rationals;
    let i = specht_monomial_ideal(3, 1, q)?;
    let mut out = String::from("I(3,1) over q\nreduced grevlex basis:\n");
    for g in i.groebner_basis(&MonomialOrder::GrevLex) {
        let _ = writeln!(out, "  {g}");
    }
    let h = i.hilbert_data()?;
    let _ = writeln!(out, "hilbert numerator: {}", h.numerator_string());
    let _ = writeln!(out, "krull dimension: {}, length: {}", h.krull_dim, h.multiplicity());
    let a = specht_ideal(SpechtIdealSpec { n: 3, k: 1, d: 1, field: q })?;
    let he = check_he_grades(&a, &squarefree_power(3, 2, q))?;
    let _ = writeln!(
        out,
        "heights of a(3,1,1), (x1,x2,x3)^(2), I(3,1): {}, {}, {}",
        he.height_i, he.height_j, he.height_sum
    );
    let seq = match cm_certify(&i, cfg.cm_trials, cfg.seed)? {
        CmVerdict::CertifiedCM(seq) => format!("certified, regular sequence of length {}", seq.len()),
        CmVerdict::Inconclusive => "inconclusive".into(),
    };
    let _ = writeln!(out, "Cohen-Macaulay: {seq}");
    let (chain, notes) = cfg.specht_chain_perfection(3, 1, q)?;
    let _ = writeln!(out, "Specht chain: {}", outcome(chain));
    for n in notes {
        let _ = writeln!(out, "  {n}");
    }
    Ok(out)
}

fn example_p23(cfg: &CheckConfig) -> Result<String, Error> {
    let f2 = FieldSpec::prime(2)?;
    let mut out = String::from("I(5,2) over fp:2\n");
    let lhs = specht_monomial_ideal(5, 2, f2)?;
    let rhs = embed(&specht_monomial_ideal(4, 1, f2)?, 5)?.intersect(&y_ideal(5, 2, f2)?)?;
    let v = cfg.check_thm_perfect_d(5, 2, f2)?;
    let _ = writeln!(out, "I(5,2) = I(4,1) ∩ ((y_1..y_4)^(2) + (x_5^2)): {}", outcome(v.outcome));
    if let Some(w) = &v.witness {
        let _ = writeln!(out, "  witness: {w}");
    }
    let probes: [(&str, Polynomial); 2] = [
        ("e2(x1,x2,x3)", elementary_symmetric(2, &[1, 2, 3], 5, f2)?),
        ("e2(x1,x2,x3,x4)", elementary_symmetric(2, &[1, 2, 3, 4], 5, f2)?),
    ];
    for (name, p) in probes {
        let _ = writeln!(
            out,
            "  {name}: in the intersection {}, in I(5,2) {}",
            rhs.contains(&p)?,
            lhs.contains(&p)?
        );
    }
    let assoc = embedded_max_prime(&lhs)? == MaxPrimeVerdict::MaxIdealAssociated;
    let _ = writeln!(out, "maximal ideal is an associated prime: {assoc}");
    let h = lhs.hilbert_data()?;
    let _ = writeln!(out, "krull dimension: {}, height: {}", h.krull_dim, h.height);
    let primary = cfg.check_primary_shape(5, 2, f2)?;
    let _ = writeln!(out, "I(5,2) = intersection of its 5 primary translates: {}", outcome(primary.outcome));
    let (chain, notes) = cfg.specht_chain_perfection(5, 2, f2)?;
    let _ = writeln!(out, "Specht chain: {}", outcome(chain));
    for n in notes {
        let _ = writeln!(out, "  {n}");
    }
    let q = FieldSpec::Rationals;
    let (ink_q, _) = cfg.ink_perfection(5, 2, q)?;
    let _ = writeln!(
        out,
        "over q: decomposition {}, I(5,2) perfect {}",
        outcome(cfg.check_thm_perfect_d(5, 2, q)?.outcome),
        outcome(ink_q)
    );
    Ok(out)
}

/// Line-by-line differences, `-` for golden and `+` for actual.
pub fn diff(golden: &str, actual: &str) -> String {
    let g: Vec<&str> = golden.lines().collect();
    let a: Vec<&str> = actual.lines().collect();
    let mut out = String::new();
    for i in 0..g.len().max(a.len()) {
        match (g.get(i), a.get(i)) {
            (Some(x), Some(y)) if x == y => {}
            (x, y) => {
                if let Some(x) = x {
                    let _ = writeln!(out, "-{x}");
                }
                if let Some(y) = y {
                    let _ = writeln!(out, "+{y}");
                }
            }
        }
    }
    out
}
