//! Acceptance criteria 1 to 12. Each criterion prints one PASS/FAIL line; all comparisons are
//! exact and every criterion has a pinned runtime limit.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use specht_core::arith::binomial;
use specht_core::combin::{index_subsets, permutations};
use specht_core::groebner::{cm_certify, embedded_max_prime, CmVerdict, Ideal, MaxPrimeVerdict};
use specht_core::lefschetz::{
    check_sl2_relations, has_slp, has_wlp, slp_threshold_predicate, wlp_threshold_predicate,
};
use specht_core::poly::{elementary_symmetric, parse_polynomial};
use specht_core::specht::{module_basis, specht_polynomial, straighten};
use specht_core::tableaux::{count_paths, count_subdiagonal, count_touching, enumerate_standard, LatticePath};
use specht_core::tableaux::{ShiftedShape, Tableau};
use specht_core::theorems::{
    check_coc, check_thm_perfect_d, check_thm_rad_d, intersect_all, specht_ideal, specht_monomial_ideal,
    squarefree_power, translate_ideal, y_ideal, SpechtIdealSpec,
};
use specht_core::FieldSpec;

const Q: FieldSpec = FieldSpec::Rationals;

fn fp(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn field_from_char(p: u64) -> FieldSpec {
    if p == 0 { Q } else { fp(p) }
}

type Check = fn() -> Result<String, String>;

struct Criterion {
    id: u8,
    name: &'static str,
    limit: Duration,
    check: Check,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn shapes_up_to(n: usize) -> impl Iterator<Item = ShiftedShape> {
    (0..=n).flat_map(ShiftedShape::all)
}

fn specht(n: usize, k: usize, d: usize, field: FieldSpec) -> Ideal {
    specht_ideal(SpechtIdealSpec { n, k, d, field }).unwrap()
}

fn dimension_formula() -> Result<String, String> {
    let mut count = 0;
    for n in 0..=10usize {
        for k in 0..=n {
            for d in k..=n.saturating_sub(k) {
                let s = ShiftedShape::new(n, k, d).map_err(|e| e.to_string())?;
                let want = binomial(n as u64, d as i64) - binomial(n as u64, k as i64 - 1);
                let got = BigInt::from(enumerate_standard(s).len());
                ensure!(got == want, "({n},{k},{d}): {got} standard tableaux, formula gives {want}");
                count += 1;
            }
        }
    }
    Ok(format!("{count} shapes, exact"))
}

fn example_513() -> Result<String, String> {
    let table = [
        ("2,4,5", "1,3", "x2*x4*x5 - x3*x4*x5"),
        ("2,3,5", "1,4", "x2*x3*x5 - x4*x3*x5"),
        ("2,3,4", "1,5", "x2*x3*x4 - x5*x3*x4"),
        ("1,4,5", "2,3", "x1*x4*x5 - x3*x4*x5"),
        ("1,3,5", "2,4", "x1*x3*x5 - x4*x3*x5"),
        ("1,3,4", "2,5", "x1*x3*x4 - x5*x3*x4"),
        ("1,2,5", "3,4", "x1*x2*x5 - x4*x2*x5"),
        ("1,2,4", "3,5", "x1*x2*x4 - x5*x2*x4"),
        ("1,2,3", "4,5", "x1*x2*x3 - x5*x2*x3"),
    ];
    let b = module_basis(ShiftedShape::new(5, 1, 3).unwrap(), Q);
    ensure!(b.tableaux.len() == 9, "{} basis elements", b.tableaux.len());
    for (top, bottom, f) in table {
        let name = format!("top={top};bottom={bottom}");
        let idx = b
            .tableaux
            .iter()
            .position(|t| t.to_string() == name)
            .ok_or_else(|| format!("{name} is not a standard tableau of the basis"))?;
        let want = parse_polynomial(f, Q, 5).unwrap();
        ensure!(b.polynomials[idx] == want, "{name}: got {}, table has {want}", b.polynomials[idx]);
    }
    let golden = include_str!("../../cli/golden/513.txt");
    let rendered: Vec<String> = b.tableaux.iter().zip(&b.polynomials).map(|(t, f)| format!("{t}  {f}")).collect();
    let golden_rows: Vec<&str> = golden.lines().filter(|l| l.starts_with("top=")).collect();
    ensure!(golden_rows == rendered, "golden file differs:\n{golden_rows:?}\n{rendered:?}");
    Ok("9 polynomials equal the table with pinned signs; golden file identical".into())
}

fn straightening() -> Result<String, String> {
    let mut count = 0;
    for s in shapes_up_to(6) {
        for perm in permutations(s.n) {
            let t = Tableau::new(s, perm[..s.d].to_vec(), perm[s.d..].to_vec()).map_err(|e| e.to_string())?;
            let v = straighten(&t, Q).map_err(|e| format!("{t}: {e}"))?;
            ensure!(v.expand() == specht_polynomial(&t, Q), "{t}: expansion differs from F_T");
            count += 1;
        }
    }
    Ok(format!("{count} tableaux, exact polynomial equality"))
}

fn sl2() -> Result<String, String> {
    for f in [Q, fp(2), fp(3), fp(5)] {
        for n in 0..=8 {
            ensure!(check_sl2_relations(n, f), "relations fail for n={n} over {f}");
        }
    }
    Ok("n <= 8 over q, fp:2, fp:3, fp:5".into())
}

const CHARS: [u64; 7] = [2, 3, 5, 7, 11, 13, 0];

fn wlp() -> Result<String, String> {
    for p in CHARS {
        for n in 0..=10 {
            let f = field_from_char(p);
            ensure!(has_wlp(n, f) == wlp_threshold_predicate(n, p), "n={n} over {f}");
        }
    }
    ensure!(!has_wlp(4, fp(2)) && has_wlp(4, fp(3)), "n=4 pivot between fp:2 and fp:3");
    Ok("n <= 10, 7 characteristics".into())
}

fn slp() -> Result<String, String> {
    for p in CHARS {
        for n in 0..=8 {
            let f = field_from_char(p);
            ensure!(has_slp(n, f) == slp_threshold_predicate(n, p), "n={n} over {f}");
        }
    }
    Ok("n <= 8, 7 characteristics".into())
}

fn rad_d() -> Result<String, String> {
    let mut count = 0;
    for f in [Q, fp(2), fp(3)] {
        for s in shapes_up_to(6).filter(|s| s.d > s.k) {
            let v = check_thm_rad_d(s.n, s.k, s.d, f).map_err(|e| e.to_string())?;
            ensure!(v.holds(), "({},{},{}) over {f}: witness {:?}", s.n, s.k, s.d, v.witness);
            count += 1;
        }
    }
    Ok(format!("{count} instances"))
}

fn perfect_d() -> Result<String, String> {
    let mut count = 0;
    for f in [Q, fp(2), fp(3), fp(5)] {
        for n in 3..=5usize {
            for k in 1..=(n - 1) / 2 {
                let v = check_thm_perfect_d(n, k, f).map_err(|e| e.to_string())?;
                ensure!(v.agrees() == Some(true), "({n},{k}) over {f}: {:?} vs expected {}", v.outcome, v.expected);
                count += 1;
            }
        }
    }
    let f2 = fp(2);
    let v = check_thm_perfect_d(5, 2, f2).map_err(|e| e.to_string())?;
    let w = v.witness.ok_or("no witness for (5,2) over fp:2")?;
    let w = parse_polynomial(&w, f2, 5).map_err(|e| e.to_string())?;
    let lhs = specht_monomial_ideal(5, 2, f2).unwrap();
    let below = specht_monomial_ideal(4, 1, f2).unwrap();
    let below = Ideal::new(f2, 5, below.generators().iter().map(|g| g.with_nvars(5).unwrap()).collect()).unwrap();
    let rhs = below.intersect(&y_ideal(5, 2, f2).unwrap()).unwrap();
    ensure!(rhs.contains(&w).unwrap(), "witness {w} is not in the intersection");
    ensure!(!lhs.contains(&w).unwrap(), "witness {w} lies in I(5,2)");
    let e2 = elementary_symmetric(2, &[1, 2, 3, 4], 5, f2).unwrap();
    let e2_valid = rhs.contains(&e2).unwrap() && !lhs.contains(&e2).unwrap();
    Ok(format!(
        "{count} instances agree; witness {w} confirmed; e2(x1..x4) separates over fp:2: {e2_valid}"
    ))
}

fn perfection_chain() -> Result<String, String> {
    for (n, k) in [(3, 1), (4, 1), (5, 2)] {
        let i = specht_monomial_ideal(n, k, Q).unwrap();
        ensure!(
            matches!(cm_certify(&i, 20, 1).unwrap(), CmVerdict::CertifiedCM(_)),
            "I({n},{k}) over q not certified"
        );
    }
    let i52 = specht_monomial_ideal(5, 2, fp(2)).unwrap();
    ensure!(
        embedded_max_prime(&i52).unwrap() == MaxPrimeVerdict::MaxIdealAssociated,
        "I(5,2) over fp:2: maximal ideal not associated"
    );
    let mut count = 0;
    for s in shapes_up_to(5).filter(|s| s.d > 0) {
        let h = specht(s.n, s.k, s.d, Q).hilbert_data().unwrap().height;
        let want = if s.k == 0 { s.n - s.d + 1 } else { (s.n - s.k).min(s.n - s.d + 1) };
        ensure!(h == want, "height of a({},{},{}) is {h}, expected {want}", s.n, s.k, s.d);
        let hm = squarefree_power(s.n, s.d, Q).hilbert_data().unwrap().height;
        ensure!(hm == s.n - s.d + 1, "height of m^({}) in {} variables is {hm}", s.d, s.n);
        count += 1;
    }
    Ok(format!("certificates as stated; {count} height checks"))
}

fn radical_identity() -> Result<String, String> {
    let mut failures = Vec::new();
    for (m, h) in [(4usize, 3usize), (5, 4), (5, 3)] {
        for f in [Q, fp(2)] {
            let parts: Vec<Ideal> = index_subsets(m, h)
                .iter()
                .map(|s| translate_ideal(m, s, false, f).unwrap())
                .collect();
            let inter = intersect_all(&parts).unwrap();
            let k1 = m - h + 1;
            match specht_ideal(SpechtIdealSpec { n: m, k: k1, d: k1, field: f }) {
                Ok(a) => {
                    if !inter.equals(&a).unwrap() {
                        failures.push(format!("(m,h)=({m},{h}) over {f}: intersection differs from a({m},{k1},{k1})"));
                    }
                }
                Err(e) => failures.push(format!("(m,h)=({m},{h}) over {f}: a({m},{k1},{k1}): {e}")),
            }
        }
    }
    if failures.is_empty() {
        Ok("3 pairs over q and fp:2".into())
    } else {
        Err(failures.join("; "))
    }
}

fn change_of_coordinates() -> Result<String, String> {
    let mut count = 0;
    for f in [Q, fp(2), fp(3), fp(5)] {
        for n in 2..=6usize {
            for k in 1..=n / 2 {
                let v = check_coc(n, k, f).map_err(|e| e.to_string())?;
                ensure!(v.holds(), "({n},{k}) over {f}: {:?} {:?}", v.witness, v.notes);
                count += 1;
            }
        }
    }
    Ok(format!("{count} instances"))
}

fn lattice_paths() -> Result<String, String> {
    let mut count = 0;
    for total in 0..=12usize {
        for north in 0..=total {
            let east = total - north;
            let paths = LatticePath::all(east, north);
            let to = (east as i64, north as i64);
            ensure!(count_paths((0, 0), to).unwrap() == BigInt::from(paths.len()), "paths to {to:?}");
            for c in (north as i64 - east as i64 + 1).max(1)..=13 {
                let brute = paths.iter().filter(|p| !p.stays_below(c - 1)).count();
                ensure!(count_touching((0, 0), to, c).unwrap() == BigInt::from(brute), "touching y=x+{c} to {to:?}");
                count += 1;
            }
        }
    }
    for s in shapes_up_to(12) {
        let brute = LatticePath::all(s.n - s.d, s.d)
            .iter()
            .filter(|p| p.stays_below((s.d - s.k) as i64))
            .count();
        ensure!(count_subdiagonal(s) == BigInt::from(brute), "subdiagonal count for {s:?}");
        count += 1;
    }
    Ok(format!("{count} endpoint/line pairs, exact"))
}

const CRITERIA: [Criterion; 12] = [
    Criterion { id: 1, name: "dimension formula", limit: Duration::from_secs(10), check: dimension_formula },
    Criterion { id: 2, name: "basis of V(5,1,3)", limit: Duration::from_secs(1), check: example_513 },
    Criterion { id: 3, name: "straightening soundness", limit: Duration::from_secs(60), check: straightening },
    Criterion { id: 4, name: "sl2 relations", limit: Duration::from_secs(30), check: sl2 },
    Criterion { id: 5, name: "WLP threshold", limit: Duration::from_secs(60), check: wlp },
    Criterion { id: 6, name: "SLP threshold", limit: Duration::from_secs(60), check: slp },
    Criterion { id: 7, name: "radD decomposition", limit: Duration::from_secs(300), check: rad_d },
    Criterion { id: 8, name: "I(n,k) decomposition threshold", limit: Duration::from_secs(300), check: perfect_d },
    Criterion { id: 9, name: "perfection chain", limit: Duration::from_secs(300), check: perfection_chain },
    Criterion { id: 10, name: "h-equals radical identity", limit: Duration::from_secs(180), check: radical_identity },
    Criterion { id: 11, name: "change of coordinates", limit: Duration::from_secs(120), check: change_of_coordinates },
    Criterion { id: 12, name: "lattice path counts", limit: Duration::from_secs(10), check: lattice_paths },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > c.limit => Err(format!("{msg}; exceeded runtime limit")),
            o => o,
        };
        let (status, msg) = match outcome {
            Ok(msg) => ("PASS", msg),
            Err(msg) => {
                failed += 1;
                ("FAIL", msg)
            }
        };
        println!(
            "criterion {:>2} {status} [{}] {:.2}s (limit {}s, tolerance exact): {msg}",
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
