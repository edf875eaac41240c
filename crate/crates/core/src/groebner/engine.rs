//! Buchberger's algorithm with the sugar strategy and the Gebauer–Möller pair update.

use std::cmp::Ordering;

use smallvec::SmallVec;

use crate::arith::{FieldSpec, Scalar};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Integer sort key; lexicographic comparison of keys agrees with the term order, and the key
/// of a product is the sum of the keys.
pub(crate) type Key = SmallVec<[i32; 16]>;

pub(crate) fn order_key(order: &MonomialOrder, m: &Monomial) -> Key {
    let e = m.exponents();
    let n = e.len();
    let revlex = |key: &mut Key, idx: &mut dyn Iterator<Item = usize>| {
        let idx: Vec<usize> = idx.collect();
        key.push(idx.iter().map(|&i| e[i] as i32).sum());
        key.extend(idx.iter().rev().map(|&i| -(e[i] as i32)));
    };
    let mut key = Key::new();
    match order {
        MonomialOrder::GrevLex => revlex(&mut key, &mut (0..n)),
        MonomialOrder::Lex => key.extend(e.iter().map(|&x| x as i32)),
        MonomialOrder::BlockElimination(block) => {
            revlex(&mut key, &mut (0..n).filter(|i| block.contains(i)));
            revlex(&mut key, &mut (0..n).filter(|i| !block.contains(i)));
        }
    }
    key
}

fn add_keys(a: &Key, b: &Key) -> Key {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_keys(a: &Key, b: &Key) -> Key {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[derive(Clone, Debug)]
pub(crate) struct Term {
    key: Key,
    mono: Monomial,
    coef: Scalar,
}

/// Terms in increasing order; the leading term is last.
#[derive(Clone, Debug)]
pub(crate) struct Poly {
    terms: Vec<Term>,
    sugar: u32,
}

impl Poly {
    pub(crate) fn from_polynomial(p: &Polynomial, order: &MonomialOrder) -> Poly {
        let mut terms: Vec<Term> = p
            .terms()
            .map(|(m, c)| Term {
                key: order_key(order, m),
                mono: m.clone(),
                coef: c.clone(),
            })
            .collect();
        terms.sort_by(|a, b| a.key.cmp(&b.key));
        Poly {
            terms,
            sugar: p.total_degree().unwrap_or(0),
        }
    }

    pub(crate) fn to_polynomial(&self, field: FieldSpec, nvars: usize) -> Polynomial {
        Polynomial::from_terms(field, nvars, self.terms.iter().map(|t| (t.mono.clone(), t.coef.clone())))
    }

    fn lead(&self) -> &Term {
        self.terms.last().expect("nonzero")
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.lead().mono.is_one()
    }

    fn monic(&mut self) {
        let inv = self.lead().coef.inv().expect("nonzero leading coefficient");
        if !inv.is_one() {
            for t in &mut self.terms {
                t.coef = &t.coef * &inv;
            }
        }
    }
}

/// `a - c * x^m * b` for increasing term lists.
fn sub_scaled(a: &[Term], c: &Scalar, mkey: &Key, m: &Monomial, b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let shifted = |t: &Term| Term {
        key: add_keys(&t.key, mkey),
        mono: t.mono.mul(m),
        coef: -&(c * &t.coef),
    };
    while i < a.len() || j < b.len() {
        if j == b.len() {
            out.extend_from_slice(&a[i..]);
            break;
        }
        let bt = shifted(&b[j]);
        if i == a.len() {
            out.push(bt);
            j += 1;
            continue;
        }
        match a[i].key.cmp(&bt.key) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(bt);
                j += 1;
            }
            Ordering::Equal => {
                let s = &a[i].coef + &bt.coef;
                if !s.is_zero() {
                    out.push(Term { coef: s, ..bt });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

struct Reducer<'a> {
    basis: Vec<&'a Poly>,
    masks: Vec<u64>,
}

impl<'a> Reducer<'a> {
    fn new(basis: Vec<&'a Poly>) -> Self {
        let masks = basis.iter().map(|g| g.lead().mono.divmask()).collect();
        Reducer { basis, masks }
    }

    fn divisor(&self, m: &Monomial) -> Option<&'a Poly> {
        let mask = m.divmask();
        self.basis
            .iter()
            .zip(&self.masks)
            .find(|(g, &gm)| gm & !mask == 0 && g.lead().mono.divides(m))
            .map(|(g, _)| *g)
    }

    /// Fully reduces `f` against monic basis elements.
    fn reduce(&self, mut f: Poly) -> Poly {
        let mut rest: Vec<Term> = Vec::new();
        while let Some(lead) = f.terms.pop() {
            match self.divisor(&lead.mono) {
                Some(g) => {
                    let gl = g.lead();
                    let q = gl.mono.quotient_of(&lead.mono);
                    let qkey = sub_keys(&lead.key, &gl.key);
                    f.sugar = f.sugar.max(q.degree() + g.sugar);
                    f.terms = sub_scaled(&f.terms, &lead.coef, &qkey, &q, &g.terms[..g.terms.len() - 1]);
                }
                None => rest.push(lead),
            }
        }
        rest.reverse();
        f.terms = rest;
        f
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    key: Key,
    sugar: u32,
}

fn make_pair(polys: &[Poly], i: usize, j: usize, order: &MonomialOrder) -> Pair {
    let (a, b) = (polys[i].lead(), polys[j].lead());
    let lcm = a.mono.lcm(&b.mono);
    let sugar = (polys[i].sugar + lcm.degree() - a.mono.degree()).max(polys[j].sugar + lcm.degree() - b.mono.degree());
    Pair {
        i,
        j,
        key: order_key(order, &lcm),
        lcm,
        sugar,
    }
}

fn s_polynomial(polys: &[Poly], p: &Pair) -> Poly {
    let (f, g) = (&polys[p.i], &polys[p.j]);
    let (fl, gl) = (f.lead(), g.lead());
    let mf = fl.mono.quotient_of(&p.lcm);
    let mg = gl.mono.quotient_of(&p.lcm);
    let kf = sub_keys(&p.key, &fl.key);
    let kg = sub_keys(&p.key, &gl.key);
    let ftail: Vec<Term> = f.terms[..f.terms.len() - 1]
        .iter()
        .map(|t| Term {
            key: add_keys(&t.key, &kf),
            mono: t.mono.mul(&mf),
            coef: t.coef.clone(),
        })
        .collect();
    let one = fl.coef.field().one();
    Poly {
        terms: sub_scaled(&ftail, &one, &kg, &mg, &g.terms[..g.terms.len() - 1]),
        sugar: p.sugar,
    }
}

struct State<'o> {
    order: &'o MonomialOrder,
    polys: Vec<Poly>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    /// Gebauer–Möller update for a new basis element `h`.
    fn update(&mut self, h: usize) {
        let hl = self.polys[h].lead().mono.clone();
        let mut c: Vec<Pair> = self.active.iter().map(|&g| make_pair(&self.polys, g, h, self.order)).collect();
        let mut d: Vec<Pair> = Vec::new();
        while let Some(p) = c.pop() {
            let gl = &self.polys[p.i].lead().mono;
            let keep = hl.is_coprime(gl)
                || !c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
            if keep {
                d.push(p);
            }
        }
        let e: Vec<Pair> = d
            .into_iter()
            .filter(|p| !hl.is_coprime(&self.polys[p.i].lead().mono))
            .collect();
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(hl.divides(&p.lcm)
                && hl.lcm(&polys[p.i].lead().mono) != p.lcm
                && hl.lcm(&polys[p.j].lead().mono) != p.lcm)
        });
        self.pairs.extend(e);
        self.active.retain(|&g| !hl.divides(&polys[g].lead().mono));
        self.active.push(h);
    }

    fn reduce(&self, f: Poly) -> Poly {
        Reducer::new(self.active.iter().map(|&i| &self.polys[i]).collect()).reduce(f)
    }

    /// Inserts a reduced nonzero element; returns true when it is a unit.
    fn insert(&mut self, mut h: Poly) -> bool {
        h.monic();
        let unit = h.is_constant();
        self.polys.push(h);
        self.update(self.polys.len() - 1);
        unit
    }
}

/// Reduced Gröbner basis, monic, sorted by increasing leading monomial.
pub(crate) fn reduced_basis(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Poly> {
    let mut input: Vec<Poly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Poly::from_polynomial(g, order))
        .collect();
    input.sort_by(|a, b| (a.sugar, &a.lead().key).cmp(&(b.sugar, &b.lead().key)));
    let mut st = State {
        order,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in input {
        let h = st.reduce(g);
        if !h.terms.is_empty() && st.insert(h) {
            return unit_basis(&st.polys);
        }
    }
    while !st.pairs.is_empty() {
        let best = (0..st.pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&st.pairs[a], &st.pairs[b]);
                (p.sugar, &p.key).cmp(&(q.sugar, &q.key))
            })
            .expect("nonempty");
        let pair = st.pairs.swap_remove(best);
        let s = s_polynomial(&st.polys, &pair);
        let h = st.reduce(s);
        if !h.terms.is_empty() && st.insert(h) {
            return unit_basis(&st.polys);
        }
    }
    interreduce(st.active.iter().map(|&i| st.polys[i].clone()).collect())
}

fn unit_basis(polys: &[Poly]) -> Vec<Poly> {
    vec![polys.last().expect("unit").clone()]
}

fn interreduce(mut g: Vec<Poly>) -> Vec<Poly> {
    g.sort_by(|a, b| a.lead().key.cmp(&b.lead().key));
    let mut out = Vec::with_capacity(g.len());
    for i in 0..g.len() {
        let others: Vec<&Poly> = g.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p).collect();
        let mut p = g[i].clone();
        let lead = p.terms.pop().expect("nonzero");
        let tail = Reducer::new(others).reduce(p);
        let mut terms = tail.terms;
        terms.push(lead);
        let mut q = Poly { terms, sugar: g[i].sugar };
        q.monic();
        out.push(q);
    }
    out
}

/// Normal form of `f` against a Gröbner basis for the same order.
pub(crate) fn normal_form(f: &Polynomial, basis: &[Poly], order: &MonomialOrder) -> Polynomial {
    let r = Reducer::new(basis.iter().collect()).reduce(Poly::from_polynomial(f, order));
    r.to_polynomial(f.field(), f.nvars())
}

pub(crate) fn leading_monomial(p: &Poly) -> &Monomial {
    &p.lead().mono
}
