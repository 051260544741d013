//! Independent dimension oracle: rank of truncated Macaulay matrices.
//!
//! The span of all products `m * g` with total degree at most `D` is brought
//! to semi-echelon form with columns sorted by decreasing degree. Rows whose
//! leading column has degree at most `d` then span the truncated ideal part in
//! degree `<= d`, which gives the affine Hilbert function `h(d)` of the
//! truncation. A plateau `h(d) = h(d - 1)` means every degree-`d` monomial is
//! congruent to lower ones, so the ideal is zero-dimensional.
//!
//! Small matrices are eliminated over Q. Larger ones are eliminated modulo two
//! 61-bit primes; both runs must agree, and each is exact in its field.

#![allow(dead_code)]

use std::collections::HashMap;

use localstd_core::{BigInt, BigRational, One, QPoly, Zero};

/// Column count above which elimination switches to prime fields.
const RATIONAL_LIMIT: usize = 600;
const PRIMES: [u64; 2] = [2_305_843_009_213_693_951, 2_305_843_009_213_693_921];

trait Field: Clone + PartialEq {
    fn zero(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
}

impl Field for BigRational {
    fn zero(&self) -> Self {
        <BigRational as Zero>::zero()
    }
    fn is_zero(&self) -> bool {
        <BigRational as Zero>::is_zero(self)
    }
    fn inv(&self) -> Self {
        BigRational::one() / self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
}

#[derive(Clone, Copy, PartialEq)]
struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    fn from_rational(q: &BigRational, p: u64) -> Fp {
        let reduce = |n: &BigInt| {
            let r = (n % BigInt::from(p) + BigInt::from(p)) % BigInt::from(p);
            u64::try_from(r).expect("reduced")
        };
        let num = Fp { v: reduce(q.numer()), p };
        let den = Fp { v: reduce(q.denom()), p };
        assert!(den.v != 0, "prime divides a denominator");
        num.mul(&den.inv())
    }
}

impl Field for Fp {
    fn zero(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn inv(&self) -> Self {
        let (mut base, mut e, mut acc) = (*self, self.p - 2, Fp { v: 1, p: self.p });
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
    fn mul(&self, o: &Self) -> Self {
        Fp { v: ((self.v as u128 * o.v as u128) % self.p as u128) as u64, p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        Fp { v: if self.v >= o.v { self.v - o.v } else { self.v + self.p - o.v }, p: self.p }
    }
}

pub struct Truncation {
    pub degree: u32,
    /// `h[d]` for `d = 0..=degree`.
    pub hilbert: Vec<usize>,
}

fn monomials(arity: usize, bound: u32) -> Vec<Vec<u32>> {
    fn rec(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Vec<u32>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            rec(cur, pos + 1, left - e, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    rec(&mut vec![0; arity], 0, bound, &mut out);
    out
}

fn deg(e: &[u32]) -> u32 {
    e.iter().sum()
}

/// Leading columns of a semi-echelon basis of the row span.
fn pivot_columns<F: Field>(rows: Vec<Vec<(usize, F)>>, ncols: usize) -> Vec<usize> {
    let mut pivots: Vec<Option<Vec<(usize, F)>>> = vec![None; ncols];
    let mut found = Vec::new();
    let Some(sample) = rows.iter().flat_map(|r| r.first()).next().map(|(_, c)| c.zero()) else {
        return found;
    };
    let mut acc: Vec<F> = vec![sample.clone(); ncols];
    for row in rows {
        let Some(start) = row.first().map(|(c, _)| *c) else { continue };
        for (c, v) in &row {
            acc[*c] = v.clone();
        }
        let mut c = start;
        while c < ncols {
            if acc[c].is_zero() {
                c += 1;
                continue;
            }
            let lead = acc[c].clone();
            match &pivots[c] {
                Some(p) => {
                    for (k, v) in p {
                        acc[*k] = acc[*k].sub(&lead.mul(v));
                    }
                }
                None => {
                    let inv = lead.inv();
                    let piv: Vec<(usize, F)> = (c..ncols)
                        .filter(|&k| !acc[k].is_zero())
                        .map(|k| (k, acc[k].mul(&inv)))
                        .collect();
                    for a in &mut acc[c..ncols] {
                        *a = sample.clone();
                    }
                    pivots[c] = Some(piv);
                    found.push(c);
                    break;
                }
            }
        }
    }
    found
}

/// Affine Hilbert function of the degree-`bound` truncation of the ideal.
pub fn truncate(gens: &[QPoly], arity: usize, bound: u32) -> Truncation {
    let mut cols = monomials(arity, bound);
    cols.sort_by(|a, b| deg(b).cmp(&deg(a)).then_with(|| b.cmp(a)));
    let index: HashMap<Vec<u32>, usize> = cols.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();

    let mut products: Vec<(u32, Vec<(usize, BigRational)>)> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let gd = g.degree();
        if gd > bound {
            continue;
        }
        for m in monomials(arity, bound - gd) {
            let mut row: Vec<(usize, BigRational)> = g
                .terms()
                .iter()
                .map(|(e, c)| {
                    let p: Vec<u32> = e.exps().iter().zip(&m).map(|(a, b)| a + b).collect();
                    (index[&p], c.clone())
                })
                .collect();
            row.sort_by_key(|(c, _)| *c);
            products.push((gd + deg(&m), row));
        }
    }
    products.sort_by_key(|(d, _)| *d);
    let rows: Vec<Vec<(usize, BigRational)>> = products.into_iter().map(|(_, r)| r).collect();

    let leads = if cols.len() <= RATIONAL_LIMIT {
        pivot_columns(rows, cols.len())
    } else {
        let mut runs = PRIMES.iter().map(|&p| {
            let modular = rows
                .iter()
                .map(|r| r.iter().map(|(c, q)| (*c, Fp::from_rational(q, p))).filter(|(_, v)| v.v != 0).collect())
                .collect();
            let mut l = pivot_columns(modular, cols.len());
            l.sort();
            l
        });
        let first = runs.next().expect("two primes");
        assert!(runs.all(|l| l == first), "prime fields disagree on the rank profile");
        first
    };

    let mut per_degree_cols = vec![0usize; bound as usize + 1];
    let mut per_degree_piv = vec![0usize; bound as usize + 1];
    for m in &cols {
        per_degree_cols[deg(m) as usize] += 1;
    }
    for lead in leads {
        per_degree_piv[deg(&cols[lead]) as usize] += 1;
    }
    let mut hilbert = vec![0usize; bound as usize + 1];
    let mut run = 0usize;
    for d in 0..=bound as usize {
        run += per_degree_cols[d] - per_degree_piv[d];
        hilbert[d] = run;
    }
    Truncation { degree: bound, hilbert }
}

/// `dim Q[x]/I` when the truncation shows a plateau at half the bound,
/// `None` otherwise (the ideal is taken to be positive-dimensional).
pub fn quotient_dimension(gens: &[QPoly], arity: usize, bound: u32) -> Option<usize> {
    let t = truncate(gens, arity, bound);
    let mid = (bound / 2).max(1) as usize;
    if t.hilbert[mid] == t.hilbert[mid - 1] {
        Some(t.hilbert[mid])
    } else {
        None
    }
}

/// The default bound: twice the product of arity and maximal generator degree.
pub fn default_bound(gens: &[QPoly], arity: usize) -> u32 {
    let d = gens.iter().map(|g| g.degree()).max().unwrap_or(1).max(1);
    2 * d * arity as u32
}
