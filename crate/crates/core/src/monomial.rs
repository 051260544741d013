//! Exponent vectors over a fixed number of variables.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    /// The monomial 1 in `arity` variables.
    pub fn one(arity: usize) -> Self {
        Monomial { exps: vec![0; arity], degree: 0 }
    }

    pub fn var(arity: usize, i: usize) -> Self {
        let mut exps = vec![0; arity];
        exps[i] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / d` when `d` divides `self`.
    pub fn div(&self, d: &Monomial) -> Option<Monomial> {
        if !d.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&d.exps).map(|(a, b)| a - b).collect(),
            degree: self.degree - d.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// The variable index when the monomial is a pure power `x_i^k`, `k >= 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Derivative exponent change: `x_i^k -> x_i^(k-1)`, with the factor `k`.
    pub fn differentiate(&self, i: usize) -> Option<(u32, Monomial)> {
        let k = self.exps[i];
        if k == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some((k, Monomial { exps, degree: self.degree - 1 }))
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &k) in self.exps.iter().enumerate() {
            let name = names.get(i).cloned().unwrap_or_else(|| format!("x{}", i));
            match k {
                0 => {}
                1 => parts.push(name),
                _ => parts.push(format!("{}^{}", name, k)),
            }
        }
        parts.join("*")
    }

    /// All monomials in `arity` variables of total degree at most `bound`,
    /// generated in increasing lexicographic order of exponent vectors.
    pub fn up_to_degree(arity: usize, bound: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; arity];
        fill(&mut cur, 0, bound, &mut out);
        out
    }
}

fn fill(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Monomial>) {
    if pos == cur.len() {
        out.push(Monomial::new(cur.clone()));
        return;
    }
    for e in 0..=left {
        cur[pos] = e;
        fill(cur, pos + 1, left - e, out);
    }
    cur[pos] = 0;
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}
