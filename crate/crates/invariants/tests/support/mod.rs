#![allow(dead_code)]

pub mod macaulay;

use localstd_core::{rat, Monomial, MonomialOrder, QPoly};
use rand::Rng;

/// Polynomial from `(coefficient, exponents)` pairs.
pub fn q(order: MonomialOrder, terms: &[(i64, &[u32])]) -> QPoly {
    let arity = terms.first().map(|(_, e)| e.len()).unwrap_or(1);
    QPoly::from_terms(arity, order, terms.iter().map(|(c, e)| (Monomial::new(e.to_vec()), rat(*c, 1))))
}

/// Partial derivatives, zeros dropped.
pub fn jacobian(f: &QPoly) -> Vec<QPoly> {
    (0..f.arity()).map(|i| f.partial(i).unwrap()).filter(|p| !p.is_zero()).collect()
}

pub fn tyurina_gens(f: &QPoly) -> Vec<QPoly> {
    let mut v = vec![f.clone()];
    v.extend(jacobian(f));
    v
}

/// A random polynomial with small integer coefficients, no constant or
/// linear part, and total degree at most `max_degree`.
pub fn random_singular<R: Rng>(rng: &mut R, arity: usize, max_degree: u32, terms: usize) -> QPoly {
    let mut out = Vec::new();
    for _ in 0..terms {
        let d = rng.gen_range(2..=max_degree);
        let mut e = vec![0u32; arity];
        for _ in 0..d {
            e[rng.gen_range(0..arity)] += 1;
        }
        let mut c = rng.gen_range(-4i64..=4);
        if c == 0 {
            c = 1;
        }
        out.push((Monomial::new(e), rat(c, 1)));
    }
    QPoly::from_terms(arity, MonomialOrder::grevlex(), out)
}
