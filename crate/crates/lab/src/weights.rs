//! Quasi-homogeneous weights and the Milnor-Orlik product.

use localstd_core::{BigInt, BigRational, One, QPoly, Signed, Zero};
use num_integer::Integer;

use crate::LabError;

/// Positive rational weights with `sum w_i a_i = 1` on the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub weights: Vec<BigRational>,
    /// `d * w_i`.
    pub integer_weights: Vec<BigInt>,
    /// Least common denominator of the weights.
    pub degree: BigInt,
}

impl WeightVector {
    pub fn new(weights: Vec<BigRational>) -> Self {
        let degree = weights.iter().fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let integer_weights = weights.iter().map(|w| (w * BigRational::from_integer(degree.clone())).to_integer()).collect();
        WeightVector { weights, integer_weights, degree }
    }

    /// Whether every monomial of `f` has weighted degree 1.
    pub fn certifies(&self, f: &QPoly) -> bool {
        f.terms().iter().all(|(m, _)| {
            let s: BigRational = m
                .exps()
                .iter()
                .zip(&self.weights)
                .map(|(&e, w)| w * BigRational::from_integer(BigInt::from(e)))
                .sum();
            s.is_one()
        })
    }
}

/// Row-reduced system with the pivot column of each row.
struct Reduced {
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

fn row_reduce(mut rows: Vec<Vec<BigRational>>, cols: usize) -> Option<Reduced> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = BigRational::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let k = rows[i][c].clone();
                let pivot = rows[r].clone();
                for (x, p) in rows[i][..=cols].iter_mut().zip(&pivot[..=cols]) {
                    *x = &*x - &k * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    rows.truncate(r);
    Some(Reduced { rows, pivots })
}

const MAX_DENOMINATOR: i64 = 12;
const MAX_TRIALS: usize = 200_000;

/// Weights making `f` quasi-homogeneous of degree 1, if any.
///
/// When the support does not determine the weights, free weights range
/// over `a/D` in `(0, 1]` with `D <= 12`, and the positive solution with
/// the smallest common denominator wins.
pub fn weight_vector(f: &QPoly) -> Option<WeightVector> {
    if f.is_zero() {
        return None;
    }
    let n = f.arity();
    let rows: Vec<Vec<BigRational>> = f
        .terms()
        .iter()
        .map(|(m, _)| {
            let mut row: Vec<BigRational> = m.exps().iter().map(|&e| BigRational::from_integer(BigInt::from(e))).collect();
            row.push(BigRational::one());
            row
        })
        .collect();
    let red = row_reduce(rows, n)?;
    let free: Vec<usize> = (0..n).filter(|c| !red.pivots.contains(c)).collect();
    let solve = |vals: &[BigRational]| -> Option<Vec<BigRational>> {
        let mut w = vec![BigRational::zero(); n];
        for (k, &c) in free.iter().enumerate() {
            w[c] = vals[k].clone();
        }
        for (row, &p) in red.rows.iter().zip(&red.pivots) {
            let mut v = row[n].clone();
            for (k, &c) in free.iter().enumerate() {
                v -= &row[c] * &vals[k];
            }
            w[p] = v;
        }
        w.iter().all(|x| x.is_positive()).then_some(w)
    };
    if free.is_empty() {
        return solve(&[]).map(WeightVector::new);
    }
    let mut best: Option<WeightVector> = None;
    let mut trials = 0usize;
    for d in 1..=MAX_DENOMINATOR {
        let mut nums = vec![1i64; free.len()];
        loop {
            trials += 1;
            if trials > MAX_TRIALS {
                return best;
            }
            let vals: Vec<BigRational> =
                nums.iter().map(|&a| BigRational::new(BigInt::from(a), BigInt::from(d))).collect();
            if let Some(w) = solve(&vals) {
                let cand = WeightVector::new(w);
                if best.as_ref().is_none_or(|b| cand.degree < b.degree) {
                    best = Some(cand);
                }
            }
            let mut k = 0;
            while k < nums.len() {
                nums[k] += 1;
                if nums[k] <= d {
                    break;
                }
                nums[k] = 1;
                k += 1;
            }
            if k == nums.len() {
                break;
            }
        }
    }
    best
}

/// `prod (1/w_i - 1)`.
pub fn milnor_orlik(w: &WeightVector) -> Result<BigRational, LabError> {
    let mut acc = BigRational::one();
    for (i, wi) in w.weights.iter().enumerate() {
        if !wi.is_positive() || *wi >= BigRational::one() {
            return Err(LabError::WeightOutOfRange { index: i });
        }
        acc *= wi.recip() - BigRational::one();
    }
    Ok(acc)
}
