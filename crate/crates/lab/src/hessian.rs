//! Second derivatives at the origin and exact linear algebra over any
//! coefficient field.

use localstd_core::{IntPoly, Poly, Scalar};

/// Matrix of second partial derivatives evaluated at the origin.
pub fn hessian_at_origin<C: Scalar>(f: &Poly<C>) -> Vec<Vec<C>> {
    let n = f.arity();
    let mut h = vec![vec![C::zero(); n]; n];
    for (m, c) in f.terms() {
        if m.degree() != 2 {
            continue;
        }
        let vars: Vec<usize> = (0..n).filter(|&i| m.exp(i) > 0).collect();
        match vars[..] {
            [i] => h[i][i] = c.mul_ref(&C::from_int(2)),
            [i, j] => {
                h[i][j] = c.clone();
                h[j][i] = c.clone();
            }
            _ => unreachable!("degree two"),
        }
    }
    h
}

/// Gaussian elimination; returns the echelon rows and pivot columns.
/// Every pivot's genericity conditions are appended to `conds`.
fn echelon<C: Scalar>(mut a: Vec<Vec<C>>, conds: &mut Vec<IntPoly>) -> (Vec<Vec<C>>, Vec<usize>, bool) {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut swapped = false;
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        if p != r {
            a.swap(r, p);
            swapped = !swapped;
        }
        for k in a[r][c].conditions() {
            if !conds.contains(&k) {
                conds.push(k);
            }
        }
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let k = a[i][c].div_ref(&a[r][c]);
            let pivot = a[r].clone();
            for (x, p) in a[i][c..cols].iter_mut().zip(&pivot[c..cols]) {
                *x = x.sub_ref(&k.mul_ref(p));
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots, swapped)
}

/// Determinant of a square matrix.
pub fn determinant<C: Scalar>(a: &[Vec<C>]) -> C {
    let n = a.len();
    let (e, pivots, swapped) = echelon(a.to_vec(), &mut Vec::new());
    if pivots.len() < n {
        return C::zero();
    }
    let d = (0..n).fold(C::one(), |acc, i| acc.mul_ref(&e[i][i]));
    if swapped {
        -d
    } else {
        d
    }
}

/// Rank of the Hessian at the origin. With parameters the rank is the
/// generic one; the returned conditions must not vanish for it to hold.
pub fn hessian_rank<C: Scalar>(f: &Poly<C>) -> (usize, Vec<IntPoly>) {
    let mut conds = Vec::new();
    let (_, pivots, _) = echelon(hessian_at_origin(f), &mut conds);
    (pivots.len(), conds)
}

/// Number of variables minus the rank of the Hessian at the origin.
pub fn hessian_corank<C: Scalar>(f: &Poly<C>) -> usize {
    f.arity() - hessian_rank(f).0
}

/// Basis of the kernel of a square matrix.
pub(crate) fn kernel<C: Scalar>(a: &[Vec<C>]) -> Vec<Vec<C>> {
    let n = a.first().map_or(0, |r| r.len());
    let (mut e, pivots, _) = echelon(a.to_vec(), &mut Vec::new());
    // Back substitution to reduced form.
    for (r, &c) in pivots.iter().enumerate().rev() {
        let inv = C::one().div_ref(&e[r][c]);
        for x in e[r].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        for i in 0..r {
            if e[i][c].is_zero() {
                continue;
            }
            let k = e[i][c].clone();
            let pivot = e[r].clone();
            for (x, p) in e[i][..n].iter_mut().zip(&pivot[..n]) {
                *x = x.sub_ref(&k.mul_ref(p));
            }
        }
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|fc| {
            let mut v = vec![C::zero(); n];
            v[fc] = C::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -e[r][fc].clone();
            }
            v
        })
        .collect()
}
