//! Arnol'd's simple classes and their normal forms.

use std::fmt;
use std::str::FromStr;

use localstd_core::{BigRational, Monomial, MonomialOrder, One, QPoly};

use crate::LabError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

/// `A_n` (n >= 1), `D_n` (n >= 4) or `E_6`, `E_7`, `E_8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingularityClass {
    family: Family,
    index: u32,
}

impl SingularityClass {
    pub fn new(family: Family, index: u32) -> Result<Self, LabError> {
        let valid = match family {
            Family::A => index >= 1,
            Family::D => index >= 4,
            Family::E => (6..=8).contains(&index),
        };
        if !valid {
            let letter = match family {
                Family::A => 'A',
                Family::D => 'D',
                Family::E => 'E',
            };
            return Err(LabError::InvalidClass(format!("{}{}", letter, index)));
        }
        Ok(SingularityClass { family, index })
    }

    pub fn a(n: u32) -> Self {
        Self::new(Family::A, n).expect("A index")
    }

    pub fn d(n: u32) -> Self {
        Self::new(Family::D, n).expect("D index")
    }

    pub fn e(n: u32) -> Self {
        Self::new(Family::E, n).expect("E index")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The index, which is also the Milnor number.
    pub fn index(&self) -> u32 {
        self.index
    }

    /// Smallest number of variables in which the class is a curve germ or
    /// a point of the line.
    pub fn min_arity(&self) -> usize {
        match self.family {
            Family::A => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for SingularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.family {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        };
        write!(f, "{}{}", letter, self.index)
    }
}

impl FromStr for SingularityClass {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, LabError> {
        let bad = || LabError::InvalidClass(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let index: u32 = rest.parse().map_err(|_| bad())?;
        Self::new(family, index).map_err(|_| bad())
    }
}

/// Default variable names: `z`, `y,z`, `x,y,z`, `x,y,z,t`, then `x1..xm`.
/// The curve part of a normal form always sits in the last two.
pub fn curve_names(arity: usize) -> Vec<String> {
    let names: &[&str] = match arity {
        1 => &["z"],
        2 => &["y", "z"],
        3 => &["x", "y", "z"],
        4 => &["x", "y", "z", "t"],
        _ => return (1..=arity).map(|i| format!("x{}", i)).collect(),
    };
    names.iter().map(|s| s.to_string()).collect()
}

/// The class's curve polynomial in the last one or two variables plus the
/// squares of the others.
pub fn normal_form(cls: SingularityClass, ambient_dim: usize) -> Result<QPoly, LabError> {
    if ambient_dim < cls.min_arity() {
        return Err(LabError::AmbientTooSmall { class: cls, min: cls.min_arity() });
    }
    let n = ambient_dim;
    let mono = |exps: &[(usize, u32)]| {
        let mut e = vec![0u32; n];
        for &(i, k) in exps {
            e[i] = k;
        }
        (Monomial::new(e), BigRational::one())
    };
    let z = n - 1;
    let k = cls.index;
    let mut terms: Vec<(Monomial, BigRational)> = Vec::new();
    let squares = match cls.family {
        Family::A => n - 1,
        _ => n - 2,
    };
    for i in 0..squares {
        terms.push(mono(&[(i, 2)]));
    }
    match cls.family {
        Family::A => terms.push(mono(&[(z, k + 1)])),
        Family::D => {
            terms.push(mono(&[(z - 1, 2), (z, 1)]));
            terms.push(mono(&[(z, k - 1)]));
        }
        Family::E => {
            terms.push(mono(&[(z - 1, 3)]));
            match k {
                6 => terms.push(mono(&[(z, 4)])),
                7 => terms.push(mono(&[(z - 1, 1), (z, 3)])),
                _ => terms.push(mono(&[(z, 5)])),
            }
        }
    }
    Ok(QPoly::from_terms(n, MonomialOrder::neg_grevlex(), terms))
}
