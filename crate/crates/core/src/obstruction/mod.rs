//! Linear constraints on a section of `P_{n+1}(N_g) -> P_n(N_g)` modulo the
//! commutator subgroup of the kernel, and their integer solvability.
//!
//! A section sends each generator `x` to `x` times a tail in `K/H`. The tail
//! coordinates are the unknowns: `alpha`/`beta` for `B[i,j]` (on `KRho`/`KB`),
//! `gamma`/`eta` for `r[k,l]` (on `KRho`/`KB`). Every relation `lhs = rhs`
//! of `P_n(N_g)` yields `tail(rhs) - tail(lhs) = kappa(relation)`, one scalar
//! equation per basis coordinate.

mod ansatz;
mod consequences;
mod constraints;
mod verdict;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::action::ActionMatrix;

pub use ansatz::{build_ansatz, SectionAnsatz};
pub use consequences::{check_consequences, Consequence, ConsequenceInstance, ConsequenceReport};
pub use constraints::{generate_constraints, ConstraintSystem, RowProvenance};
pub use verdict::{
    check_splitting, check_splitting_with, Diagnostics, FormDiagnostic, Outcome, Verdict,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("invalid parameters n = {n}, g = {g}: need n >= 1 and g >= 2")]
    InvalidParameters { n: usize, g: usize },
    #[error("the consequence check needs n >= 2 and g >= 3, got n = {n}, g = {g}")]
    ConsequenceRange { n: usize, g: usize },
}

/// A tail coordinate of the section ansatz.
///
/// Declaration order of the variants and fields is the column order of
/// every constraint matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Unknown {
    /// `KRho(r)` coordinate of the tail of `B[i,j]`.
    Alpha { i: usize, j: usize, r: usize },
    /// `KB(q)` coordinate of the tail of `B[i,j]`, `q <= n-1`.
    Beta { i: usize, j: usize, q: usize },
    /// `KRho(r)` coordinate of the tail of `r[k,l]`.
    Gamma { k: usize, l: usize, r: usize },
    /// `KB(q)` coordinate of the tail of `r[k,l]`, `q <= n-1`.
    Eta { k: usize, l: usize, q: usize },
}

impl fmt::Display for Unknown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Unknown::Alpha { i, j, r } => write!(f, "alpha({i},{j},{r})"),
            Unknown::Beta { i, j, q } => write!(f, "beta({i},{j},{q})"),
            Unknown::Gamma { k, l, r } => write!(f, "gamma({k},{l},{r})"),
            Unknown::Eta { k, l, q } => write!(f, "eta({k},{l},{q})"),
        }
    }
}

/// `constant + sum coeff * unknown`; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub constant: BigInt,
    terms: BTreeMap<Unknown, BigInt>,
}

impl LinearForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self {
            constant: c.into(),
            terms: BTreeMap::new(),
        }
    }

    pub fn var(u: Unknown) -> Self {
        let mut f = Self::zero();
        f.add_term(u, &BigInt::one());
        f
    }

    pub fn terms(&self) -> &BTreeMap<Unknown, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, u: &Unknown) -> BigInt {
        self.terms.get(u).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.terms.is_empty()
    }

    pub fn add_term(&mut self, u: Unknown, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(u).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&u);
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &LinearForm, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        self.constant += &other.constant * c;
        for (u, v) in &other.terms {
            self.add_term(*u, &(v * c));
        }
    }

    pub fn scale(&self, c: &BigInt) -> LinearForm {
        let mut out = LinearForm::zero();
        out.add_scaled(self, c);
        out
    }

    /// Value under an assignment of all unknowns.
    pub fn evaluate(&self, value: &dyn Fn(&Unknown) -> BigInt) -> BigInt {
        self.terms
            .iter()
            .fold(self.constant.clone(), |acc, (u, c)| acc + c * value(u))
    }
}

impl Add for LinearForm {
    type Output = LinearForm;
    fn add(mut self, rhs: LinearForm) -> LinearForm {
        self.add_scaled(&rhs, &BigInt::one());
        self
    }
}

impl Sub for LinearForm {
    type Output = LinearForm;
    fn sub(mut self, rhs: LinearForm) -> LinearForm {
        self.add_scaled(&rhs, &-BigInt::one());
        self
    }
}

impl Neg for LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        self.scale(&-BigInt::one())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut emit =
            |f: &mut fmt::Formatter<'_>, c: &BigInt, name: Option<String>| -> fmt::Result {
                let neg = c.is_negative();
                let mag = c.abs();
                if first {
                    if neg {
                        write!(f, "-")?;
                    }
                } else {
                    write!(f, " {} ", if neg { '-' } else { '+' })?;
                }
                first = false;
                match name {
                    Some(n) if mag.is_one() => write!(f, "{n}"),
                    Some(n) => write!(f, "{mag} {n}"),
                    None => write!(f, "{mag}"),
                }
            };
        for (u, c) in &self.terms {
            emit(f, c, Some(u.to_string()))?;
        }
        if !self.constant.is_zero() || self.terms.is_empty() {
            emit(f, &self.constant, None)?;
        }
        Ok(())
    }
}

/// A vector of linear forms over the kernel basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicVector(pub Vec<LinearForm>);

impl SymbolicVector {
    pub fn zero(rank: usize) -> Self {
        Self(vec![LinearForm::zero(); rank])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[LinearForm] {
        &self.0
    }

    /// Matrix times vector, coordinatewise over the forms.
    pub fn apply(&self, m: &ActionMatrix) -> SymbolicVector {
        let mat = m.matrix();
        assert_eq!(
            mat.cols(),
            self.len(),
            "matrix and vector dimensions differ"
        );
        SymbolicVector(
            (0..mat.rows())
                .map(|r| {
                    let mut acc = LinearForm::zero();
                    for (c, form) in self.0.iter().enumerate() {
                        acc.add_scaled(form, mat.get(r, c));
                    }
                    acc
                })
                .collect(),
        )
    }
}

impl Add for SymbolicVector {
    type Output = SymbolicVector;
    fn add(self, rhs: SymbolicVector) -> SymbolicVector {
        assert_eq!(self.len(), rhs.len(), "symbolic vector length mismatch");
        SymbolicVector(self.0.into_iter().zip(rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for SymbolicVector {
    type Output = SymbolicVector;
    fn sub(self, rhs: SymbolicVector) -> SymbolicVector {
        self + (-rhs)
    }
}

impl Neg for SymbolicVector {
    type Output = SymbolicVector;
    fn neg(self) -> SymbolicVector {
        SymbolicVector(self.0.into_iter().map(Neg::neg).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_order_is_kind_then_indices() {
        let mut v = [
            Unknown::Eta { k: 1, l: 1, q: 1 },
            Unknown::Gamma { k: 1, l: 2, r: 1 },
            Unknown::Gamma { k: 1, l: 1, r: 3 },
            Unknown::Beta { i: 1, j: 2, q: 1 },
            Unknown::Alpha { i: 2, j: 3, r: 1 },
            Unknown::Alpha { i: 1, j: 3, r: 2 },
        ];
        v.sort();
        let names: Vec<String> = v.iter().map(ToString::to_string).collect();
        assert_eq!(
            names,
            [
                "alpha(1,3,2)",
                "alpha(2,3,1)",
                "beta(1,2,1)",
                "gamma(1,1,3)",
                "gamma(1,2,1)",
                "eta(1,1,1)"
            ]
        );
    }

    #[test]
    fn forms_drop_zero_terms_and_print() {
        let g = Unknown::Gamma { k: 2, l: 2, r: 1 };
        let e = Unknown::Eta { k: 2, l: 2, q: 1 };
        let f = LinearForm::var(g) + LinearForm::var(e).scale(&BigInt::from(2))
            - LinearForm::constant(1);
        assert_eq!(f.to_string(), "gamma(2,2,1) + 2 eta(2,2,1) - 1");
        let z = f.clone() - f;
        assert!(z.is_zero());
        assert!(z.terms().is_empty());
        assert_eq!(z.to_string(), "0");
        assert_eq!((-LinearForm::var(g)).to_string(), "-gamma(2,2,1)");
    }
}
