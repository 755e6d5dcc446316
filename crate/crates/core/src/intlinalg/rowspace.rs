use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::hnf::echelonize;
use super::{IntMatrix, LinalgError};

/// Row space of the augmented matrix `[a | b]` of a linear system, kept as
/// the nonzero rows of its Hermite normal form.
///
/// The rows form a basis over the rationals and a lattice basis over the
/// integers, so membership coefficients are unique.
#[derive(Debug, Clone)]
pub struct AffineRowSpace {
    vars: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

/// Whether `c * x = d` follows from the system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Implication {
    /// `(c | d)` lies in the rational span of `[a | b]`.
    pub implied: bool,
    /// Least `m >= 1` with `m * (c | d)` an integer combination of the rows
    /// of `[a | b]`; `None` when not implied.
    pub lattice_multiplier: Option<BigInt>,
}

impl AffineRowSpace {
    pub fn new(a: &IntMatrix, b: &[BigInt]) -> Result<Self, LinalgError> {
        if b.len() != a.rows() {
            return Err(LinalgError::Dimension(format!(
                "{} rows but right-hand side of length {}",
                a.rows(),
                b.len()
            )));
        }
        let vars = a.cols();
        let mut rows: Vec<Vec<BigInt>> = a
            .row_vecs()
            .iter()
            .zip(b)
            .filter(|(row, bi)| !bi.is_zero() || row.iter().any(|v| !v.is_zero()))
            .map(|(row, bi)| {
                let mut r = row.clone();
                r.push(bi.clone());
                r
            })
            .collect();
        rows.sort();
        rows.dedup();
        let pivots = echelonize(&mut rows, vars + 1, None);
        rows.truncate(pivots.len());
        Ok(Self { vars, rows, pivots })
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// False when `0 = 1` is a rational consequence of the system.
    pub fn is_rationally_consistent(&self) -> bool {
        self.pivots.last() != Some(&self.vars)
    }

    /// Coefficients `z` with `z * rows = target`, if any.
    fn express(&self, target: &[BigInt]) -> Option<Vec<BigRational>> {
        let mut t: Vec<BigRational> = target
            .iter()
            .cloned()
            .map(BigRational::from_integer)
            .collect();
        let mut z = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let coeff = &t[p] / BigRational::from_integer(row[p].clone());
            if !coeff.is_zero() {
                for (slot, v) in t.iter_mut().zip(row).skip(p) {
                    if !v.is_zero() {
                        *slot -= &coeff * BigRational::from_integer(v.clone());
                    }
                }
            }
            z.push(coeff);
        }
        t.iter().all(Zero::is_zero).then_some(z)
    }

    /// Does `coeffs * x = value` follow from the system?
    pub fn implies(&self, coeffs: &[BigInt], value: &BigInt) -> Implication {
        assert_eq!(
            coeffs.len(),
            self.vars,
            "coefficient vector has wrong length"
        );
        let mut target = coeffs.to_vec();
        target.push(value.clone());
        match self.express(&target) {
            None => Implication {
                implied: false,
                lattice_multiplier: None,
            },
            Some(z) => {
                let m = z.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                Implication {
                    implied: true,
                    lattice_multiplier: Some(m),
                }
            }
        }
    }

    /// The value of `coeffs * x` shared by every rational solution, when the
    /// system is consistent and determines it.
    pub fn forced_value(&self, coeffs: &[BigInt]) -> Option<BigRational> {
        assert_eq!(
            coeffs.len(),
            self.vars,
            "coefficient vector has wrong length"
        );
        if !self.is_rationally_consistent() {
            return None;
        }
        let mut target = coeffs.to_vec();
        target.push(BigInt::zero());
        // reduce only against the variable part; the last column collects the value
        let mut t: Vec<BigRational> = target.into_iter().map(BigRational::from_integer).collect();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let coeff = &t[p] / BigRational::from_integer(row[p].clone());
            if coeff.is_zero() {
                continue;
            }
            for (slot, v) in t.iter_mut().zip(row).skip(p) {
                if !v.is_zero() {
                    *slot -= &coeff * BigRational::from_integer(v.clone());
                }
            }
        }
        let (head, last) = t.split_at(self.vars);
        head.iter().all(Zero::is_zero).then(|| -last[0].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn forced_value_and_implication() {
        // x + y = 1, x - y = 0  =>  x = 1/2, 2x = 1 with multiplier 1
        let a = IntMatrix::from_i64(&[&[1, 1], &[1, -1]]);
        let s = AffineRowSpace::new(&a, &ints(&[1, 0])).unwrap();
        assert!(s.is_rationally_consistent());
        assert_eq!(
            s.forced_value(&ints(&[1, 0])),
            Some(BigRational::new(1.into(), 2.into()))
        );
        let imp = s.implies(&ints(&[2, 0]), &BigInt::from(1));
        assert!(imp.implied);
        assert_eq!(imp.lattice_multiplier, Some(BigInt::one()));
        let imp = s.implies(&ints(&[1, 0]), &BigInt::from(0));
        assert!(!imp.implied);
    }

    #[test]
    fn lattice_multiplier_above_one() {
        // 2x = 2 implies x = 1 only after halving
        let a = IntMatrix::from_i64(&[&[2, 0]]);
        let s = AffineRowSpace::new(&a, &ints(&[2])).unwrap();
        let imp = s.implies(&ints(&[1, 0]), &BigInt::from(1));
        assert_eq!(imp.lattice_multiplier, Some(BigInt::from(2)));
        assert_eq!(s.forced_value(&ints(&[0, 1])), None);
    }

    #[test]
    fn inconsistent_system() {
        let a = IntMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        let s = AffineRowSpace::new(&a, &ints(&[0, 1])).unwrap();
        assert!(!s.is_rationally_consistent());
        assert_eq!(s.forced_value(&ints(&[1, 0])), None);
    }
}
